import json

import pytest

import bubblecut.oracle
from bubblecut.bubble import BubbleModel, clique_model
from bubblecut.cli import main
from bubblecut.graph import Graph, format_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_p3_edges(capsys, write):
    path = write("p3.txt", "3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "solve", "--input", path, "--format", "edges")
    assert code == 0 and out == "maxcut 2\n"


def test_solve_k4_bubbles(capsys, write):
    path = write("k4.json", clique_model(4).to_json())
    code, out, _ = run(capsys, "solve", "--input", path, "--format", "bubbles")
    assert code == 0 and out.strip() == "maxcut 4"


def test_solve_c4_not_proper_interval(capsys, write):
    path = write("c4.txt", format_edge_list(Graph.cycle(4)))
    code, _, err = run(capsys, "solve", "--input", path, "--format", "edges")
    assert code == 2 and "not a proper interval graph" in err


def test_solve_json_with_cut(capsys, write):
    path = write("p3.txt", "3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "solve", "--input", path, "--format", "edges", "--emit-cut", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["maxcut"] == 2 and data["cut"] in ([1], [0, 2])
    assert data["recurrence"]["maxcut"] == 2


def test_solve_json_shows_recurrence_disagreement(capsys, write):
    model = BubbleModel.from_lists(3, [[[], [0]], [[1, 2]]])
    path = write("k3split.json", model.to_json())
    data = json.loads(run(capsys, "solve", "--input", path, "--format", "bubbles", "--json")[1])
    assert data["maxcut"] == 2 and data["recurrence"]["maxcut"] == 3


@pytest.mark.parametrize(
    "text, fmt",
    [("2 1\n0 0\n", "edges"), ("{", "bubbles"), ('{"n": 2, "columns": [[{"row": 1, "vertices": [0]}]]}', "bubbles")],
)
def test_solve_input_errors(capsys, write, text, fmt):
    path = write("bad", text)
    code, _, err = run(capsys, "solve", "--input", path, "--format", fmt)
    assert code == 1 and err.startswith("error:")


def test_solve_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "solve", "--input", str(tmp_path / "nope"), "--format", "edges")
    assert code == 1 and "cannot read" in err


def test_solve_edges_equals_solve_on_recognized_model(capsys, write):
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)])
    edges = write("g.txt", format_edge_list(g))
    code, model_json, _ = run(capsys, "recognize", "--input", edges)
    assert code == 0
    model = write("g.json", model_json)
    a = run(capsys, "solve", "--input", edges, "--format", "edges", "--json")[1]
    b = run(capsys, "solve", "--input", model, "--format", "bubbles", "--json")[1]
    assert a == b


def test_recognize(capsys, write):
    code, out, _ = run(capsys, "recognize", "--input", write("p5.txt", format_edge_list(Graph.path(5))))
    assert code == 0 and BubbleModel.from_json(out).n == 5
    claw = write("claw.txt", "4 3\n0 1\n0 2\n0 3\n")
    assert run(capsys, "recognize", "--input", claw)[0] == 2
    code, out, _ = run(capsys, "recognize", "--input", write("empty.txt", "0 0\n"))
    assert code == 0 and json.loads(out) == {"n": 0, "columns": []}


def test_gen_formats(capsys):
    code, out, _ = run(capsys, "gen", "--n", "6", "--seed", "3", "--format", "bubbles")
    assert code == 0 and BubbleModel.from_json(out).n == 6
    code, out, _ = run(capsys, "gen", "--n", "6", "--seed", "3", "--columns", "2", "--empty-rate", "0", "--format", "edges")
    assert code == 0 and out.startswith("6 ")
    assert run(capsys, "gen", "--n", "0", "--seed", "1", "--format", "edges")[0] == 1


def test_verify_defaults_small(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "25", "--max-n", "8")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_zero_trials(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "0")
    assert code == 0 and json.loads(out)["mismatches"] == []


def test_verify_injected_bug(capsys, monkeypatch):
    real = bubblecut.oracle.solve_max_cut

    def broken(m, want_cut=False, method="exact"):
        res = real(m, want_cut, method)
        if method == "exact" and m.n >= 4:
            res.max_cut_size += 1
        return res

    monkeypatch.setattr(bubblecut.oracle, "solve_max_cut", broken)
    code, out, _ = run(capsys, "verify", "--trials", "10", "--max-n", "8", "--seed", "1")
    data = json.loads(out)
    assert code == 1 and not data["passed"]
    mm = data["mismatches"][0]
    assert mm["dp_value"] == mm["oracle_value"] + 1
    assert BubbleModel.from_dict(mm["model"]).n >= 4


def test_bench(capsys):
    code, out, err = run(capsys, "bench", "--sizes", "16,32", "--seed", "0", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["records"]) == 2
    assert all(r["within_bound"] for r in data["records"])
    assert data["fitted_exponent"] is not None
    assert "wall_time" in err


def test_bench_single_size_has_no_exponent(capsys):
    data = json.loads(run(capsys, "bench", "--sizes", "20", "--seed", "0", "--json")[1])
    assert data["fitted_exponent"] is None
    code, out, _ = run(capsys, "bench", "--sizes", "20", "--seed", "0")
    assert code == 0 and "n/a" in out


def test_bench_rejects_unsorted(capsys):
    assert run(capsys, "bench", "--sizes", "30,20", "--seed", "0")[0] == 1
