import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bubblecut.bubble import BubbleModel
from bubblecut.graph import Graph, cut_from_vertices, cut_size
from bubblecut.oracle import (
    OracleRefusal,
    VerificationReport,
    brute_force_max_cut,
    exhaustive_proper_interval_check,
    trial_instances,
    verify_dp,
)

CLAW = Graph(4, [(0, 1), (0, 2), (0, 3)])


def naive_max_cut(g):
    return max(cut_size(g, cut_from_vertices(g.n, s)) for r in range(g.n + 1) for s in itertools.combinations(range(g.n), r))


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = list(itertools.combinations(range(n), 2))
    return Graph(n, draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])


def test_brute_force_examples():
    assert brute_force_max_cut(Graph.path(4)) == 3
    assert brute_force_max_cut(Graph.complete(4)) == 4
    assert brute_force_max_cut(Graph(1)) == 0
    assert brute_force_max_cut(Graph(0)) == 0


@given(small_graphs())
@settings(max_examples=80)
def test_brute_force_matches_naive_enumeration(g):
    assert brute_force_max_cut(g) == naive_max_cut(g)


@given(small_graphs(), st.randoms())
@settings(max_examples=40)
def test_brute_force_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert brute_force_max_cut(g.relabel(perm)) == brute_force_max_cut(g)


@pytest.mark.parametrize("n", range(1, 13))
def test_brute_force_cliques_and_bipartite(n):
    assert brute_force_max_cut(Graph.complete(n)) == n * n // 4
    half = n // 2
    kab = Graph(n, [(u, v) for u in range(half) for v in range(half, n)])
    assert brute_force_max_cut(kab) == kab.m


def test_brute_force_cap():
    with pytest.raises(OracleRefusal):
        brute_force_max_cut(Graph(25))
    with pytest.raises(OracleRefusal):
        brute_force_max_cut(Graph(9), cap=8)


def test_exhaustive_check_examples():
    assert not exhaustive_proper_interval_check(CLAW)
    assert not exhaustive_proper_interval_check(Graph.cycle(4))
    assert exhaustive_proper_interval_check(Graph.path(5))
    assert exhaustive_proper_interval_check(Graph(0))
    with pytest.raises(OracleRefusal):
        exhaustive_proper_interval_check(Graph(9))


def test_verify_empty_run():
    report = verify_dp(0, 12, 42)
    assert report.passed and report.to_dict() == {
        "trials": 0,
        "passed": True,
        "mismatches": [],
        "recurrence_mismatches": [],
    }


def test_verify_small_run():
    report = verify_dp(1, 3, 0)
    assert report.trials == 1 and report.passed


def test_verify_is_deterministic():
    a, b = verify_dp(30, 8, 5), verify_dp(30, 8, 5)
    assert a.to_dict() == b.to_dict()
    assert [m for _, m in trial_instances(30, 8, 5)] == [m for _, m in trial_instances(30, 8, 5)]


def test_verify_reports_recurrence_side_by_side():
    report = verify_dp(200, 8, 1)
    assert report.passed
    assert report.recurrence_mismatches
    first = report.recurrence_mismatches[0]
    assert first.dp_value > first.oracle_value


def test_verify_catches_an_injected_bug():
    report = verify_dp(20, 6, 3, solver=lambda m: -1, compare_recurrence=False)
    assert not report.passed
    mm = report.mismatches[0]
    assert BubbleModel.from_dict(mm.to_dict()["model"]) == mm.model


def test_verify_refuses_above_cap():
    with pytest.raises(OracleRefusal):
        verify_dp(1, 30, 0)


def test_report_canonical_excludes_elapsed():
    r = VerificationReport(0, elapsed=1.5)
    assert "elapsed" not in r.to_dict()
    assert r.to_dict(canonical=False)["elapsed"] == 1.5


def test_trial_sizes_cover_range():
    sizes = {m.n for _, m in trial_instances(300, 12, 42)}
    assert sizes == set(range(1, 13))
    assert np.all([m.n <= 12 for _, m in trial_instances(50, 12, 0)])
