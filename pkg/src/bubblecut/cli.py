"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 not a proper interval graph,
3 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import fit_exponent, run_bench
from .bubble import BubbleModel, build_bubble_model, random_model, realize_graph, umbrella_ordering, validate_model
from .dp import count_bound, solve_max_cut
from .exact import SolverLimitError
from .graph import ParseError, cut_size, format_edge_list, parse_edge_list
from .oracle import OracleRefusal, verify_dp

EXIT_OK, EXIT_INPUT, EXIT_NOT_PIG, EXIT_VERIFY = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_INPUT) from None


def _recognize(text: bytes) -> BubbleModel:
    try:
        g = parse_edge_list(text)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_INPUT) from None
    model = build_bubble_model(g)
    if model is None:
        stage = "no umbrella ordering" if umbrella_ordering(g) is None else "bubble model construction"
        raise CliError(f"not a proper interval graph (failed at: {stage})", EXIT_NOT_PIG)
    return model


def _load_model(text: bytes) -> BubbleModel:
    try:
        model = BubbleModel.from_json(text)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_INPUT) from None
    bad = validate_model(model)
    if bad is not None:
        raise CliError(f"invalid bubble model: {bad}", EXIT_INPUT)
    return model


def cmd_solve(args) -> int:
    text = _read(args.input)
    model = _recognize(text) if args.format == "edges" else _load_model(text)
    try:
        res = solve_max_cut(model, want_cut=args.emit_cut)
    except SolverLimitError as exc:
        raise CliError(f"exact solver limit: {exc}", EXIT_INPUT) from None
    if args.emit_cut and cut_size(realize_graph(model), res.cut) != res.max_cut_size:
        raise CliError("reconstructed cut does not reproduce the reported size", EXIT_VERIFY)
    if args.json:
        rec = solve_max_cut(model, method="recurrence")
        out = {
            "n": model.n,
            "maxcut": res.max_cut_size,
            "op_count": res.op_count,
            "recurrence": {
                "maxcut": rec.max_cut_size,
                "op_count": rec.op_count,
                "summary_op_count": rec.summary_op_count,
                "count_bound": count_bound(model),
            },
        }
        if args.emit_cut:
            out["cut"] = res.cut_vertices()
        print(_dumps(out))
    else:
        print(f"maxcut {res.max_cut_size}")
        if args.emit_cut:
            print("cut " + " ".join(map(str, res.cut_vertices())))
    return EXIT_OK


def cmd_recognize(args) -> int:
    model = _recognize(_read(args.input))
    print(model.to_json(indent=2))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n < 1:
        raise CliError("--n must be at least 1", EXIT_INPUT)
    model = random_model(args.n, args.seed, columns=args.columns, empty_rate=args.empty_rate)
    if args.format == "bubbles":
        print(model.to_json(indent=2))
    else:
        sys.stdout.write(format_edge_list(realize_graph(model)))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify_dp(args.trials, args.max_n, args.seed)
    except OracleRefusal as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    print(_dumps(report.to_dict()))
    print(f"{report.trials} trials in {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else 1


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        records = run_bench(sizes, args.seed)
    except ValueError as exc:
        raise CliError(f"bad --sizes: {exc}", EXIT_INPUT) from None
    slope = fit_exponent(records)
    if args.json:
        print(_dumps({"records": [r.to_dict() for r in records], "fitted_exponent": slope}))
        for r in records:
            print(f"n={r.n} wall_time={r.wall_time:.3f}s", file=sys.stderr)
    else:
        print(f"{'n':>6} {'op_count':>14} {'bound':>16} {'time':>9}")
        for r in records:
            print(f"{r.n:>6} {r.op_count:>14} {r.bound:>16} {r.wall_time:>8.3f}s")
        print("fitted exponent: " + ("n/a" if slope is None else f"{slope:.3f}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bubblecut", description="Maximum cut of proper interval graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the maximum cut size")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["edges", "bubbles"], required=True)
    p.add_argument("--emit-cut", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("recognize", help="print a bubble model of an edge-list graph")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", help="generate a random bubble model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--columns", type=int, default=None)
    p.add_argument("--empty-rate", type=float, default=0.2)
    p.add_argument("--format", choices=["bubbles", "edges"], required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="cross-check the solver against brute force")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="operation counts on dense models")
    p.add_argument("--sizes", required=True, help="comma-separated ascending sizes")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
