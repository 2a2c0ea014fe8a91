"""Brute-force references for checking the solvers and the recognizer."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bubble import BubbleModel, random_model, realize_graph
from .dp import solve_max_cut
from .graph import Graph

MAX_BRUTE_FORCE_N = 24
MAX_ORDERING_N = 8


class OracleRefusal(ValueError):
    """Raised when an instance exceeds an exhaustive oracle's size cap."""


def brute_force_max_cut(g: Graph, cap: int = MAX_BRUTE_FORCE_N) -> int:
    """Maximum cut by enumerating every cut that puts vertex 0 in S."""
    if g.n > cap:
        raise OracleRefusal(f"brute force is capped at n={cap}, got n={g.n}")
    if g.n <= 1 or not g.edges:
        return 0
    # cut(S) = sum over v in S of |N(v) \ S|; S is a bitmask over vertices
    nbr = np.zeros(g.n, dtype=np.uint64)
    for v in range(g.n):
        for u in g.neighbors(v):
            nbr[v] |= np.uint64(1 << u)
    deg = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)
    best = 0
    chunk = 1 << 18
    total = 1 << (g.n - 1)
    for lo in range(0, total, chunk):
        masks = (np.arange(lo, min(lo + chunk, total), dtype=np.uint64) << np.uint64(1)) | np.uint64(1)
        size = np.zeros(len(masks), dtype=np.int64)
        for v in range(g.n):
            inside = ((masks >> np.uint64(v)) & np.uint64(1)).astype(bool)
            same = np.bitwise_count(masks & nbr[v]).astype(np.int64)
            size += np.where(inside, deg[v] - same, 0)
        best = max(best, int(size.max()))
    return best


def exhaustive_proper_interval_check(g: Graph, cap: int = MAX_ORDERING_N) -> bool:
    """Whether some vertex ordering has the umbrella property.

    Backtracking over prefixes: appending ``t`` after ``p < q`` fails when
    ``p ~ t`` but ``p !~ q`` or ``q !~ t``.
    """
    if g.n > cap:
        raise OracleRefusal(f"exhaustive ordering search is capped at n={cap}, got n={g.n}")
    adj = [[g.has_edge(u, v) for v in range(g.n)] for u in range(g.n)]

    def extend(prefix: list[int], left: set[int]) -> bool:
        if not left:
            return True
        for t in sorted(left):
            ok = all(
                adj[p][q] and adj[q][t]
                for a, p in enumerate(prefix) if adj[p][t]
                for q in prefix[a + 1:]
            )
            if ok:
                prefix.append(t)
                left.discard(t)
                if extend(prefix, left):
                    return True
                left.add(t)
                prefix.pop()
        return False

    return extend([], set(range(g.n)))


@dataclass
class Mismatch:
    seed: int
    model: BubbleModel
    dp_value: int
    oracle_value: int

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "model": self.model.to_dict(),
            "dp_value": self.dp_value,
            "oracle_value": self.oracle_value,
        }


@dataclass
class VerificationReport:
    """Outcome of a randomized solver-versus-oracle run.

    ``mismatches`` covers the solver under test; ``recurrence_mismatches``
    records, side by side, where the stated row recurrence disagrees with the
    oracle on the same instances.
    """

    trials: int
    mismatches: list[Mismatch] = field(default_factory=list)
    recurrence_mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self, canonical: bool = True) -> dict:
        out = {
            "trials": self.trials,
            "passed": self.passed,
            "mismatches": [mm.to_dict() for mm in self.mismatches],
            "recurrence_mismatches": [mm.to_dict() for mm in self.recurrence_mismatches],
        }
        if not canonical:
            out["elapsed"] = self.elapsed
        return out


def trial_instances(trials: int, max_n: int, seed: int) -> list[tuple[int, BubbleModel]]:
    """The deterministic (seed, model) sequence used by verify_dp."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(trials):
        n = int(rng.integers(1, max_n + 1))
        trial_seed = int(rng.integers(0, 2**62))
        out.append((trial_seed, random_model(n, trial_seed)))
    return out


def verify_dp(
    trials: int,
    max_n: int,
    seed: int,
    solver: Callable[[BubbleModel], int] | None = None,
    compare_recurrence: bool = True,
) -> VerificationReport:
    """Solve random models with the solver and the brute-force oracle, recording disagreements."""
    if max_n > MAX_BRUTE_FORCE_N:
        raise OracleRefusal(f"max_n={max_n} exceeds the brute-force cap {MAX_BRUTE_FORCE_N}")
    if solver is None:
        def solver(m):
            return solve_max_cut(m).max_cut_size
    start = time.perf_counter()
    report = VerificationReport(trials)
    for trial_seed, model in trial_instances(trials, max_n, seed):
        truth = brute_force_max_cut(realize_graph(model))
        got = solver(model)
        if got != truth:
            report.mismatches.append(Mismatch(trial_seed, model, got, truth))
        if compare_recurrence:
            rec = solve_max_cut(model, method="recurrence").max_cut_size
            if rec != truth:
                report.recurrence_mismatches.append(Mismatch(trial_seed, model, rec, truth))
    report.elapsed = time.perf_counter() - start
    return report
