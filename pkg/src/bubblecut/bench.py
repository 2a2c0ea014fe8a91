"""Operation-count sweeps for the row recurrence."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .bubble import dense_model
from .dp import count_bound, solve_max_cut


@dataclass
class BenchRecord:
    n: int
    op_count: int
    summary_op_count: int
    bound: int
    wall_time: float

    @property
    def within_bound(self) -> bool:
        return self.op_count <= max(self.bound, self.n**4)

    def to_dict(self, canonical: bool = True) -> dict:
        out = {
            "n": self.n,
            "op_count": self.op_count,
            "summary_op_count": self.summary_op_count,
            "bound": self.bound,
            "within_bound": self.within_bound,
        }
        if not canonical:
            out["wall_time"] = self.wall_time
        return out


def run_bench(sizes: list[int], seed: int) -> list[BenchRecord]:
    """Solve one dense model per size with the instrumented recurrence."""
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    records = []
    for n in sizes:
        m = dense_model(n, seed)
        start = time.perf_counter()
        res = solve_max_cut(m, method="recurrence")
        records.append(BenchRecord(n, res.op_count, res.summary_op_count, count_bound(m), time.perf_counter() - start))
    return records


def fit_exponent(records: list[BenchRecord]) -> float | None:
    """Least-squares slope of log(op_count) against log(n); None below two sizes."""
    pts = [(r.n, r.op_count) for r in records if r.n > 0 and r.op_count > 0]
    if len(pts) < 2:
        return None
    a = np.log(np.array(pts, dtype=float))
    return float(np.polyfit(a[:, 0], a[:, 1], 1)[0])
