"""Exact maximum cut over a bubble model by column profiles.

A profile of a column lists how many vertices of each of its bubbles lie in
the cut. Bubble members are twins, so profiles lose nothing. For columns
scanned right to left, ``V_j(q)`` is the best value of the edges inside
columns ``j..k`` given profile ``q`` of column ``j``::

    V_k(q) = t(c_k - t)
    V_j(q) = t(c_j - t) + max_p [cross(q, p) + V_{j+1}(p)]

where ``t`` is the total of ``q`` and ``cross`` counts cut edges between
column ``j`` and column ``j + 1``. The work is the sum over neighbouring
columns of the product of their profile counts, which is exponential in the
number of rows in the worst case.
"""

from __future__ import annotations

import math

import numpy as np

from .bubble import BubbleModel, _check
from .dp import SolveResult

# Largest profile-pair matrix evaluated for one column pair.
MAX_PROFILE_PAIRS = 4_000_000


class SolverLimitError(RuntimeError):
    """Raised when a model's profile space is too large for the exact solver."""


def profile_count(sizes: list[int]) -> int:
    return math.prod(b + 1 for b in sizes)


def profiles(sizes: list[int]) -> np.ndarray:
    """All count vectors for one column, in lexicographic order."""
    if not sizes:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices([b + 1 for b in sizes]).reshape(len(sizes), -1)
    return grids.T.astype(np.int64)


def cross_matrix(q: np.ndarray, sizes: list[int], p: np.ndarray, next_sizes: list[int]) -> np.ndarray:
    """Cut edges between two neighbouring columns for every profile pair.

    A vertex in row ``i`` of the left column sees the next-column vertices in
    rows ``< i``.
    """
    r = len(sizes)
    nxt = np.zeros((p.shape[0], r), dtype=np.int64)
    width = min(r, p.shape[1])
    nxt[:, :width] = p[:, :width]
    below = np.cumsum(nxt, axis=1) - nxt  # chosen next-column vertices in rows < i
    nb = np.zeros(r, dtype=np.int64)
    nb[: min(r, len(next_sizes))] = next_sizes[:r]
    below_total = np.cumsum(nb) - nb
    b = np.asarray(sizes, dtype=np.int64)
    return q @ (below_total[None, :] - below).T + (b[None, :] - q) @ below.T


def solve_exact(m: BubbleModel, want_cut: bool = False) -> SolveResult:
    _check(m)
    if m.k == 0:
        return SolveResult(0, np.zeros(0, dtype=bool) if want_cut else None, method="exact")
    sizes = m.size_matrix()
    counts = [profile_count(s) for s in sizes]
    for j in range(m.k):
        pairs = counts[j] * (counts[j + 1] if j + 1 < m.k else 1)
        if pairs > MAX_PROFILE_PAIRS:
            raise SolverLimitError(
                f"columns {j + 1} and {j + 2} need {pairs} profile pairs, limit is {MAX_PROFILE_PAIRS}"
            )

    qs = [profiles(s) for s in sizes]
    ops = 0
    best_next: list[np.ndarray | None] = [None] * m.k
    value = None
    for j in range(m.k - 1, -1, -1):
        t = qs[j].sum(axis=1)
        inner = t * (sum(sizes[j]) - t)
        if value is None:
            value = inner
            ops += len(inner)
            continue
        total = cross_matrix(qs[j], sizes[j], qs[j + 1], sizes[j + 1]) + value[None, :]
        ops += total.size
        best_next[j] = np.argmax(total, axis=1)
        value = inner + total[np.arange(total.shape[0]), best_next[j]]

    q = int(np.argmax(value))
    result = SolveResult(int(value[q]), None, ops, len(value), method="exact")
    if want_cut:
        cut = np.zeros(m.n, dtype=bool)
        for j in range(m.k):
            for bub, cnt in zip(m.columns[j], qs[j][q]):
                cut[list(bub[: int(cnt)])] = True
            if j + 1 < m.k:
                q = int(best_next[j][q])
        result.cut = cut
    return result
