"""Column-by-column dynamic program over a bubble model.

For column ``j`` and row ``i`` the table entry ``F[i][x, x']`` is the best cut
value of the subgraph made of rows ``1..i`` of column ``j`` plus every column
to the right, given ``x`` chosen vertices among rows ``1..i`` of column ``j``
and ``x'`` among rows ``1..i`` of column ``j + 1``. Columns are scanned right
to left, rows bottom-up (ascending). Bubble members are twins, so a cut is
fully described by how many vertices of each bubble it takes.

This module runs that recurrence exactly as stated, with instrumentation.
The recurrence never ties the ``x'`` counts back to the cut chosen for column
``j + 1`` itself, so on some models it reports more than the true maximum;
:mod:`bubblecut.exact` holds the solver that conditions on full column
profiles and is what :func:`solve_max_cut` uses by default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .bubble import BubbleModel, _check

NEG = np.iinfo(np.int64).min // 4


@dataclass
class SolveResult:
    max_cut_size: int
    cut: np.ndarray | None = None
    op_count: int = 0
    summary_op_count: int = 0
    method: str = "exact"

    def cut_vertices(self) -> list[int] | None:
        return None if self.cut is None else np.flatnonzero(self.cut).tolist()


@dataclass
class DPTable:
    """Rows of ``F`` for one column, with traceback choices.

    ``values[0]`` is the 1x1 table holding the summary of the next column;
    ``values[i]`` has shape ``(X_i + 1, X'_i + 1)`` where ``X_i`` and ``X'_i``
    are the sizes of rows ``1..i`` in columns ``j`` and ``j + 1``.
    ``choices[i]`` holds the argmax ``(s, s')`` arrays for row ``i``.
    """

    column: int
    sizes: list[int]
    next_sizes: list[int]
    values: list[np.ndarray] = field(default_factory=list)
    choices: list[tuple[np.ndarray, np.ndarray] | None] = field(default_factory=list)
    summary: int = 0
    summary_arg: tuple[int, int] = (0, 0)

    def prefix(self, i: int) -> tuple[int, int]:
        return sum(self.sizes[:i]), sum(self.next_sizes[:i])

    def to_dict(self) -> dict:
        return {
            "column": self.column,
            "sizes": self.sizes,
            "next_sizes": self.next_sizes,
            "F": [v.tolist() for v in self.values],
            "summary": self.summary,
            "summary_arg": list(self.summary_arg),
        }


def cross_terms(s: int, s2: int, x: int, x2: int, b: int, prev: int, prev2: int) -> tuple[int, int, int]:
    """Crossing-edge counts contributed by adding one bubble of size ``b``.

    ``s`` of its vertices are chosen; ``x - s`` of the ``prev`` vertices in the
    earlier rows of the same column are chosen, and ``x2 - s2`` of the
    ``prev2`` earlier-row vertices of the next column. Returns the cut edges
    inside the bubble, towards the same column, and towards the next column.
    """
    if not (0 <= s <= b and 0 <= x - s <= prev and 0 <= x2 - s2 <= prev2):
        raise ValueError(f"infeasible arguments s={s} s'={s2} x={x} x'={x2} b={b} prev={prev} prev'={prev2}")
    rest = b - s
    e2 = s * rest
    e3 = s * (prev - (x - s)) + rest * (x - s)
    e4 = s * (prev2 - (x2 - s2)) + rest * (x2 - s2)
    return e2, e3, e4


def calculate_opt(prev_table: np.ndarray, x: int, x2: int, b: int, b2: int, prev: int, prev2: int) -> tuple[int, tuple[int, int]]:
    """One table entry: ``F[i][x, x']`` from the filled row ``prev_table = F[i-1]``.

    ``b`` and ``b2`` are the sizes of bubble ``(i, j)`` and ``(i, j+1)``;
    ``prev`` and ``prev2`` the sizes of rows ``1..i-1`` of those columns.
    Returns the value and the lexicographically smallest maximizing
    ``(s, s')``. Raises ``ValueError`` when no ``(s, s')`` is feasible.
    """
    best, arg = None, None
    for s in range(max(0, x - prev), min(b, x) + 1):
        for s2 in range(max(0, x2 - prev2), min(b2, x2) + 1):
            val = int(prev_table[x - s, x2 - s2]) - b * s2 + s * (prev + prev2 - 2 * x - 2 * x2 + s + 2 * s2)
            assert val + b * (x + x2) - int(prev_table[x - s, x2 - s2]) == sum(cross_terms(s, s2, x, x2, b, prev, prev2))
            if best is None or val > best:
                best, arg = val, (s, s2)
    if best is None:
        raise ValueError(f"no feasible choice for x={x}, x'={x2}")
    return best + b * (x + x2), arg


def _row_step(prev_table: np.ndarray, b: int, b2: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Vectorized calculate_opt over a whole row; returns values, argmaxes, iterations."""
    X, X2 = prev_table.shape[0] - 1, prev_table.shape[1] - 1
    shape = (X + b + 1, X2 + b2 + 1)
    best = np.full(shape, NEG, dtype=np.int64)
    arg_s = np.zeros(shape, dtype=np.int32)
    arg_s2 = np.zeros(shape, dtype=np.int32)
    xs = np.arange(shape[0], dtype=np.int64)[:, None]
    x2s = np.arange(shape[1], dtype=np.int64)[None, :]
    for s in range(b + 1):
        rows = slice(s, s + X + 1)
        xpart = prev_table - 2 * s * xs[rows]
        for s2 in range(b2 + 1):
            cols = slice(s2, s2 + X2 + 1)
            val = xpart - 2 * s * x2s[:, cols] + (s * (X + X2 + s + 2 * s2) - b * s2)
            region = best[rows, cols]
            better = val > region
            region[better] = val[better]
            arg_s[rows, cols][better] = s
            arg_s2[rows, cols][better] = s2
    ops = (b + 1) * (b2 + 1) * (X + 1) * (X2 + 1)
    return best + b * (xs + x2s), arg_s, arg_s2, ops


def column_table(column: int, sizes: list[int], next_sizes: list[int], start: int) -> tuple[DPTable, int]:
    """Fill every row of one column; ``start`` is the summary of the column to its right."""
    next_sizes = (list(next_sizes) + [0] * len(sizes))[: len(sizes)]
    tbl = DPTable(column, list(sizes), next_sizes)
    tbl.values.append(np.array([[start]], dtype=np.int64))
    tbl.choices.append(None)
    ops = 0
    for b, b2 in zip(sizes, next_sizes):
        vals, s, s2, k = _row_step(tbl.values[-1], b, b2)
        tbl.values.append(vals)
        tbl.choices.append((s, s2))
        ops += k
    return tbl, ops


def summarize_column(tbl: DPTable) -> tuple[int, int]:
    """Maximum of the final row, stored with its argmax; returns (value, entries scanned)."""
    last = tbl.values[-1]
    flat = int(np.argmax(last))  # first maximum in row-major order
    tbl.summary_arg = tuple(int(a) for a in np.unravel_index(flat, last.shape))
    tbl.summary = int(last.flat[flat])
    return tbl.summary, last.size if len(tbl.values) > 1 else 0


def traceback_counts(tbl: DPTable) -> list[int]:
    """Per-bubble chosen counts for the table's own column."""
    x, x2 = tbl.summary_arg
    counts = [0] * len(tbl.sizes)
    for i in range(len(tbl.sizes), 0, -1):
        s_arr, s2_arr = tbl.choices[i]
        s, s2 = int(s_arr[x, x2]), int(s2_arr[x, x2])
        counts[i - 1] = s
        x, x2 = x - s, x2 - s2
    return counts


def recurrence_tables(m: BubbleModel) -> tuple[list[DPTable], int, int]:
    """All column tables, right to left, with iteration and summary counters."""
    _check(m)
    sizes = m.size_matrix(pad=1)
    tables: list[DPTable] = []
    summary, ops, sum_ops = 0, 0, 0  # column k+1 is empty
    for j in range(m.k, 0, -1):
        tbl, k = column_table(j, sizes[j - 1], sizes[j], summary)
        summary, scanned = summarize_column(tbl)
        tables.append(tbl)
        ops += k
        sum_ops += scanned
    tables.reverse()
    return tables, ops, sum_ops


def solve_recurrence(m: BubbleModel, want_cut: bool = False) -> SolveResult:
    tables, ops, sum_ops = recurrence_tables(m)
    value = tables[0].summary if tables else 0
    cut = None
    if want_cut:
        cut = np.zeros(m.n, dtype=bool)
        for tbl in tables:
            for bub, cnt in zip(m.columns[tbl.column - 1], traceback_counts(tbl)):
                cut[list(bub[:cnt])] = True
    return SolveResult(value, cut, ops, sum_ops, method="recurrence")


def dump_tables(m: BubbleModel) -> str:
    """JSON dump of every column table, for golden tests and debugging."""
    tables, _, _ = recurrence_tables(m)
    return json.dumps([t.to_dict() for t in tables], sort_keys=True)


def count_bound(m: BubbleModel) -> int:
    """Sum over columns of c_j^2 * c_{j+1}^2, with an empty column after the last."""
    c = [m.column_size(j) for j in range(1, m.k + 2)]
    return sum(a * a * b * b for a, b in zip(c, c[1:]))


def solve_max_cut(m: BubbleModel, want_cut: bool = False, method: str = "exact") -> SolveResult:
    """Maximum cut of the graph realized by ``m``.

    ``method="exact"`` conditions on whole column profiles and always returns
    the true optimum. ``method="recurrence"`` runs the row-by-row recurrence
    as stated, which is polynomial but can overestimate.
    """
    if method == "exact":
        from .exact import solve_exact

        return solve_exact(m, want_cut)
    if method == "recurrence":
        return solve_recurrence(m, want_cut)
    raise ValueError(f"unknown method {method!r}")
