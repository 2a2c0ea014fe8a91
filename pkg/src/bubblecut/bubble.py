"""Bubble models of proper interval graphs.

A bubble model places every vertex in exactly one bubble ``(row, column)``.
Two vertices are adjacent when they share a column, or when one sits in the
column right after the other at a strictly smaller row. Rows and columns are
1-based in the JSON format and in error messages; internally ``columns[j][i]``
holds the bubble at row ``i + 1`` of column ``j + 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .graph import Graph, ParseError

# Total bubble count allowed by validate_model is BUBBLE_FACTOR * max(n, 1)**2.
BUBBLE_FACTOR = 4


class ModelError(ValueError):
    """Raised when an operation receives a structurally invalid bubble model."""


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: tuple[int, ...] = ()

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class BubbleModel:
    """Vertices ``0 .. n-1`` arranged in ``k`` columns of bubbles.

    ``columns`` is a tuple of columns, each a tuple of rows, each row a sorted
    tuple of vertex ids (possibly empty).
    """

    n: int
    columns: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_lists(cls, n: int, columns) -> BubbleModel:
        return cls(n, tuple(tuple(tuple(sorted(int(v) for v in b)) for b in col) for col in columns))

    @property
    def k(self) -> int:
        return len(self.columns)

    def rows(self, j: int) -> int:
        """Row count r_j of the 1-based column ``j``; 0 outside ``1..k``."""
        return len(self.columns[j - 1]) if 1 <= j <= self.k else 0

    def bubble(self, i: int, j: int) -> tuple[int, ...]:
        """Members of the 1-based bubble ``(i, j)``; empty when it does not exist."""
        if 1 <= j <= self.k and 1 <= i <= len(self.columns[j - 1]):
            return self.columns[j - 1][i - 1]
        return ()

    def size(self, i: int, j: int) -> int:
        return len(self.bubble(i, j))

    def column_size(self, j: int) -> int:
        if 1 <= j <= self.k:
            return sum(len(b) for b in self.columns[j - 1])
        return 0

    def size_matrix(self, pad: int = 0) -> list[list[int]]:
        """Bubble sizes per column, 0-based, with ``pad`` empty columns appended."""
        return [[len(b) for b in col] for col in self.columns] + [[] for _ in range(pad)]

    def position(self) -> dict[int, tuple[int, int]]:
        """Map each vertex to its 1-based ``(row, column)``."""
        pos = {}
        for j, col in enumerate(self.columns, 1):
            for i, bub in enumerate(col, 1):
                for v in bub:
                    pos[v] = (i, j)
        return pos

    def bubble_count(self) -> int:
        return sum(len(col) for col in self.columns)

    def flatten(self) -> list[int]:
        """Vertices column by column, rows ascending inside a column."""
        return [v for col in self.columns for bub in col for v in bub]

    def relabel(self, perm) -> BubbleModel:
        return BubbleModel.from_lists(self.n, [[[perm[v] for v in b] for b in col] for col in self.columns])

    # JSON

    def to_dict(self) -> dict[str, Any]:
        cols = []
        for col in self.columns:
            out = [{"row": i, "vertices": list(b)} for i, b in enumerate(col, 1) if b]
            if col and not col[-1]:
                out.append({"row": len(col), "vertices": []})
            cols.append(out)
        return {"n": self.n, "columns": cols}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BubbleModel:
        try:
            n = data["n"]
            raw_cols = data["columns"]
        except (KeyError, TypeError):
            raise ParseError("bubble model needs 'n' and 'columns'") from None
        if not isinstance(n, int) or n < 0:
            raise ParseError("'n' must be a non-negative integer")
        if not isinstance(raw_cols, list):
            raise ParseError("'columns' must be a list")
        columns = []
        for j, col in enumerate(raw_cols, 1):
            if not isinstance(col, list):
                raise ParseError(f"column {j} must be a list of bubbles")
            last = 0
            rows: dict[int, list[int]] = {}
            for entry in col:
                try:
                    row, verts = entry["row"], entry["vertices"]
                except (KeyError, TypeError):
                    raise ParseError(f"column {j}: bubble needs 'row' and 'vertices'") from None
                if not isinstance(row, int) or row <= last:
                    raise ParseError(f"column {j}: rows must be strictly increasing positive integers")
                if not isinstance(verts, list) or not all(isinstance(v, int) for v in verts):
                    raise ParseError(f"column {j} row {row}: vertices must be a list of integers")
                rows[row] = verts
                last = row
            columns.append([rows.get(i, []) for i in range(1, last + 1)])
        return cls.from_lists(n, columns)

    @classmethod
    def from_json(cls, text: str | bytes) -> BubbleModel:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return cls.from_dict(data)


def validate_model(m: BubbleModel, g: Graph | None = None) -> Violation | None:
    """Return the first structural violation of ``m``, or ``None`` if it is valid.

    With ``g`` given, the realized graph must also equal ``g`` edge for edge.
    """
    if m.n < 0:
        return Violation("bad-n", f"negative vertex count {m.n}")
    if m.n > 0 and m.k == 0:
        return Violation("no-columns", "a model with vertices needs at least one column")
    seen: dict[int, tuple[int, int]] = {}
    for j, col in enumerate(m.columns, 1):
        for i, bub in enumerate(col, 1):
            for v in bub:
                if not 0 <= v < m.n:
                    return Violation("bad-vertex", f"vertex {v} in bubble ({i}, {j}) is outside [0, {m.n - 1}]", (v,))
                if v in seen:
                    return Violation("duplicate-vertex", f"duplicate vertex {v}", (v,))
                seen[v] = (i, j)
    if len(seen) != m.n:
        missing = min(set(range(m.n)) - seen.keys())
        return Violation("missing-vertex", f"missing vertex {missing}", (missing,))
    limit = BUBBLE_FACTOR * max(m.n, 1) ** 2
    if m.bubble_count() > limit:
        return Violation("too-many-bubbles", f"{m.bubble_count()} bubbles exceed the limit {limit}")
    if g is not None:
        if g.n != m.n:
            return Violation("vertex-count", f"model has {m.n} vertices, graph has {g.n}")
        realized = _realized_edges(m)
        if realized != g.edges:
            extra = sorted(realized - g.edges)
            lost = sorted(g.edges - realized)
            if extra and (not lost or extra[0] < lost[0]):
                u, v = extra[0]
                return Violation("adjacency", f"adjacency mismatch: non-edge {{{u},{v}}} of the graph is adjacent in the model", (u, v))
            u, v = lost[0]
            return Violation("adjacency", f"adjacency mismatch: edge {{{u},{v}}} of the graph is missing in the model", (u, v))
    return None


def _check(m: BubbleModel) -> None:
    bad = validate_model(m)
    if bad is not None:
        raise ModelError(str(bad))


def _realized_edges(m: BubbleModel) -> frozenset[tuple[int, int]]:
    edges = set()
    for j, col in enumerate(m.columns):
        members = sorted(v for b in col for v in b)
        edges.update((u, v) for a, u in enumerate(members) for v in members[a + 1:])
        if j + 1 < m.k:
            nxt = m.columns[j + 1]
            for i, bub in enumerate(col):
                # next-column vertices with a strictly smaller row
                lower = [u for b in nxt[:i] for u in b]
                edges.update((min(u, v), max(u, v)) for v in bub for u in lower)
    return frozenset(edges)


def realize_graph(m: BubbleModel) -> Graph:
    _check(m)
    return Graph(m.n, _realized_edges(m))


# Recognition


def is_umbrella_ordering(g: Graph, order) -> bool:
    """Each closed neighbourhood occupies a contiguous block of ``order``."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    for v in range(g.n):
        ps = [pos[u] for u in g.neighbors(v)]
        ps.append(pos[v])
        if max(ps) - min(ps) != len(ps) - 1:
            return False
    return True


def lexbfs(g: Graph, prev: list[int] | None = None) -> list[int]:
    """Lexicographic breadth-first search by partition refinement.

    Without ``prev`` ties go to the lowest vertex id. With ``prev`` this is
    LexBFS+: ties go to the vertex appearing last in ``prev``.
    """
    start = list(reversed(prev)) if prev is not None else list(range(g.n))
    slices = [start] if start else []
    order = []
    while slices:
        v = slices[0].pop(0)
        if not slices[0]:
            slices.pop(0)
        order.append(v)
        nbrs = g.neighbors(v)
        refined = []
        for part in slices:
            inside = [u for u in part if u in nbrs]
            outside = [u for u in part if u not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        slices = refined
    return order


def umbrella_ordering(g: Graph) -> list[int] | None:
    """An umbrella ordering of ``g``, or ``None`` if ``g`` is not proper interval.

    Uses three LexBFS sweeps (LexBFS, then LexBFS+ twice) and verifies the
    final ordering before returning it.
    """
    order = lexbfs(g)
    for _ in range(2):
        order = lexbfs(g, order)
    return order if is_umbrella_ordering(g, order) else None


def build_bubble_model(g: Graph) -> BubbleModel | None:
    """Bubble model realizing ``g``, or ``None`` if ``g`` is not proper interval.

    The returned model is checked against ``g`` before it is returned.
    """
    if g.n == 0:
        return BubbleModel(0, ())
    order = umbrella_ordering(g)
    if order is None:
        return None
    pos = {v: p for p, v in enumerate(order)}
    right = [max(pos[u] for u in g.neighbors(v) | {v}) for v in order]

    # maximal runs of consecutive vertices with equal closed neighbourhoods
    classes: list[list[int]] = [[order[0]]]
    for v in order[1:]:
        u = classes[-1][0]
        if g.neighbors(u) | {u} == g.neighbors(v) | {v}:
            classes[-1].append(v)
        else:
            classes.append([v])

    # columns: greedy maximal cliques of the ordering, read left to right
    col_of = []
    end, j = -1, -1
    for cls in classes:
        p = pos[cls[0]]
        if p > end:
            j += 1
            end = right[p]
        col_of.append(j)
    k = j + 1
    by_col: list[list[int]] = [[] for _ in range(k)]
    for c, jc in enumerate(col_of):
        by_col[jc].append(c)

    # rows: smallest solution of difference constraints row[b] >= row[a] + w
    constraints: list[tuple[int, int, int]] = []
    for jc in range(k):
        ids = by_col[jc]
        constraints.extend((a, b, 1) for a, b in zip(ids, ids[1:]))
        if jc == 0:
            continue
        prev_ids = by_col[jc - 1]
        for c in ids:
            nb = g.neighbors(classes[c][0])
            adjacent = [t for t, pc in enumerate(prev_ids) if classes[pc][0] in nb]
            if not adjacent:
                constraints.append((prev_ids[-1], c, 0))
                continue
            t = adjacent[0]
            if adjacent != list(range(t, len(prev_ids))):
                return None
            constraints.append((c, prev_ids[t], 1))
            if t > 0:
                constraints.append((prev_ids[t - 1], c, 0))
    row = _longest_paths(len(classes), constraints)
    if row is None:
        return None

    columns: list[list[list[int]]] = [[] for _ in range(k)]
    for c, cls in enumerate(classes):
        col = columns[col_of[c]]
        while len(col) < row[c]:
            col.append([])
        col[row[c] - 1] = cls
    model = BubbleModel.from_lists(g.n, columns)
    return model if validate_model(model, g) is None else None


def _longest_paths(size: int, constraints: list[tuple[int, int, int]]) -> list[int] | None:
    row = [1] * size
    for _ in range(size + 1):
        changed = False
        for a, b, w in constraints:
            if row[b] < row[a] + w:
                row[b] = row[a] + w
                changed = True
        if not changed:
            return row
    return None  # positive cycle: the constraints are infeasible


# Generators


def random_model(n: int, seed: int, columns: int | None = None, empty_rate: float = 0.2) -> BubbleModel:
    """Seeded random bubble model on ``n`` vertices.

    ``columns`` is a hint for the column count (drawn at random when omitted);
    ``empty_rate`` is the chance of inserting an empty bubble before each
    non-empty one.
    """
    if n < 1:
        raise ValueError("random_model needs n >= 1")
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, max(1, (n + 1) // 2) + 1)) if columns is None else columns
    k = min(max(k, 1), n)
    labels = rng.permutation(n)
    # k non-empty columns: cut points chosen without replacement
    cuts = np.sort(rng.choice(np.arange(1, n), size=k - 1, replace=False)) if k > 1 else []
    cols = []
    for chunk in np.split(labels, cuts):
        r = int(rng.integers(1, len(chunk) + 1))
        inner = np.sort(rng.choice(np.arange(1, len(chunk)), size=r - 1, replace=False)) if r > 1 else []
        col: list[list[int]] = []
        for bub in np.split(chunk, inner):
            if rng.random() < empty_rate:
                col.append([])
            col.append(bub.tolist())
        cols.append(col)
    return BubbleModel.from_lists(n, cols)


def dense_model(n: int, seed: int = 0, columns: int = 2, rows: int = 4) -> BubbleModel:
    """Model with ``columns`` columns of ``rows`` near-equal bubbles each.

    Used for benchmarks: every column pair forms a dense co-bipartite chain.
    The seed only shuffles vertex ids.
    """
    labels = np.random.default_rng(seed).permutation(n)
    parts = np.array_split(labels, columns * rows)
    cols = [[parts[j * rows + i].tolist() for i in range(rows)] for j in range(columns)]
    return BubbleModel.from_lists(n, cols)


def clique_model(n: int) -> BubbleModel:
    return BubbleModel.from_lists(n, [[list(range(n))]] if n else [])
