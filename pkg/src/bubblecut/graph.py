"""Simple undirected graphs, cuts, and the edge-list text format."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np


class ParseError(ValueError):
    """Raised when edge-list or model text does not conform to its format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph on the vertices ``0 .. n-1``.

    Edges are stored as ordered pairs ``(u, v)`` with ``u < v``. Instances are
    immutable; adjacency sets are built once at construction.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n - 1}]")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(canon)
        self._adj = tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # a few named families, handy in tests and demos

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, ((v, (v + 1) % n) for v in range(n)))


def as_cut(s: Sequence[bool] | np.ndarray) -> np.ndarray:
    return np.asarray(s, dtype=bool).reshape(-1)


def cut_size(g: Graph, s: Sequence[bool] | np.ndarray) -> int:
    """Number of edges of ``g`` with exactly one endpoint in the cut ``s``."""
    s = as_cut(s)
    if len(s) != g.n:
        raise ValueError(f"cut has length {len(s)} but the graph has {g.n} vertices")
    if not g.edges:
        return 0
    e = np.array(sorted(g.edges), dtype=np.intp)
    return int(np.count_nonzero(s[e[:, 0]] != s[e[:, 1]]))


def complement_cut(s: Sequence[bool] | np.ndarray) -> np.ndarray:
    return ~as_cut(s)


def cut_from_vertices(n: int, vertices: Iterable[int]) -> np.ndarray:
    s = np.zeros(n, dtype=bool)
    s[list(vertices)] = True
    return s


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``.

    Blank lines are ignored. Errors carry the 1-based line number.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, toks) for no, toks in lines if toks]
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    no, header = lines[0]
    n, m = _int_pair(header, no, "header")
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", no)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else no) + 1
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    seen: set[tuple[int, int]] = set()
    for no, toks in body:
        u, v = _int_pair(toks, no, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range [0, {n - 1}] in edge {u} {v}", no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", no)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", no)
        seen.add(e)
    return Graph(n, seen)


def _int_pair(toks: list[str], line: int, what: str) -> tuple[int, int]:
    if len(toks) != 2:
        raise ParseError(f"malformed {what}: expected two integers", line)
    try:
        return int(toks[0]), int(toks[1])
    except ValueError:
        raise ParseError(f"malformed {what}: expected two integers", line) from None


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"
