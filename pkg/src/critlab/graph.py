"""Simple undirected graphs on vertices ``0..n-1`` and coloring helpers."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping


class GraphError(ValueError):
    pass


class ColoringError(ValueError):
    pass


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``. Build one with
    :meth:`from_edges` so that self-loops, duplicates and out-of-range
    endpoints are rejected.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u > v:
                raise GraphError(f"edge {e} is not normalized")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(int(n), frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nb) for nb in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, verts: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``verts``, relabeled to ``0..len(verts)-1``.

    Returns the subgraph and the relabeling map as a list: new vertex ``i``
    is old vertex ``mapping[i]``. Old ids keep their ascending order.
    """
    mapping = sorted(set(verts))
    for v in mapping:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(mapping)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph.from_edges(len(mapping), edges), mapping


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, (w for w in g.vertices if w != v))


def is_stable(g: Graph, verts: Iterable[int]) -> bool:
    vs = list(verts)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_proper(g: Graph, col: Mapping[int, int], palette: Iterable[int] | None = None) -> bool:
    """True iff ``col`` gives distinct colors to the ends of every edge.

    Raises :class:`ColoringError` if some vertex is unassigned or, when a
    palette is given, a color lies outside it.
    """
    missing = [v for v in g.vertices if v not in col]
    if missing:
        raise ColoringError(f"incomplete coloring: vertices {missing} unassigned")
    if palette is not None:
        pal = set(palette)
        bad = sorted({col[v] for v in g.vertices} - pal)
        if bad:
            raise ColoringError(f"colors {bad} not in palette")
    return all(col[u] != col[v] for u, v in g.edges)


def stable_partition_from_coloring(g: Graph, col: Mapping[int, int]) -> list[frozenset]:
    """Color classes of a proper coloring, ordered by color id."""
    if not is_proper(g, col):
        raise ColoringError("coloring is not proper")
    classes: dict[int, set] = {}
    for v in g.vertices:
        classes.setdefault(col[v], set()).add(v)
    return [frozenset(classes[c]) for c in sorted(classes)]


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from each vertex; the largest is kept."""
    best: list[int] = []
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    for start in order:
        if g.degree(start) + 1 <= len(best):
            break
        clique = [start]
        cand = set(g.adj[start])
        while cand:
            v = min(cand, key=lambda w: (-len(g.adj[w] & cand), w))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def is_clique(g: Graph, verts: Iterable[int]) -> bool:
    vs = list(verts)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph.from_edges(offset, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
