"""Vertex connectivity through unit-capacity max-flow on the split graph.

Every vertex ``v`` becomes an arc ``v_in -> v_out`` of capacity one, every
edge ``uv`` becomes the arcs ``u_out -> v_in`` and ``v_out -> u_in``. The
number of internally disjoint ``s``-``t`` paths is the maximum flow from
``s_out`` to ``t_in``.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, is_connected


def _split_network(g: Graph) -> list[dict[int, int]]:
    cap: list[dict[int, int]] = [dict() for _ in range(2 * g.n)]
    for v in g.vertices:
        cap[2 * v][2 * v + 1] = 1
        cap[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            cap[2 * a + 1][2 * b] = 1
            cap[2 * b].setdefault(2 * a + 1, 0)
    return cap


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint paths between ``s`` and ``t``.

    ``s`` and ``t`` must be distinct and non-adjacent. With ``cutoff`` the
    augmentation stops as soon as that many paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs distinct non-adjacent vertices")
    cap = _split_network(g)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cutoff is None or flow < cutoff:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y in sorted(cap[x]):
                if cap[x][y] > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    return flow


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no vertex cut below ``k``.

    Sources are restricted to the ``k`` lowest-id vertices: a cut with fewer
    than ``k`` vertices misses one of them, which is then separated from some
    non-neighbor.
    """
    if g.n <= k:
        return False
    if k <= 0:
        return True
    if g.is_complete():
        return True
    if not is_connected(g):
        return False
    for s in range(k):
        for t in g.vertices:
            if t == s or g.has_edge(s, t):
                continue
            if local_vertex_connectivity(g, s, t, cutoff=k) < k:
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Largest ``k`` such that ``g`` is ``k``-connected (``n-1`` for complete graphs)."""
    if g.n == 0:
        return 0
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s in g.vertices:
        # a minimum cut misses one of the first best+1 vertices
        if s > best:
            break
        for t in g.vertices:
            if t == s or g.has_edge(s, t):
                continue
            best = min(best, local_vertex_connectivity(g, s, t, cutoff=best))
    return best
