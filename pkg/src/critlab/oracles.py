"""Brute-force oracles.

These share no code with the solvers they check: no DSATUR ordering, no
max-flow, no matching. Keep them slow and obvious.
"""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph


def chromatic_number_exhaustive(g: Graph) -> int:
    """Smallest ``k`` admitting a proper assignment, by exhaustive backtracking.

    Vertices are assigned in id order; vertex ``i`` may only open color
    ``max_used + 1`` (restricted growth strings), so each partition into
    color classes is visited once.
    """
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if _exhaustive_colorable(g, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def _exhaustive_colorable(g: Graph, k: int) -> bool:
    col = [-1] * g.n

    def rec(i, used):
        if i == g.n:
            return True
        for c in range(min(used + 1, k)):
            if any(col[w] == c for w in g.adj[i] if w < i):
                continue
            col[i] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        col[i] = -1
        return False

    return rec(0, 0)


def is_k_connected_bruteforce(g: Graph, k: int) -> bool:
    """Remove every vertex set of size below ``k`` and test connectivity."""
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not _connected_without(g, set(cut)):
                return False
    return True


def vertex_connectivity_bruteforce(g: Graph) -> int:
    k = 0
    while is_k_connected_bruteforce(g, k + 1):
        k += 1
    return k


def _connected_without(g: Graph, removed: set) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def max_deficiency_bruteforce(lists) -> int:
    """``max |A| - |union of lists in A|`` over all subfamilies, empty included."""
    lists = [frozenset(x) for x in lists]
    best = 0
    for r in range(1, len(lists) + 1):
        for fam in combinations(range(len(lists)), r):
            union = frozenset().union(*(lists[i] for i in fam))
            best = max(best, r - len(union))
    return best


def largest_hall_bad_bruteforce(lists) -> int:
    """Size of the largest Hall-violating subfamily, 0 if none."""
    lists = [frozenset(x) for x in lists]
    for r in range(len(lists), 0, -1):
        for fam in combinations(range(len(lists)), r):
            if len(frozenset().union(*(lists[i] for i in fam))) < r:
                return r
    return 0


def respecting_colorings_bruteforce(g: Graph, palette, precolored, forbidden):
    """Yield every proper coloring agreeing with ``precolored`` and avoiding ``forbidden``."""
    palette = sorted(palette)
    free = [v for v in range(g.n) if v not in precolored]
    for choice in product(palette, repeat=len(free)):
        col = dict(precolored)
        col.update(zip(free, choice))
        if any(col[v] in forbidden.get(v, ()) for v in free):
            continue
        if all(col[u] != col[v] for u, v in g.edges):
            yield col
