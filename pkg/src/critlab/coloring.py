"""Exact chromatic number by DSATUR-ordered branch and bound."""

from __future__ import annotations

import sys

from .graph import Graph, greedy_clique


def dsatur_greedy(g: Graph) -> dict[int, int]:
    """Plain DSATUR heuristic; seeds the branch-and-bound upper bound."""
    col: dict[int, int] = {}
    sat = [0] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in g.vertices if u not in col),
            key=lambda u: (bin(sat[u]).count("1"), g.degree(u), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        col[v] = c
        for w in g.adj[v]:
            sat[w] |= 1 << c
    return col


class _BranchAndBound:
    def __init__(self, g: Graph, clique: list[int], incumbent: dict[int, int]):
        self.g = g
        self.lb = len(clique)
        self.best = max(incumbent.values()) + 1
        self.best_col = dict(incumbent)
        self.col = [-1] * g.n
        self.sat = [0] * g.n
        self.nodes = 0
        self.used = 0
        # clique vertices need pairwise distinct colors; fixing them breaks color symmetry
        for c, v in enumerate(clique):
            self._assign(v, c)
        self.used = len(clique)
        self.uncolored = g.n - len(clique)

    def _assign(self, v, c):
        self.col[v] = c
        touched = []
        bit = 1 << c
        for w in self.g.adj[v]:
            if self.col[w] < 0 and not self.sat[w] & bit:
                self.sat[w] |= bit
                touched.append(w)
        return touched

    def _unassign(self, v, c, touched):
        self.col[v] = -1
        bit = ~(1 << c)
        for w in touched:
            self.sat[w] &= bit

    def _select(self):
        best_v, best_key = -1, None
        for v in range(self.g.n):
            if self.col[v] >= 0:
                continue
            key = (bin(self.sat[v]).count("1"), self.g.degree(v))
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def search(self):
        if self.best <= self.lb:
            return
        self.nodes += 1
        if self.uncolored == 0:
            self.best = self.used
            self.best_col = {v: c for v, c in enumerate(self.col)}
            return
        v = self._select()
        used = self.used
        for c in range(min(used + 1, self.best - 1)):
            if self.sat[v] >> c & 1:
                continue
            touched = self._assign(v, c)
            self.used = max(used, c + 1)
            self.uncolored -= 1
            self.search()
            self.uncolored += 1
            self.used = used
            self._unassign(v, c, touched)
            if self.best <= self.lb:
                return


def chromatic_number(g: Graph) -> tuple[int, dict[int, int]]:
    """Exact chromatic number and a witness coloring with colors ``0..chi-1``.

    The search starts from a DSATUR upper bound and a greedy clique lower
    bound, and only returns once no coloring with fewer colors remains in the
    search tree.
    """
    if g.n == 0:
        return 0, {}
    clique = greedy_clique(g)
    incumbent = dsatur_greedy(g)
    solver = _BranchAndBound(g, clique, incumbent)
    limit = sys.getrecursionlimit()
    if limit < g.n + 100:
        sys.setrecursionlimit(g.n + 100)
    solver.search()
    return solver.best, _canonical_colors(solver.best_col)


def _canonical_colors(col: dict[int, int]) -> dict[int, int]:
    # renumber by first appearance in vertex order so witnesses are reproducible
    remap: dict[int, int] = {}
    out = {}
    for v in sorted(col):
        c = col[v]
        if c not in remap:
            remap[c] = len(remap)
        out[v] = remap[c]
    return out


def is_colorable(g: Graph, ncolors: int) -> bool:
    if g.n == 0:
        return True
    return chromatic_number(g)[0] <= ncolors
