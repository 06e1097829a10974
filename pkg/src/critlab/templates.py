"""Precoloring templates: a colored set, forbidden colors elsewhere, a palette.

A template is a partial proper coloring ``precolored`` (vertex -> color) plus
a forbidden set for every other vertex. A coloring *respects* the template
when it agrees with ``precolored`` and avoids each vertex's forbidden set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .coloring import chromatic_number
from .graph import Graph, induced_subgraph, is_proper


class TemplateError(ValueError):
    pass


@dataclass(frozen=True)
class Template:
    palette: frozenset
    precolored: Mapping[int, int] = field(default_factory=dict)
    forbidden: Mapping[int, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "palette", frozenset(self.palette))
        object.__setattr__(self, "precolored", {int(v): c for v, c in self.precolored.items()})
        object.__setattr__(
            self,
            "forbidden",
            {int(v): frozenset(fs) for v, fs in self.forbidden.items() if fs},
        )

    @classmethod
    def empty(cls, palette) -> "Template":
        return cls(frozenset(palette))

    @property
    def S(self) -> frozenset:
        return frozenset(self.precolored)

    def F(self, v: int) -> frozenset:
        return self.forbidden.get(v, frozenset())

    def weight(self, verts) -> int:
        """Total number of forbidden colors over ``verts``."""
        return sum(len(self.F(v)) for v in verts)

    def used_colors(self) -> frozenset:
        return frozenset(self.precolored.values())

    def check(self, g: Graph) -> None:
        """Raise :class:`TemplateError` unless this is a valid template on ``g``."""
        for v in list(self.precolored) + list(self.forbidden):
            if not 0 <= v < g.n:
                raise TemplateError(f"invalid template: vertex {v} out of range")
        overlap = self.S & frozenset(self.forbidden)
        if overlap:
            raise TemplateError(f"invalid template: precolored vertices {sorted(overlap)} have forbidden sets")
        stray = self.used_colors() - self.palette
        for fs in self.forbidden.values():
            stray |= fs - self.palette
        if stray:
            raise TemplateError(f"invalid template: colors {sorted(stray)} outside palette")
        for u, v in g.edges:
            if u in self.precolored and v in self.precolored and self.precolored[u] == self.precolored[v]:
                raise TemplateError(f"invalid template: precoloring not proper on edge {(u, v)}")

    def to_dict(self) -> dict:
        return {
            "palette": sorted(self.palette),
            "S": {str(v): c for v, c in sorted(self.precolored.items())},
            "F": {str(v): sorted(fs) for v, fs in sorted(self.forbidden.items())},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Template":
        return cls(
            frozenset(data["palette"]),
            {int(v): int(c) for v, c in data.get("S", {}).items()},
            {int(v): frozenset(cs) for v, cs in data.get("F", {}).items()},
        )


class TemplateCost(NamedTuple):
    k: int
    cost: int


def cost_k(t: Template, k: int) -> TemplateCost:
    return TemplateCost(k, k * len(t.precolored) + t.weight(t.forbidden))


def is_good(t: Template, k: int) -> bool:
    return all(len(fs) <= k - 1 for fs in t.forbidden.values())


def respects(g: Graph, t: Template, col: Mapping[int, int]) -> bool:
    """Independent validator: proper, palette-valued, agrees on S, avoids F."""
    if not is_proper(g, col, t.palette):
        return False
    if any(col[v] != c for v, c in t.precolored.items()):
        return False
    return all(col[v] not in fs for v, fs in t.forbidden.items())


def find_respecting_coloring(g: Graph, t: Template) -> dict[int, int] | None:
    """A proper coloring respecting ``t``, or ``None`` if there is none.

    Complete backtracking. The branching vertex is the uncolored one with
    fewest remaining colors (ties by id). Palette colors that appear neither
    on ``S`` nor in any forbidden set are interchangeable, so at each node
    only the first not-yet-used one is tried.
    """
    t.check(g)
    colors = sorted(t.palette)
    bit = {c: 1 << i for i, c in enumerate(colors)}
    full = (1 << len(colors)) - 1
    touched_colors = set(t.used_colors())
    for fs in t.forbidden.values():
        touched_colors |= fs
    free_mask = sum(bit[c] for c in colors if c not in touched_colors)

    col: dict[int, int] = dict(t.precolored)
    free = [v for v in g.vertices if v not in col]
    allowed = {}
    blocked = {}
    for v in free:
        allowed[v] = full & ~sum(bit[c] for c in t.F(v))
        blocked[v] = 0
        for w in g.adj[v]:
            if w in t.precolored:
                blocked[v] |= bit[t.precolored[w]]
    uncolored = set(free)
    used_free = 0

    def pick():
        best, best_size = None, None
        for v in sorted(uncolored):
            size = bin(allowed[v] & ~blocked[v]).count("1")
            if best is None or size < best_size:
                best, best_size = v, size
                if size == 0:
                    break
        return best

    def rec():
        nonlocal used_free
        if not uncolored:
            return True
        v = pick()
        avail = allowed[v] & ~blocked[v]
        tried_fresh = False
        for i, c in enumerate(colors):
            b = 1 << i
            if not avail & b:
                continue
            fresh = bool(free_mask & b) and not used_free & b
            if fresh:
                if tried_fresh:
                    continue
                tried_fresh = True
            col[v] = c
            uncolored.discard(v)
            prev_used = used_free
            if fresh:
                used_free |= b
            touched = []
            for w in g.adj[v]:
                if w in uncolored and not blocked[w] & b:
                    blocked[w] |= b
                    touched.append(w)
            if rec():
                return True
            for w in touched:
                blocked[w] &= ~b
            used_free = prev_used
            uncolored.add(v)
            del col[v]
        return False

    if rec():
        return {v: col[v] for v in g.vertices}
    return None


def is_inextensible_for(g: Graph, t: Template, k: int) -> bool:
    """Whether this particular template witnesses inextensibility at level ``k``."""
    if cost_k(t, k).cost >= 2 * k * k:
        return False
    if any(len(fs) > k for fs in t.forbidden.values()):
        return False
    return find_respecting_coloring(g, t) is None


def minimal_inextensible_subgraph(g: Graph, palette, k: int) -> tuple[Graph, frozenset]:
    """Vertex-minimal induced subgraph that is still inextensible with the empty template.

    Requires ``|palette| == chi(g) - 1``. Vertices are tried for deletion in
    ascending id order; a single pass suffices because colorability is
    inherited by induced subgraphs.
    """
    palette = frozenset(palette)
    chi, _ = chromatic_number(g)
    if len(palette) != chi - 1:
        raise TemplateError(f"palette size {len(palette)} must equal chi(g) - 1 = {chi - 1}")
    empty = Template.empty(palette)
    keep = set(g.vertices)
    for v in sorted(g.vertices):
        trial = keep - {v}
        h, _ = induced_subgraph(g, trial)
        if is_inextensible_for(h, empty, k):
            keep = trial
    h, _ = induced_subgraph(g, keep)
    return h, frozenset(keep)
