"""Light decompositions and completion of a template by distinct piece colors.

A decomposition colors an extra set ``U`` with colors unused on the
template's precolored set and splits everything else into stable pieces of
forbidden weight below ``k``. When the piece count plus the number of colors
on ``U`` fits the budget ``2k - |S| + 1``, each piece can be given its own
color.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, NamedTuple

from .graph import Graph, is_stable
from .hall import HallInstance, solve_sdr
from .templates import Template, is_good, respects


class DecompositionError(ValueError):
    pass


class HallFailure(RuntimeError):
    """Raised if distinct piece colors cannot be found although every hypothesis holds."""


@dataclass(frozen=True)
class LightDecomposition:
    k: int
    U: Mapping[int, int] = field(default_factory=dict)
    pieces: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "U", {int(v): c for v, c in self.U.items()})
        object.__setattr__(self, "pieces", tuple(frozenset(p) for p in self.pieces))

    @property
    def q(self) -> int:
        return len(set(self.U.values()))

    @property
    def R(self) -> int:
        return len(self.pieces)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "U": {str(v): c for v, c in sorted(self.U.items())},
            "pieces": [sorted(p) for p in self.pieces],
        }

    @classmethod
    def from_dict(cls, data: Mapping, k: int | None = None) -> "LightDecomposition":
        k = data.get("k", k)
        if k is None:
            raise DecompositionError("decomposition needs k")
        return cls(
            int(k),
            {int(v): int(c) for v, c in data.get("U", {}).items()},
            tuple(frozenset(p) for p in data.get("pieces", [])),
        )


class ExactnessCheck(NamedTuple):
    R: int
    q: int
    budget: int
    exact: bool


def validate_decomposition(g: Graph, t: Template, d: LightDecomposition) -> ExactnessCheck:
    """Check the partition, stability, lightness and the ``U`` coloring.

    Raises :class:`DecompositionError` naming the first failing clause.
    """
    t.check(g)
    S = t.S
    U = frozenset(d.U)
    if U & S:
        raise DecompositionError(f"not a partition: U meets S in {sorted(U & S)}")
    covered = set(S | U)
    for j, piece in enumerate(d.pieces):
        if not piece:
            raise DecompositionError(f"not a partition: piece {j} is empty")
        if piece & covered:
            raise DecompositionError(f"not a partition: piece {j} overlaps {sorted(piece & covered)}")
        covered |= piece
    if covered != set(g.vertices):
        raise DecompositionError(f"not a partition: vertices {sorted(set(g.vertices) - covered)} uncovered")
    for j, piece in enumerate(d.pieces):
        if not is_stable(g, piece):
            raise DecompositionError(f"not a partition: piece {j} is not stable")
        if t.weight(piece) >= d.k:
            raise DecompositionError(f"lightness violated: piece {j} has weight {t.weight(piece)} >= k={d.k}")
    used_on_S = t.used_colors()
    for v, c in d.U.items():
        if c not in t.palette or c in used_on_S:
            raise DecompositionError(f"U-coloring invalid: color {c} at {v} not in palette minus c(S)")
        if c in t.F(v):
            raise DecompositionError(f"U-coloring invalid: color {c} forbidden at {v}")
    for u, v in combinations(sorted(U), 2):
        if g.has_edge(u, v) and d.U[u] == d.U[v]:
            raise DecompositionError(f"U-coloring invalid: edge {(u, v)} monochromatic")
    budget = 2 * d.k - len(S) + 1
    return ExactnessCheck(d.R, d.q, budget, d.R + d.q <= budget)


@dataclass
class Recoloring:
    coloring: dict
    lists: list
    sdr: dict
    k: int
    palette_size: int
    s_size: int
    q: int
    R: int

    @property
    def list_floor(self) -> int:
        return 2 * self.k - self.s_size - self.q + 1

    def certificate(self) -> dict:
        return {
            "coloring": {str(v): c for v, c in sorted(self.coloring.items())},
            "lists": [sorted(x) for x in self.lists],
            "sdr": {str(j): c for j, c in sorted(self.sdr.items())},
            "budget": {
                "k": self.k,
                "palette_size": self.palette_size,
                "S": self.s_size,
                "q": self.q,
                "R": self.R,
                "list_floor": self.list_floor,
                "min_list": min((len(x) for x in self.lists), default=None),
            },
        }


def recolor_with_certificate(g: Graph, t: Template, d: LightDecomposition) -> Recoloring:
    k = d.k
    if not is_good(t, k):
        raise DecompositionError(f"template is not good: some |F(v)| exceeds k-1={k - 1}")
    if len(t.palette) < 3 * k:
        raise DecompositionError(f"palette has {len(t.palette)} colors, needs at least 3k={3 * k}")
    check = validate_decomposition(g, t, d)
    if not check.exact:
        raise DecompositionError(f"decomposition not exact: R+q={check.R + check.q} > {check.budget}")

    spare = t.palette - t.used_colors() - set(d.U.values())
    lists = [spare - frozenset().union(*(t.F(v) for v in piece)) for piece in d.pieces]
    floor = 2 * k - len(t.S) - d.q + 1
    for j, lst in enumerate(lists):
        if len(lst) < floor:
            raise AssertionError(f"piece {j} list has {len(lst)} colors, below the floor {floor}")
    result = solve_sdr(HallInstance(tuple(lists), t.palette))
    if not result.feasible:
        raise HallFailure("Hall failure under lemma hypotheses")

    col = dict(t.precolored)
    col.update(d.U)
    for j, piece in enumerate(d.pieces):
        for v in piece:
            col[v] = result.sdr[j]
    if not respects(g, t, col):
        raise AssertionError("completed coloring does not respect the template")
    return Recoloring(col, lists, result.sdr, k, len(t.palette), len(t.S), d.q, d.R)


def recolor(g: Graph, t: Template, d: LightDecomposition) -> dict[int, int]:
    """Complete ``t`` to a full respecting coloring using ``d``.

    Needs a good template, at least ``3k`` colors and an exact
    decomposition. Every piece becomes monochromatic in its own color.
    """
    return recolor_with_certificate(g, t, d).coloring


def random_instance(rng: random.Random, k: int | None = None, palette_size: int | None = None,
                    edge_prob: float = 0.5, max_piece: int = 4):
    """A random (graph, template, decomposition) meeting every recoloring hypothesis.

    Structure first, edges second: edges are only drawn between vertices
    that may be adjacent (different pieces, different colors on S and U).
    Draws are rejected and redone until the decomposition is exact.
    """
    while True:
        kk = k if k is not None else rng.randint(1, 4)
        size = palette_size if palette_size is not None else rng.randint(3 * kk, 3 * kk + 3)
        palette = list(range(size))
        s = rng.randint(0, 2 * kk + 1)
        budget = 2 * kk - s + 1
        q = rng.randint(0, max(budget, 0))
        R = rng.randint(0, max(budget + 1, 0))
        if R + q > budget:
            continue
        c_S = [rng.choice(palette) for _ in range(s)]
        spare = [c for c in palette if c not in set(c_S)]
        if len(spare) < q:
            continue
        u_colors = rng.sample(spare, q)
        n_u = q + rng.randint(0, 2) if q else 0
        verts = iter(range(10**6))
        precolored = {next(verts): c for c in c_S}
        forbidden: dict[int, frozenset] = {}
        U = {}
        for i in range(n_u):
            v = next(verts)
            c = u_colors[i] if i < q else rng.choice(u_colors)
            U[v] = c
            forbidden[v] = _random_forbidden(rng, palette, rng.randint(0, kk - 1), avoid=c)
        pieces = []
        for _ in range(R):
            piece, weight = [], 0
            while len(piece) < max_piece:
                f = _random_forbidden(rng, palette, rng.randint(0, kk - 1))
                if weight + len(f) >= kk:
                    if piece:
                        break
                    f = frozenset()
                v = next(verts)
                piece.append(v)
                forbidden[v] = f
                weight += len(f)
                if rng.random() < 0.4:
                    break
            pieces.append(frozenset(piece))
        n = s + n_u + sum(len(p) for p in pieces)
        piece_of = {v: j for j, p in enumerate(pieces) for v in p}
        edges = []
        for u, v in combinations(range(n), 2):
            if u in piece_of and v in piece_of and piece_of[u] == piece_of[v]:
                continue
            if u in precolored and v in precolored and precolored[u] == precolored[v]:
                continue
            if u in U and v in U and U[u] == U[v]:
                continue
            if rng.random() < edge_prob:
                edges.append((u, v))
        g = Graph.from_edges(n, edges)
        t = Template(frozenset(palette), precolored, forbidden)
        d = LightDecomposition(kk, U, tuple(pieces))
        if validate_decomposition(g, t, d).exact:
            return g, t, d


def _random_forbidden(rng, palette, size, avoid=None):
    pool = [c for c in palette if c != avoid]
    return frozenset(rng.sample(pool, min(size, len(pool))))
