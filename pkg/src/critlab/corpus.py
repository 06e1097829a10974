"""Test graphs with known chromatic numbers."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, star_graph

GENERATORS = ("complete", "mycielski", "kneser", "multipartite", "gnp", "cycle", "path", "star")


def mycielskian(g: Graph) -> Graph:
    """Mycielski's construction: chi goes up by one, no new triangles.

    Vertex ``v`` keeps its id, its shadow is ``v + n`` and the apex is ``2n``.
    """
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((u, v + n))
        edges.append((v, u + n))
    edges.extend((v + n, 2 * n) for v in range(n))
    return Graph.from_edges(2 * n + 1, edges)


def mycielski(iterations: int, base: Graph | None = None) -> Graph:
    """Iterated Mycielskian of ``base`` (the 5-cycle by default)."""
    if iterations < 0:
        raise GraphError("iterations must be nonnegative")
    g = cycle_graph(5) if base is None else base
    for _ in range(iterations):
        g = mycielskian(g)
    return g


def kneser(n: int, r: int) -> Graph:
    """Kneser graph K(n, r): ``r``-subsets of ``range(n)``, adjacent when disjoint.

    Vertices are numbered in lexicographic order of the subsets.
    """
    if r < 1 or n < 2 * r:
        raise GraphError(f"kneser needs r >= 1 and n >= 2r, got n={n}, r={r}")
    subsets = [frozenset(c) for c in combinations(range(n), r)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("multipartite needs positive part sizes")
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    edges = [(u, v) for u, v in combinations(range(len(owner)), 2) if owner[u] != owner[v]]
    return Graph.from_edges(len(owner), edges)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"gnp needs n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def known_chi(name: str, params: Mapping) -> int | None:
    """Chromatic number where the construction fixes it, else ``None``."""
    if name == "complete":
        return params["n"]
    if name == "mycielski" and params.get("base") is None:
        return 3 + params.get("iterations", 0)
    if name == "kneser":
        return params["n"] - 2 * params["r"] + 2
    if name == "multipartite":
        return len(params["parts"])
    if name == "cycle":
        return 2 if params["n"] % 2 == 0 else 3
    return None


@dataclass(frozen=True)
class CorpusSpec:
    name: str
    params: Mapping = field(default_factory=dict)
    seed: int = 0

    def to_dict(self) -> dict:
        return {"name": self.name, "params": dict(self.params), "seed": self.seed}

    @classmethod
    def from_dict(cls, data: Mapping) -> "CorpusSpec":
        return cls(data["name"], dict(data.get("params", {})), int(data.get("seed", 0)))


def generate_corpus(spec: CorpusSpec) -> Graph:
    p = dict(spec.params)
    try:
        if spec.name == "complete":
            return complete_graph(int(p["n"]))
        if spec.name == "mycielski":
            return mycielski(int(p.get("iterations", 0)))
        if spec.name == "kneser":
            return kneser(int(p["n"]), int(p["r"]))
        if spec.name == "multipartite":
            return multipartite(*(int(x) for x in p["parts"]))
        if spec.name == "gnp":
            return gnp(int(p["n"]), float(p["p"]), spec.seed)
        if spec.name == "cycle":
            return cycle_graph(int(p["n"]))
        if spec.name == "path":
            return path_graph(int(p["n"]))
        if spec.name == "star":
            return star_graph(int(p["leaves"]))
    except KeyError as exc:
        raise GraphError(f"{spec.name}: missing parameter {exc}") from None
    raise GraphError(f"unknown generator {spec.name!r}; choose from {', '.join(GENERATORS)}")
