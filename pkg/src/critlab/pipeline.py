"""Extraction of highly connected, highly chromatic induced subgraphs.

Given ``G`` with ``chi(G) >= max(m + 2k - 2, 3k + 1)``, find an induced
subgraph that is ``(k+1)``-connected with chromatic number at least ``m``.
The fast path deletes vertices until the graph is critical for a palette of
``chi(G) - 1`` colors; if that result does not certify, induced subgraphs
are searched from largest to smallest.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations

from .coloring import chromatic_number
from .connectivity import is_k_connected, vertex_connectivity
from .graph import Graph, induced_subgraph
from .oracles import chromatic_number_exhaustive, is_k_connected_bruteforce
from .templates import minimal_inextensible_subgraph

ORACLE_MAX_N = 12
CRITICAL = "critical-extraction"
FALLBACK = "exhaustive-fallback"


class HypothesisError(ValueError):
    pass


class ExtractionFailure(RuntimeError):
    pass


def chromatic_threshold(k: int, m: int) -> int:
    return max(m + 2 * k - 2, 3 * k + 1)


def graph_hash(g: Graph) -> str:
    """Isomorphism-invariant digest from degree-refined vertex labels.

    Color refinement runs until stable; the digest covers ``n``, ``m``, the
    sorted final labels and the sorted label pairs of the edges.
    Non-isomorphic graphs may collide; this is for bookkeeping only.
    """
    labels = [str(g.degree(v)) for v in g.vertices]
    for _ in range(g.n):
        new = [
            hashlib.sha256(
                (labels[v] + "|" + ",".join(sorted(labels[w] for w in g.adj[v]))).encode()
            ).hexdigest()[:16]
            for v in g.vertices
        ]
        if len(set(new)) == len(set(labels)):
            labels = new
            break
        labels = new
    edge_sig = sorted(tuple(sorted((labels[u], labels[v]))) for u, v in g.edges)
    payload = f"{g.n};{g.m};{sorted(labels)};{edge_sig}"
    return hashlib.sha256(payload.encode()).hexdigest()


@dataclass(frozen=True)
class ExtractionCertificate:
    graph_hash: str
    k: int
    m: int
    chi_G: int
    vertices: tuple
    chi_H: int
    connected: bool
    connectivity: int
    method: str

    def to_dict(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "k": self.k,
            "m": self.m,
            "chi_G": self.chi_G,
            "vertices": list(self.vertices),
            "chi_H": self.chi_H,
            "connected": self.connected,
            "connectivity": self.connectivity,
            "method": self.method,
        }


def _certified(h: Graph, k: int, m: int) -> bool:
    if h.n <= k + 1 or min((h.degree(v) for v in h.vertices), default=0) < k + 1:
        return False
    return is_k_connected(h, k + 1) and chromatic_number(h)[0] >= m


def _search_induced(g: Graph, k: int, m: int):
    lowest = max(k + 2, m, 1)
    for size in range(g.n, lowest - 1, -1):
        for verts in combinations(range(g.n), size):
            h, _ = induced_subgraph(g, verts)
            if _certified(h, k, m):
                return h, frozenset(verts)
    return None


def extract_subgraph(g: Graph, k: int, m: int, fallback: bool = True) -> ExtractionCertificate:
    """Certified ``(k+1)``-connected induced subgraph with chromatic number at least ``m``."""
    if k < 1 or m < 2:
        raise HypothesisError(f"need k >= 1 and m >= 2, got k={k}, m={m}")
    chi_G, _ = chromatic_number(g)
    need = chromatic_threshold(k, m)
    if chi_G < need:
        raise HypothesisError(f"hypothesis not met: chi(G)={chi_G} < {need}")
    palette = frozenset(range(chi_G - 1))
    h, verts = minimal_inextensible_subgraph(g, palette, k)
    method = CRITICAL
    if not _certified(h, k, m):
        if not fallback:
            raise ExtractionFailure("critical subgraph did not certify and fallback is disabled")
        found = _search_induced(g, k, m)
        if found is None:
            raise ExtractionFailure(
                "exhaustive fallback found no certified subgraph; this contradicts the "
                "theorem and points to an implementation bug"
            )
        h, verts = found
        method = FALLBACK
    return ExtractionCertificate(
        graph_hash=graph_hash(g),
        k=k,
        m=m,
        chi_G=chi_G,
        vertices=tuple(sorted(verts)),
        chi_H=chromatic_number(h)[0],
        connected=is_k_connected(h, k + 1),
        connectivity=vertex_connectivity(h),
        method=method,
    )


def verify_certificate(g: Graph, cert: ExtractionCertificate, exhaustive: bool = False) -> list[str]:
    """Re-check a certificate from scratch; returns the list of problems found.

    Only the vertex set and the claimed parameters are read from the
    certificate. With ``exhaustive`` the brute-force oracles replace the
    branch-and-bound and max-flow solvers (small graphs only).
    """
    problems = []
    if cert.graph_hash != graph_hash(g):
        problems.append("graph hash mismatch")
    if any(not 0 <= v < g.n for v in cert.vertices):
        return problems + ["vertex outside G"]
    h, _ = induced_subgraph(g, cert.vertices)
    if exhaustive:
        chi_H = chromatic_number_exhaustive(h)
        connected = is_k_connected_bruteforce(h, cert.k + 1)
    else:
        chi_H = chromatic_number(h)[0]
        connected = is_k_connected(h, cert.k + 1)
    if chi_H < cert.m:
        problems.append(f"chi(H)={chi_H} < m={cert.m}")
    if chi_H != cert.chi_H:
        problems.append(f"claimed chi(H)={cert.chi_H}, recomputed {chi_H}")
    if not connected:
        problems.append(f"H is not {cert.k + 1}-connected")
    return problems


def theorem_oracle(g: Graph, k: int, m: int):
    """Largest (then lexicographically first) certified induced subgraph, or ``None``.

    Returns ``(H, vertex_set)``. Exhaustive, limited to 12 vertices.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError("oracle out of range")
    return _search_induced(g, k, m)
