"""Input validation helpers shared by the estimators and the CLI."""

from __future__ import annotations

from numbers import Integral

import numpy as np

from .graph import Graph, GraphError


def check_graph(X) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a :class:`Graph`, a square symmetric 0/1 adjacency matrix with
    zero diagonal (anything ``np.asarray`` understands), or a networkx-style
    graph whose nodes are exactly ``0..n-1``.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "nodes") and hasattr(X, "edges") and not isinstance(X, np.ndarray):
        nodes = sorted(X.nodes)
        if nodes != list(range(len(nodes))):
            raise GraphError("graph nodes must be the integers 0..n-1")
        return Graph.from_edges(len(nodes), ((int(u), int(v)) for u, v in X.edges))
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {A.shape}")
    if not np.isin(A, (0, 1)).all():
        raise GraphError("adjacency matrix must be 0/1")
    if not (A == A.T).all():
        raise GraphError("adjacency matrix must be symmetric")
    if np.diagonal(A).any():
        raise GraphError("adjacency matrix must have a zero diagonal")
    us, vs = np.nonzero(np.triu(A, 1))
    return Graph.from_edges(A.shape[0], zip(us.tolist(), vs.tolist()))


def adjacency_matrix(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.int8)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    return A


def check_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)
