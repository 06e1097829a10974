"""scikit-learn style wrappers.

Each estimator takes a graph as ``X`` (see :func:`check_graph`) so the
solvers drop into pipelines, ``clone`` and ``get_params`` like any other
estimator.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .coloring import chromatic_number
from .graph import induced_subgraph, Graph
from .pipeline import extract_subgraph, verify_certificate
from .validation import adjacency_matrix, check_graph, check_int


class ExactColoring(ClusterMixin, BaseEstimator):
    """Minimum proper coloring; color classes play the role of cluster labels.

    Attributes
    ----------
    n_colors_ : int
        The chromatic number.
    labels_ : ndarray of shape (n_vertices,)
        Color of each vertex, numbered by first appearance.
    """

    def fit(self, X, y=None):
        g = check_graph(X)
        chi, col = chromatic_number(g)
        self.n_colors_ = chi
        self.labels_ = np.array([col[v] for v in g.vertices], dtype=int)
        self.n_vertices_ = g.n
        return self


class ConnectedSubgraphExtractor(TransformerMixin, BaseEstimator):
    """Select a ``(k+1)``-connected induced subgraph with chromatic number at least ``m``.

    Parameters
    ----------
    k : int, default=1
        Connectivity is required to be ``k + 1``.
    m : int, default=2
        Required chromatic number of the selected subgraph.
    fallback : bool, default=True
        Search all induced subgraphs when the critical subgraph does not
        certify.
    verify : bool, default=True
        Re-check the certificate independently after fitting.
    """

    def __init__(self, k=1, m=2, fallback=True, verify=True):
        self.k = k
        self.m = m
        self.fallback = fallback
        self.verify = verify

    def fit(self, X, y=None):
        k = check_int(self.k, "k", 1)
        m = check_int(self.m, "m", 2)
        g = check_graph(X)
        cert = extract_subgraph(g, k, m, fallback=self.fallback)
        if self.verify:
            problems = verify_certificate(g, cert)
            if problems:
                raise RuntimeError("certificate rejected: " + "; ".join(problems))
        self.certificate_ = cert
        self.support_ = np.array(cert.vertices, dtype=int)
        self.n_vertices_ = g.n
        self.chi_ = cert.chi_H
        self.connectivity_ = cert.connectivity
        return self

    def get_support(self, indices=False):
        check_is_fitted(self, "support_")
        if indices:
            return self.support_.copy()
        mask = np.zeros(self.n_vertices_, dtype=bool)
        mask[self.support_] = True
        return mask

    def transform(self, X):
        """Restrict ``X`` to the selected vertices.

        Returns a :class:`Graph` for graph input, otherwise the adjacency
        submatrix.
        """
        check_is_fitted(self, "support_")
        g = check_graph(X)
        if g.n != self.n_vertices_:
            raise ValueError(f"X has {g.n} vertices, the extractor was fitted on {self.n_vertices_}")
        h, _ = induced_subgraph(g, self.support_.tolist())
        if isinstance(X, Graph):
            return h
        return adjacency_matrix(h)
