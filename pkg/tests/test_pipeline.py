import random

import pytest

from critlab.coloring import chromatic_number
from critlab.corpus import kneser, mycielski
from critlab.graph import Graph, complete_graph, cycle_graph, star_graph
from critlab.pipeline import (
    CRITICAL,
    ExtractionCertificate,
    HypothesisError,
    chromatic_threshold,
    extract_subgraph,
    graph_hash,
    theorem_oracle,
    verify_certificate,
)

from conftest import random_graph


def two_k4_blocks():
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    edges += [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    return Graph.from_edges(7, edges)


def test_threshold():
    assert chromatic_threshold(1, 2) == 4
    assert chromatic_threshold(2, 3) == 7
    assert chromatic_threshold(2, 8) == 10


def test_complete_graph():
    cert = extract_subgraph(complete_graph(7), 2, 3)
    assert cert.vertices == tuple(range(7)) and cert.method == CRITICAL
    assert verify_certificate(complete_graph(7), cert, exhaustive=True) == []


def test_pendant_vertex_dropped():
    g = Graph.from_edges(5, [(u, v) for u in range(4) for v in range(u + 1, 4)] + [(3, 4)])
    cert = extract_subgraph(g, 1, 2)
    assert cert.vertices == (0, 1, 2, 3)
    assert cert.chi_H == 4 and cert.connectivity == 3


def test_cut_vertex():
    g = two_k4_blocks()
    cert = extract_subgraph(g, 1, 2)
    assert cert.vertices == (3, 4, 5, 6)
    assert verify_certificate(g, cert, exhaustive=True) == []


def test_hypothesis_not_met():
    with pytest.raises(HypothesisError, match="hypothesis not met"):
        extract_subgraph(cycle_graph(5), 1, 2)
    with pytest.raises(HypothesisError):
        extract_subgraph(complete_graph(5), 0, 2)


def test_mycielski_extraction():
    g = mycielski(2)
    cert = extract_subgraph(g, 1, 4)
    assert cert.chi_H >= 4 and cert.connectivity >= 2
    assert verify_certificate(g, cert) == []


def test_verify_rejects_tampering():
    g = two_k4_blocks()
    cert = extract_subgraph(g, 1, 2)
    d = cert.to_dict()
    d["vertices"] = (2, 3, 4, 5)
    assert verify_certificate(g, ExtractionCertificate(**d))
    d = cert.to_dict()
    d["vertices"] = tuple(cert.vertices)
    d["chi_H"] = 5
    assert any("claimed" in p for p in verify_certificate(g, ExtractionCertificate(**d)))
    assert "graph hash mismatch" in verify_certificate(complete_graph(7), cert)


def test_graph_hash_is_label_invariant():
    rng = random.Random(1)
    g = random_graph(rng, 9, 0.5)
    perm = list(range(9))
    rng.shuffle(perm)
    h = Graph.from_edges(9, [(perm[u], perm[v]) for u, v in g.edges])
    assert graph_hash(g) == graph_hash(h)
    assert graph_hash(g) != graph_hash(complete_graph(9))


def test_oracle_examples():
    assert theorem_oracle(star_graph(5), 1, 2) is None
    h, verts = theorem_oracle(cycle_graph(5), 1, 2)
    assert verts == frozenset(range(5))
    assert theorem_oracle(kneser(5, 2), 2, 3)[1] == frozenset(range(10))
    with pytest.raises(ValueError, match="oracle out of range"):
        theorem_oracle(complete_graph(13), 1, 2)


@pytest.mark.parametrize("seed", range(15))
def test_random_dense_graphs(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 9, 0.8)
    chi = chromatic_number(g)[0]
    for k, m in [(1, 2), (1, 3), (2, 2), (2, 3)]:
        if chi < chromatic_threshold(k, m):
            continue
        cert = extract_subgraph(g, k, m)
        assert verify_certificate(g, cert, exhaustive=True) == []
        assert theorem_oracle(g, k, m) is not None
