import pytest
from hypothesis import given, settings

from critlab.connectivity import is_k_connected, local_vertex_connectivity, vertex_connectivity
from critlab.corpus import kneser
from critlab.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph
from critlab.oracles import is_k_connected_bruteforce, vertex_connectivity_bruteforce

from conftest import graphs

PETERSEN = kneser(5, 2)


def test_examples():
    assert is_k_connected(complete_graph(5), 4)
    assert is_k_connected(PETERSEN, 3)
    assert not is_k_connected(PETERSEN, 4)
    assert not is_k_connected(path_graph(3), 2)


def test_petersen_by_bruteforce():
    assert is_k_connected_bruteforce(PETERSEN, 3)
    assert not is_k_connected_bruteforce(PETERSEN, 4)


def test_conventions():
    # too few vertices, disconnected input
    assert not is_k_connected(complete_graph(4), 4)
    assert not is_k_connected(disjoint_union(complete_graph(3), complete_graph(3)), 1)
    assert is_k_connected(Graph.from_edges(1), 0)
    assert vertex_connectivity(complete_graph(6)) == 5
    assert vertex_connectivity(cycle_graph(7)) == 2


def test_local_connectivity():
    assert local_vertex_connectivity(PETERSEN, 0, 1) == 3 or PETERSEN.has_edge(0, 1)
    with pytest.raises(ValueError):
        local_vertex_connectivity(complete_graph(3), 0, 1)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9))
def test_matches_bruteforce(g):
    for k in range(0, 5):
        assert is_k_connected(g, k) == is_k_connected_bruteforce(g, k)
    assert vertex_connectivity(g) == vertex_connectivity_bruteforce(g)
