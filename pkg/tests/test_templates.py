import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from critlab.coloring import chromatic_number
from critlab.corpus import mycielski
from critlab.graph import complete_graph, cycle_graph, delete_vertex, path_graph
from critlab.oracles import respecting_colorings_bruteforce
from critlab.templates import (
    Template,
    TemplateError,
    cost_k,
    find_respecting_coloring,
    is_good,
    is_inextensible_for,
    minimal_inextensible_subgraph,
    respects,
)

from conftest import graphs


def test_cost_example():
    t = Template(frozenset(range(3)), {0: 0}, {1: {2}})
    assert cost_k(t, 2).cost == 3
    assert is_good(t, 2)
    assert not is_good(t, 1)


def test_template_check():
    g = complete_graph(2)
    with pytest.raises(TemplateError, match="invalid template"):
        Template(frozenset(range(3)), {0: 0, 1: 0}).check(g)
    with pytest.raises(TemplateError, match="invalid template"):
        Template(frozenset(range(3)), {0: 5}).check(g)
    with pytest.raises(TemplateError, match="invalid template"):
        Template(frozenset(range(3)), {0: 0}, {0: {1}}).check(g)


def test_json_round_trip():
    t = Template(frozenset(range(4)), {0: 2}, {1: {0, 3}})
    assert Template.from_dict(t.to_dict()) == t


def test_respecting_examples():
    c5 = cycle_graph(5)
    assert find_respecting_coloring(c5, Template.empty(range(2))) is None
    col = find_respecting_coloring(c5, Template.empty(range(3)))
    assert col is not None and respects(c5, Template.empty(range(3)), col)
    # forbidding the only free color left
    p3 = path_graph(3)
    t = Template(frozenset(range(2)), {0: 0}, {1: {1}})
    assert find_respecting_coloring(p3, t) is None


def test_inextensible_examples():
    assert is_inextensible_for(complete_graph(4), Template.empty(range(3)), 1)
    assert not is_inextensible_for(complete_graph(4), Template.empty(range(4)), 1)
    # cost too high for k
    t = Template(frozenset(range(3)), {0: 0, 1: 1, 2: 2})
    assert not is_inextensible_for(complete_graph(4), t, 1)


@st.composite
def template_instances(draw):
    g = draw(graphs(max_n=7))
    palette = frozenset(range(draw(st.integers(1, 4))))
    verts = list(g.vertices)
    precolored = {}
    for v in verts:
        if draw(st.booleans()) and len(verts) - len(precolored) > max(0, g.n - 6):
            precolored[v] = draw(st.sampled_from(sorted(palette)))
    forbidden = {}
    for v in verts:
        if v not in precolored and draw(st.booleans()):
            forbidden[v] = frozenset(draw(st.sets(st.sampled_from(sorted(palette)), max_size=2)))
    return g, Template(palette, precolored, forbidden)


@settings(max_examples=200, deadline=None)
@given(template_instances())
def test_matches_bruteforce(inst):
    g, t = inst
    assume(all(t.precolored.get(u, -1) != t.precolored.get(v, -2) for u, v in g.edges))
    expected = next(respecting_colorings_bruteforce(g, t.palette, t.precolored, t.forbidden), None)
    col = find_respecting_coloring(g, t)
    assert (col is None) == (expected is None)
    if col is not None:
        assert respects(g, t, col)


def test_minimal_inextensible_is_critical():
    g = mycielski(1)  # chi 4
    h, verts = minimal_inextensible_subgraph(g, range(3), 1)
    assert chromatic_number(h)[0] == 4
    for v in h.vertices:
        assert chromatic_number(delete_vertex(h, v)[0])[0] <= 3


@pytest.mark.parametrize("seed", range(8))
def test_minimal_inextensible_random(seed):
    rng = random.Random(seed)
    from conftest import random_graph

    g = random_graph(rng, 9, 0.6)
    chi = chromatic_number(g)[0]
    h, verts = minimal_inextensible_subgraph(g, range(chi - 1), 1)
    assert chromatic_number(h)[0] == chi
    assert all(chromatic_number(delete_vertex(h, v)[0])[0] <= chi - 1 for v in h.vertices)


def test_minimal_inextensible_palette_check():
    with pytest.raises(TemplateError):
        minimal_inextensible_subgraph(complete_graph(4), range(2), 1)
