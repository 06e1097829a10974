import random

import pytest

from critlab.decomposition import (
    DecompositionError,
    HallFailure,
    LightDecomposition,
    random_instance,
    recolor,
    recolor_with_certificate,
    validate_decomposition,
)
from critlab.graph import Graph, complete_graph
from critlab.templates import Template, respects

TRIANGLE = complete_graph(3)


def example():
    t = Template(frozenset(range(6)), {0: 1}, {1: {2}, 2: {3}})
    d = LightDecomposition(2, {}, ({1}, {2}))
    return t, d


def test_example_lists_meet_floor():
    t, d = example()
    rc = recolor_with_certificate(TRIANGLE, t, d)
    assert rc.list_floor == 4
    assert [len(x) for x in rc.lists] == [4, 4]
    assert rc.lists[0] == frozenset({0, 3, 4, 5})
    assert respects(TRIANGLE, t, rc.coloring)
    cert = rc.certificate()
    assert cert["budget"]["min_list"] == 4


def test_exactness_budget():
    t, d = example()
    check = validate_decomposition(TRIANGLE, t, d)
    assert (check.R, check.q, check.budget, check.exact) == (2, 0, 4, True)


@pytest.mark.parametrize(
    "U, pieces, message",
    [
        ({}, ({1},), "not a partition"),
        ({}, ({1, 2},), "not a partition"),
        ({}, ({1}, {1, 2}), "not a partition"),
        ({1: 1}, ({2},), "U-coloring invalid"),
        ({1: 2}, ({2},), "U-coloring invalid"),
    ],
)
def test_validation_clauses(U, pieces, message):
    t, _ = example()
    with pytest.raises(DecompositionError, match=message):
        validate_decomposition(TRIANGLE, t, LightDecomposition(2, U, pieces))


def test_lightness():
    g = Graph.from_edges(3, [(0, 1)])
    t = Template(frozenset(range(6)), {0: 1}, {1: {2}, 2: {3}})
    with pytest.raises(DecompositionError, match="lightness violated"):
        validate_decomposition(g, t, LightDecomposition(2, {}, ({1, 2},)))


def test_preconditions():
    t, d = example()
    with pytest.raises(DecompositionError):
        recolor(TRIANGLE, Template(frozenset(range(5)), t.precolored, t.forbidden), d)
    with pytest.raises(DecompositionError):
        recolor(TRIANGLE, Template(t.palette, t.precolored, {1: {2, 3}}), d)


def test_round_trip():
    _, d = example()
    assert LightDecomposition.from_dict(d.to_dict()) == d


@pytest.mark.parametrize("seed", range(5))
def test_random_instances_recolor(seed):
    rng = random.Random(seed)
    for _ in range(40):
        g, t, d = random_instance(rng)
        try:
            rc = recolor_with_certificate(g, t, d)
        except HallFailure:  # pragma: no cover - would be a counterexample
            pytest.fail("Hall failure on a valid instance")
        assert respects(g, t, rc.coloring)
        assert all(len(x) >= rc.list_floor for x in rc.lists)
