import pytest
from hypothesis import given, settings, strategies as st

from critlab.hall import (
    HallError,
    HallInstance,
    all_violators,
    is_hall_feasible,
    largest_violator,
    max_deficiency_core,
    min_violator,
    solve_sdr,
)
from critlab.oracles import largest_hall_bad_bruteforce, max_deficiency_bruteforce

families = st.lists(st.frozensets(st.integers(0, 7), max_size=4), min_size=1, max_size=10)


def test_examples():
    a, b = 0, 1
    # {a,b}, {b}, {a}: three lists, two colors
    inst = HallInstance(({a, b}, {b}, {a}))
    assert not is_hall_feasible(inst)
    assert min_violator(inst) == frozenset({0, 1, 2})
    assert is_hall_feasible(HallInstance(({a, b}, {b})))
    bad = HallInstance(({a, b}, {a, b}, {a, b}))
    res = solve_sdr(bad)
    assert not res.feasible
    assert res.violator == frozenset({0, 1, 2})
    assert min_violator(bad) == frozenset({0, 1, 2})
    assert largest_violator(bad) == frozenset({0, 1, 2})


def test_empty_list_is_violator():
    inst = HallInstance(({0, 1}, frozenset(), {2}))
    assert min_violator(inst) == frozenset({1})


def test_palette_check():
    with pytest.raises(HallError):
        HallInstance(({0, 5},), palette={0, 1})


def test_round_trip():
    inst = HallInstance(({0, 1}, {1}), palette={0, 1, 2})
    assert HallInstance.from_dict(inst.to_dict()) == inst


def test_min_violator_range():
    inst = HallInstance(tuple({0} for _ in range(21)))
    with pytest.raises(HallError, match="out of range"):
        min_violator(inst)


@settings(max_examples=300, deadline=None)
@given(families)
def test_defect_hall(lists):
    inst = HallInstance(tuple(lists))
    res = solve_sdr(inst)
    assert res.deficiency == max_deficiency_bruteforce(inst.lists)
    assert res.feasible == (not all_violators(inst))
    if res.feasible:
        assert len(set(res.sdr.values())) == len(lists)
        assert all(res.sdr[i] in lists[i] for i in range(len(lists)))
    else:
        assert inst.is_violator(res.violator)
        assert len(res.violator) - len(inst.union(res.violator)) == res.deficiency


@settings(max_examples=300, deadline=None)
@given(families)
def test_largest_violator(lists):
    inst = HallInstance(tuple(lists))
    core = largest_violator(inst)
    assert len(core) == largest_hall_bad_bruteforce(inst.lists)
    if core:
        assert inst.is_violator(core)
        assert len(largest_violator(inst, at_least=2)) >= min(2, len(core))
        mv = min_violator(inst)
        assert len(mv) == min(len(v) for v in all_violators(inst))


@settings(max_examples=200, deadline=None)
@given(families, st.data())
def test_monotone_under_shrinking(lists, data):
    # removing colors never repairs a violator
    inst = HallInstance(tuple(lists))
    drop = data.draw(st.integers(0, 7))
    shrunk = HallInstance(tuple(x - {drop} for x in lists))
    if not is_hall_feasible(inst):
        assert not is_hall_feasible(shrunk)
    for v in all_violators(inst):
        assert shrunk.is_violator(v)


@settings(max_examples=300, deadline=None)
@given(families)
def test_deficiency_core(lists):
    inst = HallInstance(tuple(lists))
    core = max_deficiency_core(inst)
    d = max_deficiency_bruteforce(inst.lists)
    assert len(core) - len(inst.union(core)) == d
    # every max-deficiency family sits inside the core
    for v in all_violators(inst):
        if len(v) - len(inst.union(v)) == d:
            assert v <= core


def test_core_is_not_always_largest():
    inst = HallInstance((frozenset(), frozenset(), frozenset({0, 1})))
    assert max_deficiency_core(inst) == frozenset({0, 1})
    assert largest_violator(inst) == frozenset({0, 1, 2})


def test_two_equal_singletons():
    res = solve_sdr(HallInstance(({0}, {0})))
    assert res.violator == frozenset({0, 1}) and res.deficiency == 1
