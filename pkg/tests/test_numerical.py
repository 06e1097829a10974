import csv
import io
from itertools import product

import pytest
from hypothesis import given, strategies as st

from critlab.numerical import (
    LemmaDomainError,
    NumericalLemmaInstance,
    iter_instances,
    numerical_lemma_lhs,
    numerical_lemma_sweep,
    sweep_csv,
)


def lhs_by_hand(k, d, r, tp, a, ts):
    A = k + d - r + tp
    M = r - d - 1 - tp
    T = sum(ts)
    return a * A + sum(max(t * (tp + T + d - 1), A + t * (t - M)) for t in ts)


def test_example_equality_case():
    inst = NumericalLemmaInstance(3, 0, 3, 1, 2, 1, (1,))
    assert (inst.A, inst.M, inst.T) == (1, 1, 1)
    assert numerical_lemma_lhs(inst) == 3 == inst.rhs
    assert inst.D1 == 0 and inst.D2 == 0


def test_example_slack_case():
    inst = NumericalLemmaInstance(4, 1, 4, 1, 2, 2, (1, 1))
    assert (inst.A, inst.M, inst.T) == (2, 1, 2)
    assert numerical_lemma_lhs(inst) == 10
    assert inst.rhs == 4


@pytest.mark.parametrize(
    "args",
    [
        (3, 0, 2, 1, 1, 1, (1,)),  # r < 3
        (3, 0, 4, 1, 3, 1, (1,)),  # r > k+d
        (3, 0, 3, 2, 2, 1, (1,)),  # t' too large
        (4, 1, 4, 1, 2, 2, (1,)),  # wrong number of t_j
        (4, 1, 4, 1, 2, 2, (1, 2)),  # t_j > M
        (4, 1, 4, 1, 3, 2, (1, 1)),  # a+b != r
    ],
)
def test_domain_errors(args):
    with pytest.raises(LemmaDomainError):
        NumericalLemmaInstance(*args)


def brute_instances(k_max, d_max):
    out = set()
    for k in range(1, k_max + 1):
        for d in range(d_max + 1):
            for r in range(3, k + d + 1):
                for tp in range(1, r - d - 1):
                    M = r - d - 1 - tp
                    for b in range(1, r + 1):
                        for ts in product(range(1, M + 1), repeat=b):
                            if list(ts) == sorted(ts):
                                out.add((k, d, r, tp, r - b, b, ts))
    return out


@pytest.mark.parametrize("k_max, d_max", [(5, 0), (5, 2), (6, 1)])
def test_enumeration_matches_brute_force(k_max, d_max):
    got = [(i.k, i.d, i.r, i.t_prime, i.a, i.b, i.ts) for i in iter_instances(k_max, d_max)]
    assert len(got) == len(set(got))
    assert set(got) == brute_instances(k_max, d_max)


def test_lhs_matches_hand_formula():
    for inst in iter_instances(6, 2):
        assert numerical_lemma_lhs(inst) == lhs_by_hand(inst.k, inst.d, inst.r, inst.t_prime, inst.a, inst.ts)


def test_displays_match_direct_forms():
    for inst in iter_instances(7, 3):
        assert inst.D1 == inst.D1_direct()
        assert inst.D2 == inst.D2_direct()
        assert max(inst.D1, inst.D2) >= 0


@given(st.data())
def test_lhs_symmetric_in_t(data):
    insts = list(iter_instances(6, 2))
    inst = data.draw(st.sampled_from([i for i in insts if len(set(i.ts)) > 1] or insts))
    perm = data.draw(st.permutations(inst.ts))
    assert lhs_by_hand(inst.k, inst.d, inst.r, inst.t_prime, inst.a, perm) == numerical_lemma_lhs(inst)


def test_small_sweeps():
    res = numerical_lemma_sweep(3, 0)
    assert res.ok and res.instances == 3  # r=3, t'=1, b=1..3
    assert numerical_lemma_sweep(2, 0).instances == 0
    assert numerical_lemma_sweep(2, 0).ok


def test_csv_output():
    res, text = sweep_csv(5, 1)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == res.instances
    assert all(int(r["LHS"]) >= int(r["kt_prime"]) for r in rows)
