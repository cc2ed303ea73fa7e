from fractions import Fraction
from itertools import product
from math import factorial

import pytest

from spectralrec.gw import (UnsupportedKeyError, check_eval_props,
                            closed_form_powers, closed_forms,
                            connected_stationary, dim_partition,
                            disconnected_stationary, p_polynomial, partitions,
                            shifted_power_sum, stationary_key,
                            stationary_toprec)


def test_partitions_lexicographic_and_counts():
    assert partitions(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert len(partitions(10)) == 42


def test_dim_partition():
    assert dim_partition((1,)) == 1
    assert dim_partition((2, 1)) == 2
    assert sum(dim_partition(l) ** 2 for l in partitions(4)) == factorial(4)


def test_vacuum_normalization():
    for d in range(11):
        assert sum(dim_partition(l) ** 2 for l in partitions(d)) == factorial(d)


def test_shifted_power_sum():
    assert shifted_power_sum(1, (1,)) == Fraction(23, 24)
    assert shifted_power_sum(3, ()) == Fraction(7, 960)
    assert shifted_power_sum(2, (1, 1)) == -2


def test_disconnected():
    assert disconnected_stationary(0, (2,)) == Fraction(7, 5760)
    assert disconnected_stationary(1, (2,)) == Fraction(247, 5760)
    assert disconnected_stationary(1, (0,)) == Fraction(23, 24)


def test_connected_examples():
    # the worked cumulant: S_1 - S_0 = 247/5760 - 7/5760 = 1/24
    assert connected_stationary(1, (2,)) == Fraction(1, 24)
    assert connected_stationary(0, (0, 0, 0)) == 1
    assert connected_stationary(0, (1, 1)) == Fraction(1, 2)
    assert connected_stationary(2, (4,)) == Fraction(1, 1920)


def test_connected_parity_and_dimension_vanishing():
    assert connected_stationary(0, (1,)) == 0       # odd weight
    assert connected_stationary(1, (1, 0)) == 0
    assert connected_stationary(2, (0,)) == 0       # negative window


def test_toprec_examples():
    assert stationary_toprec(0, stationary_key([0, 0, 0])) == 1
    assert stationary_toprec(0, stationary_key([2, 1, 1])) == 1
    assert stationary_toprec(1, stationary_key([2, 2])) == Fraction(1, 6)
    assert stationary_toprec(1, stationary_key([0])) == Fraction(-1, 24)
    assert stationary_toprec(1, stationary_key([2])) == Fraction(1, 24)


def test_toprec_mixed_keys():
    # string: <tau_0(1) tau_1(w)>_0 = <tau_0(w)>_0 = 1
    assert stationary_toprec(0, [("f", 0), ("p", 1)]) == 1
    # dilaton: <tau_1(1) tau_{2u}(w)>_1 = <tau_{2u}(w)>_1
    assert stationary_toprec(1, [("f", 1), ("p", 2)]) == \
        stationary_toprec(1, stationary_key([2]))


def test_toprec_unsupported():
    with pytest.raises(UnsupportedKeyError):
        stationary_toprec(2, stationary_key([4]))
    with pytest.raises(UnsupportedKeyError):
        stationary_toprec(0, [("f", 2), ("p", 1)])  # dimension-consistent key
    # dimension vanishing takes precedence over reducibility
    assert stationary_toprec(0, [("f", 2), ("p", 0), ("p", 0)]) == 0


def test_oracle_agreement_small():
    for g in (0, 1):
        for n in (1, 2, 3):
            for b in product(range(5), repeat=n):
                assert connected_stationary(g, b) == \
                    stationary_toprec(g, stationary_key(b))


def test_p_polynomials_against_table():
    p = p_polynomial(1, 1, 1)
    assert p.eval([3]) == Fraction(5, 24)  # (2u-1)/24 at u=3
    assert p_polynomial(0, 3, 3).eval([4, 7, 9]) == 1
    # odd-odd genus-1 two-point sector
    q = p_polynomial(1, 2, 0)
    u1, u2 = 2, 5
    assert q.eval([u1, u2]) == Fraction(
        2 * u1**2 + 2 * u2**2 + 2 * u1 * u2 - 3 * u1 - 3 * u2, 24)


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (1, 1), (1, 2)])
def test_eval_props(g, n):
    assert check_eval_props(g, n, 3)


def test_closed_forms():
    assert closed_forms("genus0-even-npoint", [0] * 5) == 1
    assert closed_forms("genus2-one-point", [2]) == Fraction(1, 1920)
    assert closed_forms("genus3-one-point", [0]) == 0
    assert closed_forms("genus1-two-even", [1, 1]) == Fraction(4, 24)
    with pytest.raises(KeyError):
        closed_forms("nope", [1])


def test_closed_form_powers():
    assert closed_form_powers("genus0-three-mixed", (1, 1, 1)) == [2, 1, 1]
    assert closed_form_powers("genus0-even-npoint", (1, 0, 2)) == [2, 0, 4]


def test_genus0_npoint_family_vs_evaluator():
    for n in (4, 5, 6):
        for u in product(range(3), repeat=n):
            want = closed_forms("genus0-even-npoint", list(u))
            got = stationary_toprec(0, stationary_key([2 * x for x in u]))
            assert got == want
