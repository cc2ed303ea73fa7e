from fractions import Fraction
from math import factorial

import pytest

from spectralrec.psi import check_top_coefficients, intersection


def test_base_values():
    assert intersection(0, (0, 0, 0)) == 1
    assert intersection(1, (1,)) == Fraction(1, 24)


def test_recursion_pins_the_one_point_base():
    # the three-term recursion applied at <tau_2 tau_0>_1 forces the base:
    # 15 <tau_0 tau_2>_1 = 3 <tau_1>_1 + 1/2, and the string equation makes
    # the left side equal 15 <tau_1>_1, so <tau_1>_1 = 1/24 exactly.
    assert 15 * intersection(1, (0, 2)) == 3 * intersection(1, (1,)) + Fraction(1, 2)
    assert intersection(1, (0, 2)) == intersection(1, (1,))


def test_known_values():
    assert intersection(2, (4,)) == Fraction(1, 1152)
    assert intersection(3, (7,)) == Fraction(1, 82944)
    assert intersection(0, (1, 0, 0, 0)) == 1
    assert intersection(2, (2, 3)) == Fraction(29, 5760)


def test_dimension_vanishing():
    assert intersection(0, (1, 1, 1)) == 0
    assert intersection(1, (2,)) == 0
    assert intersection(2, (3,)) == 0


def test_string_equation_property():
    cases = [(0, (1, 0, 0)), (1, (1, 1)), (1, (2, 0)), (2, (4, 0)), (2, (3, 1))]
    for g, beta in cases:
        lhs = intersection(g, (0,) + beta)
        rhs = sum(intersection(g, beta[:j] + (beta[j] - 1,) + beta[j + 1:])
                  for j in range(len(beta)))
        assert lhs == rhs


def test_dilaton_equation_property():
    cases = [(0, (0, 0, 0)), (1, (1,)), (2, (4,)), (1, (1, 1))]
    for g, beta in cases:
        lhs = intersection(g, (1,) + beta)
        assert lhs == (2 * g - 2 + len(beta)) * intersection(g, beta)


def test_tau1_powers_genus_one():
    for n in range(1, 7):
        assert intersection(1, (1,) * n) == Fraction(factorial(n - 1), 24)


@pytest.mark.parametrize("g,n,k", [(1, 1, 1), (0, 4, 0), (1, 2, 2), (1, 2, 1)])
def test_top_coefficients(g, n, k):
    assert check_top_coefficients(g, n, k)
