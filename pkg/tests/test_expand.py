from fractions import Fraction
from math import factorial

import pytest

from spectralrec.expand import (M_value, M_value_poly, N_value,
                                check_M_divisor_string, expansion_0_1,
                                expansion_0_2, m_quasi, n_quasi, n_to_m,
                                prefactor, quasi_to_json_obj, transform_polys,
                                _m02_value)
from spectralrec.golden import GOLDEN_TABLE
from spectralrec.mpoly import MPoly


def test_n_values():
    assert N_value(0, 3, (1, 1, 1)) == 1
    assert N_value(1, 1, (1,)) == Fraction(-1, 24)
    assert N_value(0, 3, (2, 1, 1)) == 0


def test_quasi_sectors_match_golden_small():
    for (g, n) in [(0, 4), (1, 2)]:
        nq, mq = n_quasi(g, n), m_quasi(g, n)
        for k in range(n + 1):
            assert nq.sectors[k] == GOLDEN_TABLE[(g, n, k)][0]
            assert mq.sectors[k] == GOLDEN_TABLE[(g, n, k)][1]


def test_sector_symmetry_blocks():
    nq = n_quasi(1, 3)
    for k, sec in nq.sectors.items():
        assert sec.is_symmetric_in_blocks(k)


def test_transform_polys():
    p1, q1 = transform_polys(1)
    assert p1.compose_affine(Fraction(1, 2), 0).a == [Fraction(0), Fraction(2)]  # 2b
    _, q2 = transform_polys(2)
    assert q2.compose_affine(Fraction(1, 2), Fraction(-1, 2)).a == \
        [Fraction(5), Fraction(-12), Fraction(8)]  # 8b^2 - 12b + 5
    p3, q3 = transform_polys(3)
    assert p3.compose_affine(Fraction(1, 2), 0).a == \
        [Fraction(0), Fraction(96), Fraction(-128), Fraction(48)]  # 16b(3b^2-8b+6)
    assert q3.compose_affine(Fraction(1, 2), Fraction(-1, 2)).a == \
        [Fraction(-61), Fraction(166), Fraction(-152), Fraction(48)]


def test_transform_leading_coefficients():
    for alpha in range(8):
        p, q = transform_polys(alpha)
        lead = Fraction(factorial(alpha) * 2 ** (2 * alpha))
        assert p.a[-1] == lead and q.a[-1] == lead


def test_m_values():
    # m^1_1(b) = (b-2)/24, so M^1_1(1) = -1/24 and M^1_1(3) = 3 C(2,1)/24 = 1/4
    assert M_value(1, 1, (1,)) == Fraction(-1, 24)
    assert M_value(1, 1, (3,)) == Fraction(1, 4)
    assert M_value(0, 3, (3, 2, 2)) == 24
    assert M_value_poly(1, 1, (3,)) == Fraction(1, 4)
    assert M_value(0, 3, (2, 2, 2)) == 0     # parity
    assert M_value(1, 2, (3, 0)) == 0        # zero entry


def test_prefactor():
    assert prefactor((1,)) == 1
    assert prefactor((3,)) == 3 * 2
    assert prefactor((4,)) == 2 * 6
    assert prefactor((0,)) == 0


def test_dual_routes_rechecked_on_demand():
    # n_to_m performs its own route agreement; run it on a fresh quasi
    n_to_m(n_quasi(1, 2))


def test_expansion_0_1():
    t = expansion_0_1(9)
    for u in range(5):
        b = 2 * u + 1
        assert t.value((b,)) == Fraction(factorial(2 * u + 1), factorial(u + 1) ** 2)
    assert t.value((2,)) == 0
    assert t.value((4,)) == 0


def test_expansion_0_2():
    t = expansion_0_2(6)
    assert t.value((1, 1)) == 1
    assert t.value((2, 2)) == 2
    assert t.value((1, 2)) == 0
    # symmetric and order-independent
    for (b1, b2), v in t.entries.items():
        assert t.value((b2, b1)) == v
        assert _m02_value(b2, b1) == v


@pytest.mark.parametrize("g,n", [(0, 3), (1, 1)])
def test_divisor_string_on_M(g, n):
    assert check_M_divisor_string(g, n, 5)


def test_divisor_example_values():
    # M^1_2(3,1) = d M^1_1(3) with d = 1
    assert M_value_poly(1, 2, (3, 1)) == M_value_poly(1, 1, (3,))


def test_quasi_json_shape():
    obj = quasi_to_json_obj(n_quasi(1, 1))
    assert obj["g"] == 1 and obj["kind"] == "N"
    assert {s["k"] for s in obj["sectors"]} == {0, 1}


def test_parity_vanishing_of_M():
    for g, b in [(1, (2,)), (1, (1, 2)), (0, (2, 2, 2))]:
        n = len(b)
        assert (sum(b) - n - 2 * g) % 2 == 1
        assert M_value(g, n, b) == 0
