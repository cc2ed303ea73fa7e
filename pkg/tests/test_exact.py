import random
from fractions import Fraction
from math import comb

import pytest

from spectralrec.exact import bernoulli, pk_constant, rat_parse, rat_str, zeta_neg


@pytest.mark.parametrize("m,want", [
    (0, Fraction(1)),
    (1, Fraction(-1, 2)),
    (2, Fraction(1, 6)),
    (4, Fraction(-1, 30)),
    (12, Fraction(-691, 2730)),
])
def test_bernoulli_values(m, want):
    assert bernoulli(m) == want


def test_odd_bernoulli_vanish():
    assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 21))


@pytest.mark.parametrize("k,want", [
    (1, Fraction(-1, 12)),
    (2, Fraction(0)),
    (3, Fraction(1, 120)),
])
def test_zeta_neg(k, want):
    assert zeta_neg(k) == want


@pytest.mark.parametrize("k,want", [
    (1, Fraction(-1, 24)),
    (2, Fraction(0)),
    (3, Fraction(7, 960)),
])
def test_pk_constant(k, want):
    assert pk_constant(k) == want


def test_render_parse_round_trip():
    rng = random.Random(8)
    for _ in range(200):
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert rat_parse(rat_str(x)) == x
    assert rat_str(Fraction(-3, 6)) == "-1/2"
    assert rat_str(Fraction(4, 2)) == "2"


def test_field_axioms_on_samples():
    rng = random.Random(9)
    for _ in range(100):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        b = Fraction(rng.randint(1, 99), rng.randint(1, 99))
        assert a * b / b == a
        assert (a + b) - b == a


def test_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n):
            assert comb(n, k) == comb(n - 1, k - 1) + comb(n - 1, k)


def test_preconditions():
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        zeta_neg(0)
    with pytest.raises(ValueError):
        pk_constant(0)
