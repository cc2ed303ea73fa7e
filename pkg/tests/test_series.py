import random
from fractions import Fraction

import pytest

from spectralrec.series import (LocalSeries, Poly, PrecisionError, RationalFn,
                                laurent_at, partial_fractions, residue)


def rf(num, den=(1,)):
    return RationalFn(Poly(num), Poly(den))


def test_laurent_simple_pole():
    # 1/(z-1) at 1: exact pole
    s = laurent_at(rf([1], [-1, 1]), 1, 2)
    assert s.coeff(-1) == 1 and s.coeff(0) == 0 and s.coeff(1) == 0


def test_laurent_geometric():
    # 1/(1-z) at 0
    s = laurent_at(rf([1], [1, -1]), 0, 3)
    assert [s.coeff(e) for e in (0, 1, 2)] == [1, 1, 1]


def test_laurent_dx_at_one():
    # 1 - 1/z^2 at 1: direct Taylor of 1 - (1+t)^{-2}
    f = rf([-1, 0, 1], [0, 0, 1])
    s = laurent_at(f, 1, 3)
    assert s.coeff(0) == 0 and s.coeff(1) == 2 and s.coeff(2) == -3


def test_laurent_at_infinity():
    # z + 1/z at infinity: series in 1/z with coefficients 1, 0, 1
    x = rf([1, 0, 1], [0, 1])
    s = laurent_at(x, "inf", 3)
    assert s.coeff(-1) == 1 and s.coeff(0) == 0 and s.coeff(1) == 1


def test_residue_values_and_errors():
    assert residue(laurent_at(rf([1], [-1, 1]), 1, 2)) == 1
    assert residue(laurent_at(rf([1], [1, -2, 1]), 1, 2)) == 0  # 1/(z-1)^2
    short = LocalSeries(-3, [Fraction(1)])  # trusted only at exponent -3
    with pytest.raises(PrecisionError):
        short.residue()


def test_partial_fractions_examples():
    parts, poly = partial_fractions(rf([-1], [1, 0, -1]))  # 1/(z^2-1)
    assert parts == {(1, 1): Fraction(1, 2), (-1, 1): Fraction(-1, 2)}
    assert poly.is_zero()

    parts, poly = partial_fractions(rf([0, 0, 1], [-1, 1]))  # z^2/(z-1)
    assert parts == {(1, 1): Fraction(1)}
    assert poly == Poly([1, 1])

    # (z^2+1)/(z^2 (z-1)): values fixed by the recombination identity
    parts, poly = partial_fractions(rf([1, 0, 1], [0, 0, -1, 1]))
    assert parts == {(1, 1): Fraction(2), (0, 1): Fraction(-1), (0, 2): Fraction(-1)}
    assert poly.is_zero()


def test_partial_fractions_unknown_pole():
    with pytest.raises(ValueError):
        partial_fractions(rf([1], [-2, 1]))  # pole at 2 not declared


def _random_rf(rng):
    def poly():
        return Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
    num = poly()
    den = Poly([1])
    for _ in range(rng.randint(0, 2)):
        den = den * Poly([rng.choice([-1, 0, 1]), 1])
    if den.is_zero():
        den = Poly([1])
    return RationalFn(num, den)


def test_product_of_expansions():
    # laurent(f*g) agrees with laurent(f)*laurent(g) on the shared window
    rng = random.Random(12)
    done = 0
    while done < 200:
        f, g = _random_rf(rng), _random_rf(rng)
        if f.is_zero() or g.is_zero():
            continue
        center = rng.choice([0, 1, -1])
        sf = laurent_at(f, center, 6)
        sg = laurent_at(g, center, 6)
        sp = laurent_at(f * g, center, 6)
        both = sf * sg
        for e in range(both.min_exp, min(both.trunc, sp.trunc)):
            assert both.coeff(e) == sp.coeff(e)
        done += 1


def test_residue_of_derivative_vanishes():
    rng = random.Random(13)
    for _ in range(50):
        f = _random_rf(rng)
        if f.is_zero():
            continue
        for center in (0, 1, -1):
            s = laurent_at(f.derivative(), center, 2)
            assert s.residue() == 0


def test_recombination_random():
    rng = random.Random(14)
    for _ in range(50):
        f = _random_rf(rng)
        partial_fractions(f)  # recombination identity asserted internally
