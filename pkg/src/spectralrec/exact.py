"""Exact rational scalars and the number-theoretic constants used by the
partition-measure oracle: Bernoulli numbers, zeta at negative integers, and
the constant term of the shifted power sums.

Every scalar in this package is a ``fractions.Fraction`` (arbitrary precision,
always in lowest terms with positive denominator).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

Rat = Fraction

__all__ = ["Rat", "rat_str", "rat_parse", "bernoulli", "zeta_neg", "pk_constant"]


def rat_str(x: Fraction) -> str:
    """Canonical text form: "p/q" with q > 0 in lowest terms, or "p" if q = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_parse(s: str) -> Fraction:
    """Inverse of :func:`rat_str`."""
    return Fraction(s.strip())


# Bernoulli cache, grown monotonically under a lock so concurrent callers see
# a consistent prefix.  Convention B_1 = -1/2 (only even indices matter for
# zeta_neg, but the recurrence needs B_1).
_bern: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """B_m via the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1."""
    if m < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if m < len(_bern):
        return _bern[m]
    with _bern_lock:
        while len(_bern) <= m:
            k = len(_bern)
            s = sum(comb(k + 1, j) * _bern[j] for j in range(k))
            _bern.append(Fraction(-s, k + 1))
    return _bern[m]


def zeta_neg(k: int) -> Fraction:
    """zeta(-k) = -B_{k+1}/(k+1) for k >= 1."""
    if k < 1:
        raise ValueError("zeta_neg is defined for k >= 1")
    return -bernoulli(k + 1) / (k + 1)


def pk_constant(k: int) -> Fraction:
    """(1 - 2^{-k}) zeta(-k): the constant term of the shifted power sum p_k."""
    if k < 1:
        raise ValueError("pk_constant is defined for k >= 1")
    return (1 - Fraction(1, 2**k)) * zeta_neg(k)
