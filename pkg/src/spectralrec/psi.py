"""Exact psi-class intersection numbers on the moduli of curves, and the
top-coefficient cross-checks tying them to the sector polynomials.

The evaluator uses the Virasoro-type three-term recursion on the largest
index (after string/dilaton reductions), from the bases <tau_0^3>_0 = 1 and
<tau_1>_1 = 1/24.  The second base cannot be produced by the recursion alone
(its genus-reducing term lands on an unstable moduli space); the test suite
pins it through the identity 15 <tau_0 tau_2>_1 = 3 <tau_1>_1 + 1/2.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Dict, Iterable, List, Sequence, Tuple

from .mpoly import MPoly

__all__ = ["intersection", "check_top_coefficients"]


def _df(m: int) -> int:
    """Double factorial for odd m >= -1, with (-1)!! = 1."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


_cache: Dict[Tuple[int, tuple], Fraction] = {}


def intersection(g: int, beta: Sequence[int]) -> Fraction:
    """<tau_{beta_1} ... tau_{beta_n}>_g, zero off the dimension constraint."""
    beta = tuple(sorted(beta, reverse=True))
    n = len(beta)
    if any(x < 0 for x in beta):
        return Fraction(0)
    if 2 * g - 2 + n <= 0:
        return Fraction(0)
    if sum(beta) != 3 * g - 3 + n:
        return Fraction(0)
    got = _cache.get((g, beta))
    if got is None:
        got = _cache.setdefault((g, beta), _evaluate(g, beta))
    return got


def _evaluate(g: int, beta: tuple) -> Fraction:
    n = len(beta)
    if (g, beta) == (0, (0, 0, 0)):
        return Fraction(1)
    if (g, beta) == (1, (1,)):
        return Fraction(1, 24)
    if beta[-1] == 0:
        rest = beta[:-1]
        total = Fraction(0)
        for j in range(len(rest)):
            total += intersection(g, rest[:j] + (rest[j] - 1,) + rest[j + 1:])
        return total
    if beta[-1] == 1:
        rest = beta[:-1]
        return (2 * g - 2 + len(rest)) * intersection(g, rest)

    k, rest = beta[0], beta[1:]
    total = Fraction(0)
    for j in range(len(rest)):
        w = Fraction(_df(2 * (k + rest[j]) - 1), _df(2 * rest[j] - 1))
        total += w * intersection(g, rest[:j] + (k + rest[j] - 1,) + rest[j + 1:])
    half = Fraction(0)
    for a in range(k - 1):
        b = k - 2 - a
        w = Fraction(_df(2 * a + 1) * _df(2 * b + 1))
        half += w * intersection(g - 1, (a, b) + rest)
        for g1 in range(g + 1):
            g2 = g - g1
            for mask in range(1 << len(rest)):
                I = tuple(rest[i] for i in range(len(rest)) if mask >> i & 1)
                J = tuple(rest[i] for i in range(len(rest)) if not mask >> i & 1)
                half += w * intersection(g1, (a,) + I) * intersection(g2, (b,) + J)
    total += half / 2
    return total / _df(2 * k + 1)


def check_top_coefficients(g: int, n: int, k: int) -> bool:
    """Top homogeneous coefficients of the sector polynomials against the
    intersection numbers.

    m-form: coefficient of b^beta equals [1 + (-1)^{k+n}] 2^{-(2g-2+n)} <psi^beta>.
    p-form (in u, from the evaluator for g <= 1, else by substituting
    b = 2u+1 / 2u into the m-form): coefficient of u^beta equals 2^g <psi^beta>.
    """
    from . import expand, gw

    D = 3 * g - 3 + n
    mq = expand.m_quasi(g, n)
    sec = mq.sectors[k]
    factor = Fraction(1 + (-1) ** (k + n), 2 ** (2 * g - 2 + n))
    top = sec.homogeneous_part(D)
    for exps in _compositions(D, n):
        if top.c.get(exps, Fraction(0)) != factor * intersection(g, exps):
            return False

    if g <= 1:
        pf = gw.p_polynomial(g, n, k)
    else:
        subs = [(Fraction(2), Fraction(1))] * k + [(Fraction(2), Fraction(0))] * (n - k)
        pf = sec.subst_affine(subs)
    ptop = pf.homogeneous_part(D)
    for exps in _compositions(D, n):
        expected = Fraction(2 ** g) * intersection(g, exps) if (k + n) % 2 == 0 \
            else Fraction(0)
        if ptop.c.get(exps, Fraction(0)) != expected:
            return False
    return True


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
