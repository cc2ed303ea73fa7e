"""Golden data: the reference table of z- and x-expansion coefficient
polynomials per parity sector, transcribed once, against which the engine
output is diffed.  The table commands compare against these; they are never
regenerated from the engine.

Sector conventions match the engine: k = number of odd entries, odd variables
first; N-polynomials are in the b_i (even exponents only), m-polynomials in
the b_i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .mpoly import MPoly

__all__ = ["GOLDEN_TABLE", "golden_rows"]


def _F(a, b=1):
    return Fraction(a, b)


def _v(n, i):
    return MPoly.var(n, i)


def _const(n, c):
    return MPoly.const(n, c)


def _sum_pow(n, p):
    return MPoly.sym_power_sum(n, p)


def _table() -> Dict[Tuple[int, int, int], Tuple[MPoly, MPoly]]:
    t: Dict[Tuple[int, int, int], Tuple[MPoly, MPoly]] = {}

    # ---- (0,3) ------------------------------------------------------
    zero3 = MPoly.zero(3)
    one3 = _const(3, 1)
    t[(0, 3, 0)] = (zero3, zero3)
    t[(0, 3, 1)] = (one3, one3)
    t[(0, 3, 2)] = (zero3, zero3)
    t[(0, 3, 3)] = (one3, one3)

    # ---- (1,1) ------------------------------------------------------
    b = _v(1, 0)
    t[(1, 1, 0)] = (MPoly.zero(1), MPoly.zero(1))
    t[(1, 1, 1)] = ((b ** 2 - 3) * _F(1, 48), (b - 1 * _const(1, 2)) * _F(1, 24))

    # ---- (0,4) ------------------------------------------------------
    s2 = _sum_pow(4, 2)
    s1 = _sum_pow(4, 1)
    zero4 = MPoly.zero(4)
    t[(0, 4, 0)] = (s2 * _F(1, 4), s1 * _F(1, 2))
    t[(0, 4, 1)] = (zero4, zero4)
    t[(0, 4, 2)] = ((s2 - 2) * _F(1, 4), (s1 - 2) * _F(1, 2))
    t[(0, 4, 3)] = (zero4, zero4)
    t[(0, 4, 4)] = (s2 * _F(1, 4), (s1 - 2) * _F(1, 2))

    # ---- (1,2) ------------------------------------------------------
    b1, b2 = _v(2, 0), _v(2, 1)
    S = b1 ** 2 + b2 ** 2
    t[(1, 2, 0)] = ((S - 8) * S * _F(1, 384),
                    (S + b1 * b2 - 3 * (b1 + b2)) * _F(1, 48))
    t[(1, 2, 1)] = (MPoly.zero(2), MPoly.zero(2))
    t[(1, 2, 2)] = ((S - 6) * (S - 2) * _F(1, 384),
                    (S + b1 * b2 - 4 * (b1 + b2) + _const(2, 5)) * _F(1, 48))

    # ---- (1,3) ------------------------------------------------------
    c1, c2, c3 = (_v(3, i) for i in range(3))
    pair6 = MPoly.ordered_pair_sum(3, lambda x, y: x ** 2 * y ** 2 * (x ** 2 - 5))
    prod2 = (c1 * c2 * c3) ** 2
    zero3b = MPoly.zero(3)
    n131 = (_sum_pow(3, 6) - 20 * _sum_pow(3, 4) + 94 * _sum_pow(3, 2)
            + 6 * pair6 + 12 * prod2 + 3 * c1 ** 4 - 63 * c1 ** 2
            - _const(3, 15)) * _F(1, 4608)
    m131 = (_sum_pow(3, 3) - 7 * _sum_pow(3, 2) + 14 * _sum_pow(3, 1)
            + MPoly.ordered_pair_sum(3, lambda x, y: x * y * (2 * x - 5))
            + 2 * c1 * c2 * c3 + c1 ** 2 - 5 * c1 - _const(3, 4)) * _F(1, 96)
    n133 = (_sum_pow(3, 6) - 17 * _sum_pow(3, 4) + 103 * _sum_pow(3, 2)
            + 6 * pair6 + 12 * prod2 - _const(3, 129)) * _F(1, 4608)
    m133 = (_sum_pow(3, 3) - 8 * _sum_pow(3, 2) + 23 * _sum_pow(3, 1)
            + 2 * MPoly.ordered_pair_sum(3, lambda x, y: x * y * (x - 3))
            + 2 * c1 * c2 * c3 - _const(3, 26)) * _F(1, 96)
    t[(1, 3, 0)] = (zero3b, zero3b)
    t[(1, 3, 1)] = (n131, m131)
    t[(1, 3, 2)] = (zero3b, zero3b)
    t[(1, 3, 3)] = (n133, m133)

    # ---- (2,1) ------------------------------------------------------
    b = _v(1, 0)
    t[(2, 1, 0)] = (MPoly.zero(1), MPoly.zero(1))
    t[(2, 1, 1)] = (
        (b ** 2 - 1) ** 2 * (5 * b ** 4 - 186 * b ** 2 + _const(1, 1605))
        * _F(1, 2 ** 16 * 3 ** 3 * 5),
        (b - 1) ** 2 * (b - 4) * (5 * b - _const(1, 22)) * _F(1, 2 ** 9 * 3 ** 2 * 5),
    )

    # ---- (3,1) ------------------------------------------------------
    # The squared factor is (b^2-9)^2: this is what the m-row transforms
    # back to, and what the genus-3 one-point closed form pins end to end.
    t[(3, 1, 0)] = (MPoly.zero(1), MPoly.zero(1))
    t[(3, 1, 1)] = (
        (b ** 2 - 1) ** 2 * (b ** 2 - 9) ** 2
        * (5 * b ** 6 - 649 * b ** 4 + 27995 * b ** 2 - _const(1, 394695))
        * _F(1, 2 ** 25 * 3 ** 6 * 5 ** 2 * 7),
        (b - 1) ** 2 * (b - 3) ** 2 * (b - 6)
        * (35 * b ** 2 - 462 * b + _const(1, 1528)) * _F(1, 2 ** 14 * 3 ** 4 * 5 * 7),
    )
    return t


GOLDEN_TABLE: Dict[Tuple[int, int, int], Tuple[MPoly, MPoly]] = _table()


def golden_rows():
    """Rows (g, n, k, N-poly, m-poly) in table order."""
    order = [(0, 3), (1, 1), (0, 4), (1, 2), (1, 3), (2, 1), (3, 1)]
    for g, n in order:
        for k in range(n + 1):
            npoly, mpoly = GOLDEN_TABLE[(g, n, k)]
            yield g, n, k, npoly, mpoly
