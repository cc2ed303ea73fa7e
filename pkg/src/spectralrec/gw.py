"""Two independent oracles for stationary Gromov-Witten invariants of the
projective line.

* The partition-measure oracle: disconnected invariants are weighted sums
  over partitions (squared normalized hook-length dimensions times shifted
  power sums); connected values come out of the cumulant over set partitions
  of the insertion set, with the vacuum handled by the exp(Q^2) normalization
  of the measure.  Works in every genus.

* The genus <= 1 topological-recursion evaluator: memoized rewriting by the
  string/divisor/dilaton equations and the three-point (genus zero) and
  one-point (genus one, with its 1/12 correction) recursions, from the base
  values <tau_{2u}>_0 = 1/(u+1)!^2 and <tau_0>_1 = -1/24.

Keys mix stationary insertions ('p', b) with fundamental-class insertions
('f', b); only ('f', 0) and ('f', 1) are removable, anything else raises
UnsupportedKeyError.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exact import pk_constant
from .mpoly import MPoly

Ins = Tuple[str, int]
Key = Tuple[Ins, ...]

__all__ = [
    "UnsupportedKeyError", "partitions", "dim_partition", "shifted_power_sum",
    "disconnected_stationary", "connected_stationary", "stationary_toprec",
    "canonical_key", "stationary_key", "p_polynomial", "check_eval_props",
    "closed_forms", "CLOSED_FORM_NAMES",
]


class UnsupportedKeyError(ValueError):
    pass


# ----------------------------------------------------------------------
# the partition-measure oracle
# ----------------------------------------------------------------------

_parts_cache: Dict[int, List[tuple]] = {}


def partitions(d: int) -> List[tuple]:
    """Partitions of d as weakly decreasing tuples, lexicographic order."""
    got = _parts_cache.get(d)
    if got is not None:
        return got

    out: List[tuple] = []

    def rec(rest: int, maxpart: int, prefix: tuple):
        if rest == 0:
            out.append(prefix)
            return
        for p in range(1, min(rest, maxpart) + 1):
            rec(rest - p, p, prefix + (p,))

    rec(d, d, ())
    out.sort()
    return _parts_cache.setdefault(d, out)


_dim_cache: Dict[tuple, int] = {}


def dim_partition(lam: Sequence[int]) -> int:
    """Hook-length dimension of the symmetric-group irreducible for lam."""
    lam = tuple(lam)
    got = _dim_cache.get(lam)
    if got is not None:
        return got
    if not lam:
        return _dim_cache.setdefault(lam, 1)
    cols = [0] * lam[0]
    for row in lam:
        for j in range(row):
            cols[j] += 1
    d = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            d //= (row - j) + (cols[j] - i) - 1
    return _dim_cache.setdefault(lam, d)


_psum_cache: Dict[Tuple[int, tuple], Fraction] = {}


def shifted_power_sum(k: int, lam: Sequence[int]) -> Fraction:
    """sum_i [(lam_i - i + 1/2)^k - (-i + 1/2)^k] + (1 - 2^-k) zeta(-k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lam = tuple(lam)
    got = _psum_cache.get((k, lam))
    if got is not None:
        return got
    half = Fraction(1, 2)
    total = pk_constant(k)
    for i, li in enumerate(lam, start=1):
        total += (li - i + half) ** k - (-i + half) ** k
    return _psum_cache.setdefault((k, lam), total)


_disc_cache: Dict[Tuple[int, tuple], Fraction] = {}


def disconnected_stationary(d: int, b: Sequence[int]) -> Fraction:
    """sum over |lam| = d of (dim/d!)^2 prod_i p_{b_i+1}(lam)/(b_i+1)!."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    key = (d, tuple(sorted(b)))
    got = _disc_cache.get(key)
    if got is not None:
        return got
    dfac = factorial(d)
    total = Fraction(0)
    for lam in partitions(d):
        w = Fraction(dim_partition(lam), dfac) ** 2
        for bi in key[1]:
            w *= shifted_power_sum(bi + 1, lam) / factorial(bi + 1)
        total += w
    return _disc_cache.setdefault(key, total)


def _set_partitions(items: List[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in _set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def connected_stationary(g: int, b: Sequence[int]) -> Fraction:
    """<prod tau_{b_i}(omega)>^g by cumulant extraction.

    Degrees beyond (sum(b) + 2 - 2g)/2 cannot contribute; the answer is the
    coefficient of Q^{sum(b)+2-2g} in the cumulant of the normalized
    expectation series of the subsets of insertions.
    """
    b = tuple(b)
    n = len(b)
    if n == 0 or any(x < 0 for x in b):
        raise ValueError("need n >= 1 insertions of power >= 0")
    W = sum(b) + 2 - 2 * g
    if W < 0 or W % 2:
        return Fraction(0)
    dmax = W // 2

    exp_neg = [Fraction((-1) ** j, factorial(j)) for j in range(dmax + 1)]

    def normalized_series(idx: Tuple[int, ...]) -> List[Fraction]:
        bt = [b[i] for i in idx]
        raw = [disconnected_stationary(d, bt) for d in range(dmax + 1)]
        return [sum(exp_neg[j] * raw[d - j] for j in range(d + 1))
                for d in range(dmax + 1)]

    series_cache: Dict[tuple, List[Fraction]] = {}

    def block_series(block: List[int]) -> List[Fraction]:
        k = tuple(sorted(block))
        got = series_cache.get(k)
        if got is None:
            got = series_cache.setdefault(k, normalized_series(k))
        return got

    total = Fraction(0)
    for p in _set_partitions(list(range(n))):
        conv = [Fraction(1)] + [Fraction(0)] * dmax
        for block in p:
            bs = block_series(block)
            conv = [sum(conv[j] * bs[d - j] for j in range(d + 1))
                    for d in range(dmax + 1)]
        sign = Fraction((-1) ** (len(p) - 1) * factorial(len(p) - 1))
        total += sign * conv[dmax]
    return total


# ----------------------------------------------------------------------
# the genus <= 1 topological-recursion evaluator
# ----------------------------------------------------------------------

def canonical_key(ins: Iterable[Ins]) -> Key:
    return tuple(sorted(ins))


def stationary_key(b: Sequence[int]) -> Key:
    return canonical_key(("p", x) for x in b)


_toprec_cache: Dict[Tuple[int, Key], Fraction] = {}


def stationary_toprec(g: int, ins: Iterable[Ins]) -> Fraction:
    """Memoized evaluator for genus <= 1 keys; see the module docstring."""
    if g not in (0, 1):
        raise UnsupportedKeyError(f"genus {g} is outside this evaluator")
    key = canonical_key(ins)
    got = _toprec_cache.get((g, key))
    if got is None:
        got = _toprec_cache.setdefault((g, key), _evaluate(g, key))
    return got


def _evaluate(g: int, key: Key) -> Fraction:
    l = sum(1 for c, _ in key if c == "f")
    S = sum(x for _, x in key)
    # dimension: S = 2g - 2 + 2d + l with d >= 0
    twod = S + 2 - 2 * g - l
    if twod < 0 or twod % 2:
        return Fraction(0)
    d = twod // 2

    n = len(key)
    if g == 1 and key == (("p", 0),):
        return Fraction(-1, 24)
    if g == 0 and n == 0:
        return Fraction(1) if d == 1 else Fraction(0)
    if g == 0 and n == 1 and key[0][0] == "p":
        u = key[0][1] // 2
        return Fraction(1, factorial(u + 1) ** 2)
    if g == 1 and n == 0:
        return Fraction(0)

    fund = [x for c, x in key if c == "f"]
    if 0 in fund:
        rest = _remove_one(key, ("f", 0))
        total = Fraction(0)
        for i, (c, x) in enumerate(rest):
            if x >= 1:
                total += stationary_toprec(g, rest[:i] + ((c, x - 1),) + rest[i + 1:])
        return total
    if 1 in fund:
        rest = _remove_one(key, ("f", 1))
        if not rest:
            raise UnsupportedKeyError("dilaton removal needs a stable remainder")
        return (2 * g - 2 + len(rest)) * stationary_toprec(g, rest)
    if fund:
        raise UnsupportedKeyError(f"irreducible fundamental-class power in {key}")

    powers = tuple(x for _, x in key)
    if g == 0:
        if n == 2:
            if powers == (0, 0):
                return Fraction(1)
            three = _trr0(canonical_key(key + (("p", 0),)))
            return three / d
        if all(x == 0 for x in powers):
            return Fraction(1)
        return _trr0(key)
    # genus one
    if all(x == 0 for x in powers):
        return Fraction(0)  # degree 0, two or more point constraints
    return _trr1(key)


def _remove_one(key: Key, item: Ins) -> Key:
    i = key.index(item)
    return key[:i] + key[i + 1:]


def _subsets(items: Key):
    n = len(items)
    for mask in range(1 << n):
        inc, exc = [], []
        for i in range(n):
            (inc if mask >> i & 1 else exc).append(items[i])
        yield tuple(inc), tuple(exc)


def _trr0(key: Key) -> Fraction:
    """Genus-zero recursion splitting off the largest stationary power."""
    powers = sorted((x for _, x in key), reverse=True)
    b1, rest = powers[0], sorted(powers[1:])
    b2, b3, spect = rest[0], rest[1], tuple(("p", x) for x in rest[2:])
    assert b1 >= 1
    total = Fraction(0)
    for I, J in _subsets(spect):
        left = (("f", 0), ("p", b1 - 1)) + I
        right = (("p", 0), ("p", b2), ("p", b3)) + J
        total += stationary_toprec(0, left) * stationary_toprec(0, right)
        left2 = (("p", 0), ("p", b1 - 1)) + I
        right2 = (("f", 0), ("p", b2), ("p", b3)) + J
        total += stationary_toprec(0, left2) * stationary_toprec(0, right2)
    return total


def _trr1(key: Key) -> Fraction:
    """Genus-one recursion on the largest power, with the 1/12 correction."""
    powers = sorted((x for _, x in key), reverse=True)
    b1, spect = powers[0], tuple(("p", x) for x in sorted(powers[1:]))
    assert b1 >= 1
    total = Fraction(0)
    for I, J in _subsets(spect):
        total += stationary_toprec(0, (("f", 0), ("p", b1 - 1)) + I) * \
            stationary_toprec(1, (("p", 0),) + J)
        total += stationary_toprec(0, (("p", 0), ("p", b1 - 1)) + I) * \
            stationary_toprec(1, (("f", 0),) + J)
    total += Fraction(1, 12) * stationary_toprec(
        0, (("f", 0), ("p", 0), ("p", b1 - 1)) + spect)
    return total


# ----------------------------------------------------------------------
# sector polynomials of the stationary invariants
# ----------------------------------------------------------------------

def _strip_prefactor(g: int, k: int, u: Sequence[int]) -> Fraction:
    """Invariant divided by prod 1/u_i!^2 (even block) and u_i/u_i!^2 (odd)."""
    ins = [("p", 2 * ui) for ui in u[:k]] + [("p", 2 * ui - 1) for ui in u[k:]]
    val = stationary_toprec(g, ins)
    scale = Fraction(1)
    for ui in u:
        scale *= Fraction(factorial(ui) ** 2)
    for ui in u[k:]:
        scale /= ui
    return val * scale


_ppoly_cache: Dict[Tuple[int, int, int], MPoly] = {}


def p_polynomial(g: int, n: int, k: int) -> MPoly:
    """The degree 3g-3+n sector polynomial in u, interpolated from the
    evaluator after stripping the factorial prefactors, and validated on
    off-grid samples."""
    if g not in (0, 1):
        raise UnsupportedKeyError("sector polynomials from the evaluator need g <= 1")
    if 2 * g - 2 + n <= 0 or not (0 <= k <= n):
        raise ValueError("stable (g, n) and 0 <= k <= n required")
    got = _ppoly_cache.get((g, n, k))
    if got is not None:
        return got
    from .expand import _lagrange_tensor  # same exact tensor interpolation

    D = 3 * g - 3 + n
    npts = D + 1
    grids = [[Fraction(j) for j in range(npts)] if i < k
             else [Fraction(j) for j in range(1, npts + 1)] for i in range(n)]

    def values(pt: tuple) -> Fraction:
        return _strip_prefactor(g, k, [int(x) for x in pt])

    poly = _lagrange_tensor(grids, values, n)
    if poly.total_degree() > D:
        raise ArithmeticError(f"sector ({g},{n},k={k}) exceeds degree bound {D}")
    for i in range(max(1, n)):
        probe = [int(gr[0]) for gr in grids]
        probe[i % n] = int(grids[i % n][-1]) + 1
        if poly.eval(probe) != _strip_prefactor(g, k, probe):
            raise ArithmeticError(f"sector fit mismatch at ({g},{n},k={k}), u={probe}")
    return _ppoly_cache.setdefault((g, n, k), poly)


def check_eval_props(g: int, n: int, bound: int) -> bool:
    """Removable fundamental insertions against the sector polynomials:
    a tau_0(1) insertion is evaluation of the last odd-block variable at 0,
    a tau_1(1) insertion is the derivative of the first even-block variable
    at 0 (prefactors stripped first)."""
    for k in range(n):          # tau_0(1): needs an odd-block slot, k <= n-1
        poly = p_polynomial(g, n, k)
        uranges = [range(0, bound + 1) if i < k else range(1, bound + 1)
                   for i in range(n - 1)]
        for u in iproduct(*uranges):
            ins = [("f", 0)] + [("p", 2 * x) for x in u[:k]] + \
                [("p", 2 * x - 1) for x in u[k:]]
            lhs = stationary_toprec(g, ins)
            scale = Fraction(1)
            for x in u:
                scale /= Fraction(factorial(x) ** 2)
            for x in u[k:]:
                scale *= x
            if lhs != scale * poly.eval(list(u) + [0]):
                return False
    if n < 2:
        # a bare dilaton insertion has no stable remainder to reduce to
        return True
    for k in range(1, n + 1):   # tau_1(1): needs an even-block slot, k >= 1
        poly = p_polynomial(g, n, k)
        dpoly = poly.derivative(0)
        uranges = [range(0, bound + 1) if i < k - 1 else range(1, bound + 1)
                   for i in range(n - 1)]
        for u in iproduct(*uranges):
            ins = [("f", 1)] + [("p", 2 * x) for x in u[:k - 1]] + \
                [("p", 2 * x - 1) for x in u[k - 1:]]
            lhs = stationary_toprec(g, ins)
            scale = Fraction(1)
            for x in u:
                scale /= Fraction(factorial(x) ** 2)
            for x in u[k - 1:]:
                scale *= x
            if lhs != scale * dpoly.eval([0] + list(u)):
                return False
    return True


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def _fac2(u: int) -> Fraction:
    return Fraction(factorial(u) ** 2)


def _g0_two_even(u1, u2):
    return Fraction(1) / (_fac2(u1) * _fac2(u2) * (u1 + u2 + 1))


def _g0_two_odd(u1, u2):
    return Fraction(u1 * u2) / (_fac2(u1) * _fac2(u2) * (u1 + u2))


def _g0_three_even(u1, u2, u3):
    return Fraction(1) / (_fac2(u1) * _fac2(u2) * _fac2(u3))


def _g0_three_mixed(u1, u2, u3):
    return Fraction(u2 * u3) / (_fac2(u1) * _fac2(u2) * _fac2(u3))


def _g0_four_even(u1, u2, u3, u4):
    return Fraction(u1 + u2 + u3 + u4 + 1) / (_fac2(u1) * _fac2(u2) * _fac2(u3) * _fac2(u4))


def _g0_four_mixed(u1, u2, u3, u4):
    return Fraction(u3 * u4 * (u1 + u2 + u3 + u4)) / \
        (_fac2(u1) * _fac2(u2) * _fac2(u3) * _fac2(u4))


def _g0_four_odd(u1, u2, u3, u4):
    num = u1 * u2 * u3 * u4 * (u1 + u2 + u3 + u4)
    return Fraction(num) / (_fac2(u1) * _fac2(u2) * _fac2(u3) * _fac2(u4))


def _g0_even_npoint(*u):
    n = len(u)
    if n < 3:
        raise ValueError("the even n-point family needs n >= 3")
    den = Fraction(1)
    for x in u:
        den *= _fac2(x)
    return Fraction((sum(u) + 1) ** (n - 3)) / den


def _g1_one(u):
    return Fraction(2 * u - 1, 24) / _fac2(u)


def _g1_two_even(u1, u2):
    return Fraction(2 * u1**2 + 2 * u2**2 + 2 * u1 * u2 - u1 - u2, 24) / (_fac2(u1) * _fac2(u2))


def _g1_two_odd(u1, u2):
    return Fraction(u1 * u2 * (2 * u1**2 + 2 * u2**2 + 2 * u1 * u2 - 3 * u1 - 3 * u2), 24) / \
        (_fac2(u1) * _fac2(u2))


def _g1_three_even(u1, u2, u3):
    u = (u1, u2, u3)
    s = sum(2 * x**3 - x**2 for x in u)
    s += sum(u[i] * u[j] * (4 * u[i] - 1)
             for i in range(3) for j in range(3) if i != j)
    s += 4 * u1 * u2 * u3
    return Fraction(s, 24) / (_fac2(u1) * _fac2(u2) * _fac2(u3))


def _g1_three_mixed(u1, u2, u3):
    u = (u1, u2, u3)
    s = sum(2 * x**3 - 5 * x**2 + 3 * x for x in u)
    s += sum(u[i] * u[j] * (4 * u[i] - 3)
             for i in range(3) for j in range(3) if i != j)
    s += 2 * u1**2 - 3 * u1 - 2 * u2 * u3 + 4 * u1 * u2 * u3
    return Fraction(u2 * u3 * s, 24) / (_fac2(u1) * _fac2(u2) * _fac2(u3))


def _g2_one(u):
    return Fraction(u**2 * (2 * u - 3) * (10 * u - 17), 2**7 * 3**2 * 5) / _fac2(u)


def _g3_one(u):
    return Fraction(u**2 * (u - 1) ** 2 * (2 * u - 5) * (140 * u**2 - 784 * u + 1101),
                    2**10 * 3**4 * 5 * 7) / _fac2(u)


CLOSED_FORM_NAMES: Dict[str, tuple] = {
    # name -> (genus, arity or None for variable, parities of tau powers, fn)
    "genus0-two-even": (0, 2, "ee", _g0_two_even),
    "genus0-two-odd": (0, 2, "oo", _g0_two_odd),
    "genus0-three-even": (0, 3, "eee", _g0_three_even),
    "genus0-three-mixed": (0, 3, "eoo", _g0_three_mixed),
    "genus0-four-even": (0, 4, "eeee", _g0_four_even),
    "genus0-four-mixed": (0, 4, "eeoo", _g0_four_mixed),
    "genus0-four-odd": (0, 4, "oooo", _g0_four_odd),
    "genus0-even-npoint": (0, None, "e*", _g0_even_npoint),
    "genus1-one-point": (1, 1, "e", _g1_one),
    "genus1-two-even": (1, 2, "ee", _g1_two_even),
    "genus1-two-odd": (1, 2, "oo", _g1_two_odd),
    "genus1-three-even": (1, 3, "eee", _g1_three_even),
    "genus1-three-mixed": (1, 3, "eoo", _g1_three_mixed),
    "genus2-one-point": (2, 1, "e", _g2_one),
    "genus3-one-point": (3, 1, "e", _g3_one),
}


def closed_forms(name: str, u: Sequence[int]) -> Fraction:
    """Evaluate one of the named closed-form families at a u-vector."""
    if name not in CLOSED_FORM_NAMES:
        raise KeyError(f"unknown closed form {name!r}")
    g, arity, _, fn = CLOSED_FORM_NAMES[name]
    if arity is not None and len(u) != arity:
        raise ValueError(f"{name} expects {arity} arguments")
    return fn(*u)


def closed_form_powers(name: str, u: Sequence[int]) -> List[int]:
    """tau powers b_i corresponding to a closed form's u-vector."""
    g, arity, parities, _ = CLOSED_FORM_NAMES[name]
    if parities == "e*":
        return [2 * x for x in u]
    return [2 * x if p == "e" else 2 * x - 1 for p, x in zip(parities, u)]
