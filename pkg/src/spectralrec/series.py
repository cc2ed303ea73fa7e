"""Dense univariate polynomials, truncated Laurent series at a point, rational
functions, and partial fractions over exact rationals.

A LocalSeries knows which coefficient window it can be trusted on: exponents
below ``min_exp`` are exactly zero, exponents at or above ``trunc`` are
unknown and never silently assumed zero.  Arithmetic propagates the trusted
window conservatively, and coefficient reads outside it raise
:class:`PrecisionError`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

__all__ = [
    "PrecisionError",
    "Poly",
    "LocalSeries",
    "RationalFn",
    "laurent_at",
    "residue",
    "partial_fractions",
]

INF = "inf"  # marker for expansion at z = infinity


class PrecisionError(ArithmeticError):
    """A coefficient outside the trusted window of a LocalSeries was needed."""


class Poly:
    """Dense polynomial; coefficient list indexed by exponent, no trailing zeros."""

    __slots__ = ("a",)

    def __init__(self, coeffs: Sequence = ()):
        a = [Fraction(c) for c in coeffs]
        while a and not a[-1]:
            a.pop()
        self.a = a

    @classmethod
    def const(cls, v) -> "Poly":
        return cls([v])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    def degree(self) -> int:
        return len(self.a) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.a

    def __getitem__(self, k: int) -> Fraction:
        return self.a[k] if 0 <= k < len(self.a) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.a == other.a

    def __hash__(self):
        return hash(tuple(self.a))

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        m = max(len(self.a), len(other.a))
        return Poly([self[k] + other[k] for k in range(m)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.a])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.a])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.a) + len(other.a) - 1)
        for i, ci in enumerate(self.a):
            if not ci:
                continue
            for j, cj in enumerate(other.a):
                out[i + j] += ci * cj
        return Poly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int) -> "Poly":
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.a):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.a)][1:])

    def shifted(self, c) -> "Poly":
        """p(t + c) as a polynomial in t."""
        c = Fraction(c)
        n = len(self.a)
        out = [Fraction(0)] * n
        for k, ak in enumerate(self.a):
            if not ak:
                continue
            pw = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += ak * comb(k, j) * pw
                pw *= c
        return Poly(out)

    def reversed_coeffs(self, deg: int) -> "Poly":
        """z^deg * p(1/z); requires deg >= degree(p)."""
        if deg < self.degree():
            raise ValueError("reversal degree too small")
        out = [Fraction(0)] * (deg + 1)
        for k, ak in enumerate(self.a):
            out[deg - k] = ak
        return Poly(out)

    def compose_affine(self, a, b) -> "Poly":
        """p(a*x + b)."""
        lin = Poly([b, a])
        out = Poly()
        pw = Poly([1])
        for c in self.a:
            out = out + pw * c
            pw = pw * lin
        return out

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.a) - len(other.a) + 1)
        r = list(self.a)
        d = other.degree()
        lead = other.a[-1]
        while len(r) - 1 >= d and r:
            k = len(r) - 1 - d
            f = r[-1] / lead
            q[k] = f
            for j in range(len(other.a)):
                r[k + j] -= f * other.a[j]
            while r and not r[-1]:
                r.pop()
        return Poly(q), Poly(r)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a * (1 / a.a[-1])  # monic

    def __repr__(self):
        return f"Poly({[str(c) for c in self.a]})"


class LocalSeries:
    """Truncated Laurent series sum_{e >= min_exp} c_e t^e, trusted for e < trunc."""

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int, coeffs: Sequence):
        self.min_exp = min_exp
        self.coeffs = [Fraction(c) for c in coeffs]

    @property
    def trunc(self) -> int:
        return self.min_exp + len(self.coeffs)

    def coeff(self, e: int) -> Fraction:
        if e >= self.trunc:
            raise PrecisionError(f"coefficient t^{e} beyond trusted window (trunc={self.trunc})")
        if e < self.min_exp:
            return Fraction(0)
        return self.coeffs[e - self.min_exp]

    def residue(self) -> Fraction:
        if self.trunc <= -1:
            raise PrecisionError("series truncated before t^-1; residue unknown")
        return self.coeff(-1)

    def __add__(self, other: "LocalSeries") -> "LocalSeries":
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.trunc, other.trunc)
        if hi <= lo:
            raise PrecisionError("empty trusted window in series addition")
        out = []
        for e in range(lo, hi):
            a = self.coeffs[e - self.min_exp] if self.min_exp <= e < self.trunc else Fraction(0)
            b = other.coeffs[e - other.min_exp] if other.min_exp <= e < other.trunc else Fraction(0)
            out.append(a + b)
        return LocalSeries(lo, out)

    def __neg__(self) -> "LocalSeries":
        return LocalSeries(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other: "LocalSeries") -> "LocalSeries":
        return self + (-other)

    def __mul__(self, other) -> "LocalSeries":
        if isinstance(other, (int, Fraction)):
            return LocalSeries(self.min_exp, [c * other for c in self.coeffs])
        lo = self.min_exp + other.min_exp
        hi = min(self.trunc + other.min_exp, other.trunc + self.min_exp)
        out = [Fraction(0)] * (hi - lo)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            ei = self.min_exp + i
            jmax = min(len(other.coeffs), hi - ei - other.min_exp)
            for j in range(jmax):
                cj = other.coeffs[j]
                if cj:
                    out[ei + other.min_exp + j - lo] += ci * cj
        return LocalSeries(lo, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LocalSeries":
        """Multiply by t^k."""
        return LocalSeries(self.min_exp + k, list(self.coeffs))

    def normalized(self) -> "LocalSeries":
        """Strip exactly-zero leading coefficients (raising min_exp)."""
        i = 0
        while i < len(self.coeffs) and not self.coeffs[i]:
            i += 1
        if i == len(self.coeffs):
            raise PrecisionError("series is zero on its whole trusted window")
        return LocalSeries(self.min_exp + i, self.coeffs[i:])

    def inverse(self) -> "LocalSeries":
        s = self.normalized()
        u = s.coeffs
        n = len(u)
        inv0 = 1 / u[0]
        b = [Fraction(0)] * n
        b[0] = inv0
        for m in range(1, n):
            acc = Fraction(0)
            for k in range(1, m + 1):
                acc += u[k] * b[m - k]
            b[m] = -acc * inv0
        return LocalSeries(-s.min_exp, b)

    def __pow__(self, k: int) -> "LocalSeries":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return LocalSeries(0, [Fraction(1)] + [Fraction(0)] * len(self.coeffs))
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def is_zero_through(self, e_hi: int) -> bool:
        """True iff every trusted coefficient at exponent < e_hi vanishes."""
        if self.trunc < e_hi:
            raise PrecisionError("trusted window does not reach the requested exponent")
        return all(not c for i, c in enumerate(self.coeffs) if self.min_exp + i < e_hi)

    def __repr__(self):
        return f"LocalSeries(min_exp={self.min_exp}, trunc={self.trunc}, {[str(c) for c in self.coeffs]})"


class RationalFn:
    """Quotient of polynomials, normalized: gcd(num, den) = 1, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly([1])):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if not g.is_zero() and g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.a[-1]
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, v) -> "RationalFn":
        return cls(Poly([v]))

    @classmethod
    def z(cls) -> "RationalFn":
        return cls(Poly([0, 1]))

    def __add__(self, other) -> "RationalFn":
        other = self._coerce(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "RationalFn":
        other = self._coerce(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other) -> "RationalFn":
        other = self._coerce(other)
        return RationalFn(self.num * other.den, self.den * other.num)

    __radd__ = __add__
    __rmul__ = __mul__

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, Poly):
            return RationalFn(other)
        return RationalFn(Poly([other]))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def eval(self, x) -> Fraction:
        d = self.den.eval(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.eval(x) / d

    def derivative(self) -> "RationalFn":
        return RationalFn(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def subst_inv(self) -> "RationalFn":
        """f(1/z) as a rational function of z."""
        dn, dd = max(self.num.degree(), 0), max(self.den.degree(), 0)
        d = max(dn, dd)
        num = self.num.reversed_coeffs(d)
        den = self.den.reversed_coeffs(d)
        return RationalFn(num, den)

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError("not a polynomial")
        return self.num * (1 / self.den.a[0])

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"


def laurent_at(f: RationalFn, center, order: int) -> LocalSeries:
    """Laurent expansion of f at ``center`` trusted for exponents < ``order``.

    ``center`` may be a number or the string "inf", in which case the series
    variable is 1/z.
    """
    if f.num.is_zero():
        return LocalSeries(0, [Fraction(0)] * max(1, order))
    if center == INF:
        return laurent_at(f.subst_inv(), 0, order)
    num = f.num.shifted(center)
    den = f.den.shifted(center)
    # exact leading power of t in the denominator / numerator
    mu_d = 0
    while not den[mu_d]:
        mu_d += 1
    mu_n = 0
    while not num[mu_n]:
        mu_n += 1
    length = max(1, order - (mu_n - mu_d))
    den_unit = LocalSeries(0, [den[mu_d + k] for k in range(length)])
    num_ser = LocalSeries(mu_n, [num[mu_n + k] for k in range(length)])
    return num_ser * den_unit.inverse().shift(-mu_d)


def residue(s: LocalSeries) -> Fraction:
    return s.residue()


def partial_fractions(f: RationalFn, poles: Sequence = (1, -1, 0)):
    """Decompose f into sum_{(a,k)} c_{a,k}/(z-a)^k plus a polynomial part.

    Returns (parts, poly) where parts maps (pole, order) to a Fraction.
    Raises if the denominator has a root outside the declared pole set.
    The recombination identity holds exactly by construction and is asserted.
    """
    den = f.den
    mult: Dict[Fraction, int] = {}
    for a in poles:
        a = Fraction(a)
        lin = Poly([-a, 1])
        m = 0
        while True:
            q, r = den.divmod(lin)
            if r.is_zero():
                den = q
                m += 1
            else:
                break
        if m:
            mult[a] = m
    if den.degree() > 0:
        raise ValueError("denominator has roots outside the declared pole set")
    parts: Dict[Tuple[Fraction, int], Fraction] = {}
    rebuilt = RationalFn(Poly())
    for a, m in mult.items():
        ser = laurent_at(f, a, 0)
        for k in range(1, m + 1):
            c = ser.coeff(-k)
            if c:
                parts[(a, k)] = c
                rebuilt = rebuilt + RationalFn(Poly([c]), Poly([-a, 1]) ** k)
    rem = f - rebuilt
    if not rem.is_poly():
        raise ValueError("partial fraction residual is not polynomial")
    poly = rem.as_poly()
    # recombination is exact by construction; keep the guard cheap but real
    assert (rebuilt + RationalFn(poly)) == f
    return parts, poly
