"""Sparse exact multivariate polynomials over Fraction.

Used for the interpolated coefficient polynomials (quasi-polynomial sectors)
and for the golden-data comparisons.  Terms are dicts mapping exponent tuples
to nonzero Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, Sequence, Tuple

Exps = Tuple[int, ...]

__all__ = ["MPoly"]


class MPoly:
    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: Dict[Exps, Fraction] | None = None):
        self.n = n
        self.c: Dict[Exps, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.c[tuple(e)] = v

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, v) -> "MPoly":
        return cls(n, {(0,) * n: Fraction(v)})

    @classmethod
    def var(cls, n: int, i: int) -> "MPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], v=1) -> "MPoly":
        return cls(n, {tuple(exps): Fraction(v)})

    # -- ring operations ----------------------------------------------
    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, Fraction(0)) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return MPoly(self.n, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.n, {e: -v for e, v in self.c.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero(self.n)
            return MPoly(self.n, {e: v * other for e, v in self.c.items()})
        out: Dict[Exps, Fraction] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = out.get(e, Fraction(0)) + v1 * v2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        return MPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(self.n, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.n, other)
        return isinstance(other, MPoly) and self.n == other.n and self.c == other.c

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.c.items()))))

    def __bool__(self) -> bool:
        return bool(self.c)

    # -- queries --------------------------------------------------------
    def eval(self, point: Sequence) -> Fraction:
        pt = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, v in self.c.items():
            term = v
            for x, k in zip(pt, e):
                if k:
                    term *= x**k
            total += term
        return total

    def total_degree(self) -> int:
        return max((sum(e) for e in self.c), default=0)

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.n, {e: v for e, v in self.c.items() if sum(e) == d})

    def derivative(self, i: int) -> "MPoly":
        out: Dict[Exps, Fraction] = {}
        for e, v in self.c.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = v * e[i]
        return MPoly(self.n, out)

    def permuted(self, perm: Sequence[int]) -> "MPoly":
        """Variable relabelling x_i -> x_{perm[i]}."""
        out: Dict[Exps, Fraction] = {}
        for e, v in self.c.items():
            ne = [0] * self.n
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = v
        return MPoly(self.n, out)

    def is_symmetric_in_blocks(self, k: int) -> bool:
        """Invariance under permuting the first k and the last n-k variables."""
        for i in range(self.n - 1):
            if i + 1 == k:
                continue  # transposition across the block boundary not required
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permuted(perm) != self:
                return False
        return True

    def subst_affine(self, coeffs: Sequence[Tuple[Fraction, Fraction]]) -> "MPoly":
        """Substitute x_i -> a_i * x_i + b_i for (a_i, b_i) in coeffs."""
        lin = [MPoly.var(self.n, i) * Fraction(a) + MPoly.const(self.n, b)
               for i, (a, b) in enumerate(coeffs)]
        out = MPoly.zero(self.n)
        for e, v in self.c.items():
            term = MPoly.const(self.n, v)
            for i, kk in enumerate(e):
                if kk:
                    term = term * lin[i] ** kk
            out = out + term
        return out

    def sorted_terms(self):
        return sorted(self.c.items())

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        bits = []
        for e, v in self.sorted_terms():
            mono = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k)
            bits.append(f"{v}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    # -- helpers for building symmetric expressions --------------------
    @classmethod
    def sym_power_sum(cls, n: int, power: int) -> "MPoly":
        """sum_i x_i^power"""
        out = cls.zero(n)
        for i in range(n):
            out = out + cls.var(n, i) ** power
        return out

    @classmethod
    def ordered_pair_sum(cls, n: int, f) -> "MPoly":
        """sum over ordered pairs i != j of f(x_i, x_j); f maps (MPoly, MPoly) -> MPoly."""
        out = cls.zero(n)
        for i in range(n):
            for j in range(n):
                if i != j:
                    out = out + f(cls.var(n, i), cls.var(n, j))
        return out

    @classmethod
    def product_all(cls, n: int) -> "MPoly":
        return cls.monomial(n, (1,) * n)
