"""The spectral curve x = z + 1/z with polynomially truncated y, its branch
data at z = +-1, and the recursion kernel expanded locally at the branch
points.

The logarithm never appears: y is represented by the even polynomial
truncations y_N(z) = sum_{k=1}^{N} (1-z^2)^k / (-2k), which carry the same
local data at the branch points through order 2N.  All kernel and Bergmann
kernel expansions are LocalSeries in t = z - branch with exact coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

from .series import LocalSeries, Poly, RationalFn, laurent_at

__all__ = ["SpectralCurve", "KernelSlice", "kernel_slice", "sigma_scalar_oneform",
           "sigma_scalar_quadratic"]

BRANCHES = (1, -1)


def _z() -> Poly:
    return Poly([0, 1])


class SpectralCurve:
    """x = z + 1/z with y replaced by its degree-2N polynomial model."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("truncation order must be >= 1")
        self.N = N
        one_minus_z2 = Poly([1, 0, -1])
        y = Poly()
        pw = Poly([1])
        for k in range(1, N + 1):
            pw = pw * one_minus_z2
            y = y + pw * Fraction(-1, 2 * k)
        self.yN = y
        z = _z()
        self.x = RationalFn(Poly([1, 0, 1]), z)            # (z^2+1)/z
        self.xprime = RationalFn(Poly([-1, 0, 1]), z * z)  # (z^2-1)/z^2

    def ydiff(self) -> RationalFn:
        """y_N(z) - y_N(1/z); simple zeros at the branch points."""
        return RationalFn(self.yN) - RationalFn(self.yN).subst_inv()

    def kernel_denominator(self) -> RationalFn:
        """2 (y(z) - y(1/z)) x'(z): double zero at each branch point."""
        return self.ydiff() * self.xprime * 2

    def w01_scalar(self) -> RationalFn:
        """Coefficient of dz in the unstable one-form -y dx."""
        return RationalFn(self.yN) * self.xprime * (-1)

    def phi_scalar(self) -> RationalFn:
        """An antiderivative of y_N x' dz (integration constant 0).

        y_N is even, so the integrand has no 1/z term and the result is a
        Laurent polynomial, represented over the denominator z.
        """
        integrand: Dict[int, Fraction] = {}
        for k, c in enumerate(self.yN.a):
            if c:
                integrand[k] = integrand.get(k, Fraction(0)) + c
                integrand[k - 2] = integrand.get(k - 2, Fraction(0)) - c
        num: Dict[int, Fraction] = {}
        for e, c in integrand.items():
            if not c:
                continue
            if e == -1:
                raise ArithmeticError("unexpected 1/z term in y dx")
            num[e + 2] = c / (e + 1)  # antiderivative z^{e+1}, shifted by den z
        m = max(num)
        coeffs = [num.get(i, Fraction(0)) for i in range(m + 1)]
        return RationalFn(Poly(coeffs), _z())

    # Bergmann kernel pieces, all as scalar rational functions (the dz factors
    # are bookkept by the recursion engine).
    def b_fiber_pair(self) -> RationalFn:
        """B(z, 1/z) / dz^2 = -1/(z^2-1)^2."""
        q = Poly([-1, 0, 1])
        return RationalFn(Poly([-1]), q * q)

    def b_reg_diag(self) -> RationalFn:
        """lim_{w->z} [B(z,w) - dx dx_w/(x - x_w)^2] / dz^2 = 1/(z^2-1)^2."""
        q = Poly([-1, 0, 1])
        return RationalFn(Poly([1]), q * q)


def sigma_scalar_oneform(f: RationalFn) -> RationalFn:
    """Scalar of the pullback of f(z) dz under z -> 1/z: -f(1/z)/z^2."""
    z = _z()
    return f.subst_inv() * RationalFn(Poly([-1]), z * z)


def sigma_scalar_quadratic(f: RationalFn) -> RationalFn:
    """Scalar of the pullback of f(z) dz^2 under z -> 1/z: f(1/z)/z^4."""
    z = _z()
    return f.subst_inv() * RationalFn(Poly([1]), (z * z) * (z * z))


class KernelSlice:
    """Local data of the recursion kernel at one branch point.

    K(z0, z) = [1/(z0 - 1/z) - 1/(z0 - z)] / (2 (y(z) - y(1/z)) x'(z) dz) dz0
    expanded in t = z - branch.  The z0 dependence is exact: the coefficient
    of dz0/(z0 - branch)^{m+1} is km(m), a LocalSeries in t with a double pole.
    The m = 0 term cancels identically, so no simple pole in z0 ever appears.
    """

    def __init__(self, curve: SpectralCurve, branch: int, z_order: int, m_max: int):
        if branch not in BRANCHES:
            raise ValueError("branch must be +1 or -1")
        self.branch = branch
        self.z_order = z_order
        self.m_max = m_max
        a = branch
        hi = z_order + 2
        # w(t) - a for w = 1/z, z = a + t:  sum_{i>=1} (-1)^i a^{i+1} t^i
        self.wshift = LocalSeries(1, [Fraction((-1) ** i * a ** (i + 1)) for i in range(1, hi + 1)])
        # 1/(a+t) = sum_j (-1)^j a^{j+1} t^j
        self.inv_a_t = LocalSeries(0, [Fraction((-1) ** j * a ** (j + 1)) for j in range(hi + 1)])
        den = curve.kernel_denominator()
        self.dinv = laurent_at(den, a, hi + 3).inverse()
        self._km: Dict[int, LocalSeries] = {}
        tpow = LocalSeries(0, [Fraction(1)] + [Fraction(0)] * hi)  # t^0
        wpow = tpow
        for m in range(1, m_max + 1):
            tpow = tpow.shift(1)
            wpow = wpow * self.wshift
            self._km[m] = (wpow - tpow) * self.dinv

    def km(self, m: int) -> LocalSeries:
        return self._km[m]


def kernel_slice(curve: SpectralCurve, branch: int, z_order: int, m_max: int | None = None) -> KernelSlice:
    """Kernel expansion at a branch, trusted through t-exponent z_order - 1."""
    if m_max is None:
        m_max = z_order
    return KernelSlice(curve, branch, z_order, m_max)
