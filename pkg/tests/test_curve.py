from fractions import Fraction

import pytest

from spectralrec.curve import SpectralCurve, kernel_slice
from spectralrec.series import Poly, RationalFn, laurent_at


@pytest.mark.parametrize("N", [1, 2, 3, 7])
def test_y_truncation_invariants(N):
    c = SpectralCurve(N)
    y = c.yN
    assert y.degree() == 2 * N
    assert all(y[k] == 0 for k in range(1, 2 * N, 2))  # even polynomial
    assert y.eval(1) == 0 and y.eval(-1) == 0
    assert y.derivative().eval(1) == 1
    assert y.derivative().eval(-1) == -1


def test_y1_explicit():
    assert SpectralCurve(1).yN == Poly([Fraction(-1, 2), 0, Fraction(1, 2)])


def test_y_matches_log_locally():
    # y_N(1+t) agrees with log(1+t) through t^N; the error term is the tail
    # sum starting at (1-z^2)^{N+1} = O(t^{N+1})
    for N in (2, 4, 6):
        y = SpectralCurve(N).yN.shifted(1)
        for k in range(1, N + 1):
            assert y[k] == Fraction((-1) ** (k - 1), k)
        assert y[N + 1] != Fraction((-1) ** N, N + 1)


def test_x_invariant_under_involution():
    c = SpectralCurve(1)
    assert c.x.subst_inv() == c.x


def test_ydiff():
    c = SpectralCurve(1)
    yd = c.ydiff()
    # (z^4-1)/(2 z^2)
    assert yd == RationalFn(Poly([Fraction(-1, 2), 0, 0, 0, Fraction(1, 2)]),
                            Poly([0, 0, 1]))
    assert yd.eval(Fraction(1)) == 0
    assert yd.derivative().eval(1) == 2


def test_phi_is_antiderivative():
    for N in (1, 3):
        c = SpectralCurve(N)
        assert c.phi_scalar().derivative() == RationalFn(c.yN) * c.xprime


def test_kernel_slice_double_pole():
    c = SpectralCurve(3)
    for branch in (1, -1):
        ks = kernel_slice(c, branch, 6, m_max=4)
        s1 = ks.km(1).normalized()
        assert s1.min_exp == -1  # odd-m numerators vanish one order less
        # the kernel denominator itself has the double zero
        den = laurent_at(c.kernel_denominator(), branch, 4)
        assert den.coeff(0) == 0 and den.coeff(1) == 0 and den.coeff(2) != 0


def test_kernel_branch_symmetry():
    # z -> -z maps the slice at +1 to the slice at -1 up to alternating signs
    c = SpectralCurve(2)
    kp = kernel_slice(c, 1, 6, m_max=3)
    km = kernel_slice(c, -1, 6, m_max=3)
    for m in (1, 2, 3):
        a, b = kp.km(m), km.km(m)
        for e in range(max(a.min_exp, b.min_exp), min(a.trunc, b.trunc)):
            assert a.coeff(e) == b.coeff(e) * Fraction((-1) ** (e + m))


def test_bergmann_fiber_pair_leading():
    # B(z, 1/z) = -dz^2/(z^2-1)^2: order-2 pole with coefficient -1/4 at z=1
    c = SpectralCurve(1)
    s = laurent_at(c.b_fiber_pair(), 1, 2)
    assert s.normalized().min_exp == -2
    assert s.coeff(-2) == Fraction(-1, 4)


def test_reg_diag_is_minus_fiber_pair():
    c = SpectralCurve(1)
    assert c.b_reg_diag() == c.b_fiber_pair() * Fraction(-1)
