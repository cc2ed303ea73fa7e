"""Coefficient extraction from the multidifferentials: expansion coefficients
around z = 0 (the N family), the binomial/monomial transforms to the
x-expansion coefficients (the M family), quasi-polynomial interpolation per
parity sector, the exceptional (0,1)/(0,2) expansions at x = infinity, and
the divisor/string identities on M.

Conventions.  A b-vector's parity sector is k = number of odd entries; sector
polynomials put the odd variables in the leading block.  N^g_n(b) vanishes
unless sum(b) == n + 2g (mod 2) and is a symmetric quasi-polynomial in the
b_i^2 of total degree 3g-3+n; M^g_n(b) = prefactor(b) * m^g_n(b) with

    prefactor(b) = prod_{odd} b C(b-1,(b-1)/2) * prod_{even} (b/2) C(b,b/2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .eo import Multidiff, compute_omega
from .exact import rat_str
from .mpoly import MPoly
from .series import Poly

__all__ = [
    "QuasiPoly", "CoeffTable", "n_value", "N_value", "M_value",
    "interpolate_quasi", "transform_polys", "n_to_m", "n_quasi", "m_quasi",
    "M_value_poly", "prefactor", "expansion_0_1", "expansion_0_2",
    "check_M_divisor_string", "quasi_to_json_obj", "poly_str",
]


# ----------------------------------------------------------------------
# z = 0 expansion coefficients
# ----------------------------------------------------------------------

def _pole_zero_coeff(form: Tuple[int, int], b: int) -> Fraction:
    """Coefficient of z^{b-1} in (z - beta)^{-m} for beta = +-1."""
    beta, m = form
    sign = (-1) ** m * beta ** ((m + b - 1) % 2)
    return Fraction(sign * comb(m + b - 2, b - 1))


def n_value(w: Multidiff, b: Sequence[int]) -> Fraction:
    """N^g_n(b): read the z->0 expansion of w off the pole basis.

    The contraction runs over the full symmetric coefficient map via a DP
    over sorted form prefixes, so the canonical storage is never expanded.
    """
    if len(b) != w.n:
        raise ValueError("b-vector arity mismatch")
    if any(x < 1 for x in b):
        raise ValueError("entries of b must be positive")
    forms = w.form_universe()
    states: Dict[tuple, Fraction] = {(): Fraction(1)}
    for bi in b:
        vi = [(f, _pole_zero_coeff(f, bi)) for f in forms]
        vi = [(f, c) for f, c in vi if c]
        new: Dict[tuple, Fraction] = {}
        for key, val in states.items():
            for f, c in vi:
                nk = tuple(sorted(key + (f,)))
                new[nk] = new.get(nk, Fraction(0)) + val * c
        states = new
    total = Fraction(0)
    for key, coeff in w.terms.items():
        s = states.get(key)
        if s:
            total += s * coeff
    den = 1
    for x in b:
        den *= x
    return total / den


_w_cache: Dict[Tuple[int, int], Multidiff] = {}
_nv_cache: Dict[Tuple[int, int, tuple], Fraction] = {}


def N_value(g: int, n: int, b: Sequence[int]) -> Fraction:
    """N^g_n(b) from the recursion engine (memoized; symmetric in b)."""
    key = (g, n, tuple(sorted(b)))
    got = _nv_cache.get(key)
    if got is None:
        w = _w_cache.get((g, n))
        if w is None:
            w = _w_cache.setdefault((g, n), compute_omega(g, n))
        got = _nv_cache.setdefault(key, n_value(w, key[2]))
    return got


def M_value(g: int, n: int, b: Sequence[int]) -> Fraction:
    """M^g_n(b) by the binomial sum over the z-expansion coefficients:

        M(b) = sum_{l_i in (b_i/2, b_i]} N(2l - b) prod (2l_i - b_i) C(b_i, l_i).
    """
    b = tuple(b)
    if any(x < 0 for x in b):
        raise ValueError("entries of b must be >= 0")
    if any(x == 0 for x in b):
        return Fraction(0)
    ranges = [range(x // 2 + 1, x + 1) for x in b]
    total = Fraction(0)
    for ls in iproduct(*ranges):
        arg = tuple(2 * l - x for l, x in zip(ls, b))
        w = Fraction(1)
        for l, x in zip(ls, b):
            w *= (2 * l - x) * comb(x, l)
        total += w * N_value(g, n, arg)
    return total


# ----------------------------------------------------------------------
# quasi-polynomial interpolation
# ----------------------------------------------------------------------

@dataclass
class QuasiPoly:
    """Parity-sector family of exact polynomials (N-, m- or p-form)."""
    g: int
    n: int
    kind: str                      # "N" (in b, even exponents), "m" (in b), "p" (in u)
    sectors: Dict[int, MPoly] = field(default_factory=dict)

    def sector(self, k: int) -> MPoly:
        return self.sectors[k]

    def eval_sorted(self, b: Sequence[int]) -> Fraction:
        """Evaluate with the odd entries moved to the leading block."""
        bs = sorted(b, key=lambda x: (x % 2 == 0, x))
        k = sum(1 for x in b if x % 2)
        return self.sectors[k].eval(bs)


def _lagrange_tensor(grids: List[List[Fraction]], values: Callable[[tuple], Fraction],
                     n: int) -> MPoly:
    """Exact tensor-product Lagrange interpolation; variables x_0..x_{n-1}."""
    def rec(prefix: tuple, depth: int) -> MPoly:
        if depth == n:
            return MPoly.const(n, values(prefix))
        out = MPoly.zero(n)
        pts = grids[depth]
        for v in pts:
            basis = MPoly.const(n, 1)
            for u in pts:
                if u != v:
                    basis = basis * (MPoly.var(n, depth) - MPoly.const(n, u)) * Fraction(1, v - u)
            out = out + basis * rec(prefix + (v,), depth + 1)
        return out

    return rec((), 0)


def interpolate_quasi(g: int, n: int,
                      sampler: Optional[Callable[[Sequence[int]], Fraction]] = None) -> QuasiPoly:
    """Fit every parity sector of N^g_n as an exact polynomial in the b_i^2.

    Each sector is sampled on a parity-consistent tensor grid of 3g-2+n
    values per squared coordinate, solved exactly, and verified on off-grid
    points; any residual is a hard failure.
    """
    if 2 * g - 2 + n <= 0:
        raise ValueError("stable (g, n) required")
    if sampler is None:
        sampler = lambda b: N_value(g, n, b)
    D = 3 * g - 3 + n
    npts = D + 1
    qp = QuasiPoly(g, n, "N")
    for k in range(n + 1):
        def b_of_s_grid(i: int) -> List[int]:
            start = 1 if i < k else 2
            return [start + 2 * j for j in range(npts)]
        bgrids = [b_of_s_grid(i) for i in range(n)]
        sgrids = [[Fraction(x * x) for x in gr] for gr in bgrids]

        def values(spoint: tuple) -> Fraction:
            bvec = []
            for x, gr, sg in zip(spoint, bgrids, sgrids):
                bvec.append(gr[sg.index(x)])
            return sampler(bvec)

        poly_s = _lagrange_tensor(sgrids, values, n)
        # convert from squared coordinates to b (double exponents)
        poly_b = MPoly(n, {tuple(2 * e for e in exps): c for exps, c in poly_s.c.items()})
        if poly_s.total_degree() > D:
            raise ArithmeticError(f"sector ({g},{n},k={k}) exceeds degree bound {D}")
        # off-grid validation: shift one coordinate past the grid, n probes
        for i in range(max(1, n)):
            probe = [gr[0] for gr in bgrids]
            probe[i % n] = bgrids[i % n][-1] + 2
            if poly_b.eval(probe) != sampler(probe):
                raise ArithmeticError(f"interpolation mismatch at ({g},{n},k={k}), b={probe}")
        qp.sectors[k] = poly_b
    return qp


# ----------------------------------------------------------------------
# parity transform polynomials and the N -> M transform
# ----------------------------------------------------------------------

def transform_polys(alpha: int) -> Tuple[Poly, Poly]:
    """The degree-alpha transform polynomials (p_alpha, q_alpha) in n.

    p_{a+1}(n) = 4n^2 (p_a(n) - p_a(n-1)) + 4n p_a(n-1)
    q_{a+1}(n) = (2n+1)^2 q_a(n) - 4n^2 q_a(n-1)
    with p_0 = q_0 = 1; both have leading coefficient a! 2^{2a}.
    """
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    four_n2 = Poly([0, 0, 4])
    four_n = Poly([0, 4])
    sq = Poly([1, 4, 4])  # (2n+1)^2
    p, q = Poly([1]), Poly([1])
    for _ in range(alpha):
        pm1 = p.shifted(-1)
        qm1 = q.shifted(-1)
        p = four_n2 * (p - pm1) + four_n * pm1
        q = sq * q - four_n2 * qm1
    return p, q


def _transform_in_b(alpha: int, odd: bool) -> Poly:
    """q_alpha((b-1)/2) for odd slots, p_alpha(b/2) for even slots."""
    p, q = transform_polys(alpha)
    if odd:
        return q.compose_affine(Fraction(1, 2), Fraction(-1, 2))
    return p.compose_affine(Fraction(1, 2), Fraction(0))


def prefactor(b: Sequence[int]) -> Fraction:
    """prod_{odd b} b C(b-1,(b-1)/2) * prod_{even b} (b/2) C(b, b/2)."""
    out = Fraction(1)
    for x in b:
        if x % 2:
            out *= x * comb(x - 1, (x - 1) // 2)
        else:
            out *= Fraction(x, 2) * comb(x, x // 2)
    return out


def n_to_m(nq: QuasiPoly) -> QuasiPoly:
    """m-form of the x-expansion coefficients from the z-expansion sectors.

    Each monomial prod b_i^{2 a_i} maps to prod T_{a_i}(b_i), with T the
    parity transform polynomial for the slot.  The result is validated
    against the direct binomial sum on a deterministic grid; disagreement
    between the two routes is a hard failure.
    """
    g, n = nq.g, nq.n
    mq = QuasiPoly(g, n, "m")
    for k, sec in nq.sectors.items():
        out = MPoly.zero(n)
        for exps, coeff in sec.c.items():
            term = MPoly.const(n, coeff)
            for i, e in enumerate(exps):
                if e % 2:
                    raise ArithmeticError("N-form sector has an odd exponent")
                t = _transform_in_b(e // 2, odd=(i < k))
                uni = MPoly(n, {tuple(j if ix == i else 0 for ix in range(n)): c
                                for j, c in enumerate(t.a) if c})
                term = term * uni
            out = out + term
        mq.sectors[k] = out

    # dual-route validation
    D = 3 * g - 3 + n
    for k in range(n + 1):
        base = [1 if i < k else 2 for i in range(n)]
        probes = [tuple(base)]
        probes.append(tuple(x + 2 for x in base))
        probes.append(tuple(x + (2 * (i % (D + 2))) for i, x in enumerate(base)))
        for b in probes:
            direct = _binomial_sum(nq, k, b)
            via_m = prefactor(b) * mq.sectors[k].eval(b)
            if direct != via_m:
                raise ArithmeticError(
                    f"transform routes disagree at ({g},{n},k={k}), b={b}: {direct} vs {via_m}")
    return mq


def _binomial_sum(nq: QuasiPoly, k: int, b: Sequence[int]) -> Fraction:
    total = Fraction(0)
    ranges = [range(x // 2 + 1, x + 1) for x in b]
    for ls in iproduct(*ranges):
        arg = [2 * l - x for l, x in zip(ls, b)]
        w = Fraction(1)
        for l, x in zip(ls, b):
            w *= (2 * l - x) * comb(x, l)
        total += w * nq.sectors[k].eval(arg)
    return total


_nq_cache: Dict[Tuple[int, int], QuasiPoly] = {}
_mq_cache: Dict[Tuple[int, int], QuasiPoly] = {}


def n_quasi(g: int, n: int) -> QuasiPoly:
    got = _nq_cache.get((g, n))
    if got is None:
        got = _nq_cache.setdefault((g, n), interpolate_quasi(g, n))
    return got


def m_quasi(g: int, n: int) -> QuasiPoly:
    got = _mq_cache.get((g, n))
    if got is None:
        got = _mq_cache.setdefault((g, n), n_to_m(n_quasi(g, n)))
    return got


def M_value_poly(g: int, n: int, b: Sequence[int]) -> Fraction:
    """M^g_n(b) through the interpolated m-form (fast path for identities)."""
    b = tuple(b)
    if any(x == 0 for x in b):
        return Fraction(0)
    return prefactor(b) * m_quasi(g, n).eval_sorted(b)


# ----------------------------------------------------------------------
# the exceptional expansions at x = infinity
# ----------------------------------------------------------------------

@dataclass
class CoeffTable:
    g: int
    n: int
    entries: Dict[tuple, Fraction] = field(default_factory=dict)

    def value(self, b: Sequence[int]) -> Fraction:
        return self.entries.get(tuple(b), Fraction(0))

    def to_json_obj(self):
        return {
            "g": self.g,
            "n": self.n,
            "entries": [{"b": list(k), "value": rat_str(v)}
                        for k, v in sorted(self.entries.items())],
        }


def expansion_0_1(bmax: int) -> CoeffTable:
    """M^0_1(b) for b <= bmax from the log-regularized unstable one-form.

    The combination (-log z + log x) dx is expanded at the z = infinity
    branch of x = infinity.  Writing log x = log z + log(1 + z^-2) there, the
    formal log z terms cancel with coefficient (-1 + 1) dx -- asserted -- and
    the remainder log(1 + z^-2) dx is an honest power series in 1/z.  The
    coefficient is the residue (-1) res_{x=inf} x^b (form), computed in the
    coordinate z (residues of one-forms are coordinate-free).
    """
    log_z_coefficient = Fraction(-1) + Fraction(1)
    if log_z_coefficient != 0:
        raise ArithmeticError("formal log terms failed to cancel")
    table = CoeffTable(0, 1)
    for b in range(1, bmax + 1):
        if b % 2 == 0:
            continue
        # series in u = 1/z: coefficient of u^1 in x^b * log(1+u^2) * (1-u^2)
        lg: Dict[int, Fraction] = {}
        jmax = (b + 3) // 2
        for j in range(1, jmax + 1):
            c = Fraction((-1) ** (j - 1), j)
            lg[2 * j] = lg.get(2 * j, Fraction(0)) + c
            lg[2 * j + 2] = lg.get(2 * j + 2, Fraction(0)) - c
        total = Fraction(0)
        for a in range(b + 1):
            e = b - 2 * a            # x^b contributes z^e with weight C(b, a)
            need = e + 1             # z^e * u^need = z^{-1}
            if need in lg:
                total += comb(b, a) * lg[need]
        table.entries[(b,)] = total
    return table


def expansion_0_2(bmax: int) -> CoeffTable:
    """M^0_2(b1, b2) for b_i <= bmax from the double-pole-regularized kernel.

    The Bergmann kernel minus dx1 dx2/(x1-x2)^2 is regular on the diagonal
    near (inf, inf); both slots are expanded in the region |z1| > |z2| >> 1
    and the iterated residue is read off.  Expanding in the opposite order
    gives the same table (checked in the test suite).
    """
    table = CoeffTable(0, 2)
    for b1 in range(1, bmax + 1):
        for b2 in range(1, bmax + 1):
            if (b1 + b2) % 2:
                continue
            v = _m02_value(b1, b2)
            if v:
                table.entries[(b1, b2)] = v
    return table


def _m02_value(b1: int, b2: int) -> Fraction:
    # part A: x1^b1 x2^b2 / (z1 - z2)^2
    total = Fraction(0)
    for j in range(1, min(b1, b2) + 1):
        if (b1 - j) % 2 or (b2 + j) % 2:
            continue
        a = (b1 - j) // 2
        c = (b2 + j) // 2
        if 0 <= a <= b1 and 0 <= c <= b2:
            total += Fraction(j * comb(b1, a) * comb(b2, c))
    # part C: x1^b1 x2^b2 (z1^2-1)(z2^2-1) / ((z1-z2)^2 (z1 z2 - 1)^2)
    x1 = {b1 - 2 * a: Fraction(comb(b1, a)) for a in range(b1 + 1)}
    x2 = {b2 - 2 * a: Fraction(comb(b2, a)) for a in range(b2 + 1)}
    f1 = _shift_mult(x1)  # times (z^2 - 1)
    f2 = _shift_mult(x2)
    corr = Fraction(0)
    for j in range(1, b1 + 3):
        for m in range(0, b1 + 3):
            e1 = j + m + 2
            e2 = m + 2 - j
            c1 = f1.get(e1)
            c2 = f2.get(e2)
            if c1 and c2:
                corr += Fraction(j * (m + 1)) * c1 * c2
    return total - corr


def _shift_mult(xs: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for e, c in xs.items():
        out[e + 2] = out.get(e + 2, Fraction(0)) + c
        out[e] = out.get(e, Fraction(0)) - c
    return {e: c for e, c in out.items() if c}


# ----------------------------------------------------------------------
# divisor and string identities on M
# ----------------------------------------------------------------------

def check_M_divisor_string(g: int, n: int, bound: int) -> bool:
    """Both identities for all b with entries in 1..bound:
    M^g_{n+1}(b, 1) = d M^g_n(b) with 2d = 2 - 2g - n + sum(b), and
    prefactor(b) m^g_{n+1}(b, 0) = sum_i b_i M^g_n(..., b_i - 1, ...)."""
    mq_big = m_quasi(g, n + 1)
    for b in iproduct(range(1, bound + 1), repeat=n):
        bs = tuple(sorted(b, key=lambda x: (x % 2 == 0, x)))
        k = sum(1 for x in bs if x % 2)
        d = Fraction(2 - 2 * g - n + sum(bs), 2)
        lhs_div = M_value_poly(g, n + 1, bs + (1,))
        if lhs_div != d * M_value_poly(g, n, bs):
            return False
        lhs_str = prefactor(bs) * mq_big.sectors[k].eval(list(bs) + [0])
        rhs_str = Fraction(0)
        for i in range(n):
            bb = list(bs)
            bb[i] -= 1
            rhs_str += bs[i] * M_value_poly(g, n, bb)
        if lhs_str != rhs_str:
            return False
    return True


# ----------------------------------------------------------------------
# serialization helpers
# ----------------------------------------------------------------------

def quasi_to_json_obj(qp: QuasiPoly):
    return {
        "g": qp.g,
        "n": qp.n,
        "kind": qp.kind,
        "sectors": [
            {"k": k, "terms": [{"exps": list(e), "coeff": rat_str(c)}
                               for e, c in qp.sectors[k].sorted_terms()]}
            for k in sorted(qp.sectors)
        ],
    }


def poly_str(p: MPoly, var: str = "b", latex: bool = False) -> str:
    """Deterministic human-readable rendering of a sector polynomial."""
    if not p.c:
        return "0"
    bits = []
    for exps, c in p.sorted_terms():
        mono = []
        for i, e in enumerate(exps):
            if not e:
                continue
            name = f"{var}_{i + 1}" if latex else f"{var}{i + 1}"
            if e == 1:
                mono.append(name)
            else:
                mono.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
        cs = rat_str(c)
        if latex and "/" in cs:
            num, den = cs.lstrip("-").split("/")
            cs = ("-" if c < 0 else "") + f"\\frac{{{num}}}{{{den}}}"
        body = "*".join(mono) if not latex else " ".join(mono)
        bits.append(cs if not mono else f"{cs}{'*' if not latex else ' '}{body}")
    out = " + ".join(bits)
    return out.replace("+ -", "- ")
