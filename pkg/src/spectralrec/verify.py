"""Verification batteries: each suite is a list of named cases; a case
returns (ok, detail).  The CLI prints one PASS/FAIL line per case and the
acceptance tests assert on the same machinery.  All comparisons are exact.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product as iproduct
from math import factorial
from typing import Callable, Dict, List, Sequence, Tuple

from . import expand, gw, psi
from .eo import (check_fiber_sum, check_loop_equation, check_string_dilaton,
                 compute_omega, engine_for, loop_cases, stable_truncation,
                 w02_fiber_discrepancy_is_x_double_pole)
from .golden import golden_rows

Case = Tuple[str, Callable[[], Tuple[bool, str]]]

__all__ = ["SUITE_NAMES", "build_suite", "run_cases", "theorem1_pairs"]

SUITE_NAMES = ["theorem1", "theorem2", "loop", "eo-identities", "gw-identities",
               "exceptional"]


def run_cases(cases: Sequence[Case], jobs: int = 1) -> List[Tuple[str, bool, str]]:
    """Execute cases (optionally on a worker pool) preserving case order."""
    if jobs <= 1:
        return [(name, *fn()) for name, fn in cases]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futs = [pool.submit(fn) for _, fn in cases]
        return [(name, *fut.result()) for (name, _), fut in zip(cases, futs)]


# ----------------------------------------------------------------------
# theorem 1: expansion coefficients = factorial * stationary invariants
# ----------------------------------------------------------------------

def theorem1_pairs(gmax: int = 2, chimax: int = 4) -> List[Tuple[int, int]]:
    return [(g, n) for g in range(gmax + 1) for n in range(1, chimax - 2 * g + 3)
            if 2 * g - 2 + n > 0 and 2 * g - 2 + n <= chimax]


def _b_multisets(n: int, max_weight: int):
    """Weakly increasing positive b-vectors of length n with sum <= max_weight."""
    def rec(left: int, lo: int, prefix: tuple):
        if len(prefix) == n:
            yield prefix
            return
        for x in range(lo, left - (n - len(prefix) - 1) + 1):
            yield from rec(left - x, x, prefix + (x,))
    yield from rec(max_weight, 1, ())


def _theorem1_case(g: int, n: int, max_weight: int) -> Tuple[bool, str]:
    for b in _b_multisets(n, max_weight):
        lhs = expand.M_value(g, n, b)
        fac = 1
        for x in b:
            fac *= factorial(x)
        rhs = fac * gw.connected_stationary(g, tuple(x - 1 for x in b))
        if lhs != rhs:
            return False, f"b={b}: engine {lhs} vs partition oracle {rhs}"
        if g <= 1:
            alt = fac * gw.stationary_toprec(g, gw.stationary_key([x - 1 for x in b]))
            if alt != rhs:
                return False, f"b={b}: recursion oracle {alt} vs {rhs}"
    return True, f"all b with sum <= {max_weight}"


def suite_theorem1(max_weight: int = 10) -> List[Case]:
    return [(f"theorem1 g={g} n={n}",
             (lambda g=g, n=n: _theorem1_case(g, n, max_weight)))
            for g, n in theorem1_pairs()]


# ----------------------------------------------------------------------
# theorem 2 / top coefficients
# ----------------------------------------------------------------------

TABLE_ENVELOPE = [(0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]


def suite_theorem2() -> List[Case]:
    cases: List[Case] = []
    for g, n in TABLE_ENVELOPE:
        for k in range(n + 1):
            cases.append((f"theorem2 top coefficients g={g} n={n} k={k}",
                          (lambda g=g, n=n, k=k:
                           (psi.check_top_coefficients(g, n, k), ""))))
    return cases


# ----------------------------------------------------------------------
# exceptional (0,1) and (0,2) expansions
# ----------------------------------------------------------------------

def _exceptional_01(bmax: int) -> Tuple[bool, str]:
    table = expand.expansion_0_1(bmax)
    for b in range(1, bmax + 1):
        got = table.value((b,))
        if b % 2 == 0:
            want = Fraction(0)
        else:
            u = (b - 1) // 2
            want = Fraction(factorial(2 * u + 1), factorial(u + 1) ** 2)
        if got != want:
            return False, f"b={b}: {got} vs {want}"
    return True, f"b <= {bmax}"


def _exceptional_02(bmax: int) -> Tuple[bool, str]:
    table = expand.expansion_0_2(bmax)
    for b1 in range(1, bmax + 1):
        for b2 in range(1, bmax + 1):
            got = table.value((b1, b2))
            if (b1 + b2) % 2:
                want = Fraction(0)
            elif b1 % 2:  # both odd: even stationary powers
                u1, u2 = (b1 - 1) // 2, (b2 - 1) // 2
                want = factorial(b1) * factorial(b2) * gw.closed_forms(
                    "genus0-two-even", [u1, u2])
            else:
                u1, u2 = b1 // 2, b2 // 2
                want = factorial(b1) * factorial(b2) * gw.closed_forms(
                    "genus0-two-odd", [u1, u2])
            if got != want:
                return False, f"b=({b1},{b2}): {got} vs {want}"
    return True, f"b <= {bmax}"


def suite_exceptional(bmax: int = 9) -> List[Case]:
    return [
        ("exceptional one-point vs closed form",
         lambda: _exceptional_01(bmax)),
        ("exceptional two-point vs closed form",
         lambda: _exceptional_02(bmax)),
    ]


# ----------------------------------------------------------------------
# loop equations
# ----------------------------------------------------------------------

def suite_loop() -> List[Case]:
    def make(g, s):
        def run():
            eng = engine_for(max(1, 6 * g - 2 + 2 * s))
            return check_loop_equation(eng, g, s), ""
        return run
    return [(f"loop equation g={g} |S|={s}", make(g, s)) for g, s in loop_cases()]


# ----------------------------------------------------------------------
# structural identities of the recursion output
# ----------------------------------------------------------------------

FIBER_LIST = [(0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 1)]
SD_LIST = [(0, 4), (0, 5), (1, 2), (1, 3), (2, 2)]
STAB_LIST = [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]
MDIV_LIST = [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]


def suite_eo_identities() -> List[Case]:
    cases: List[Case] = []
    for g, n in FIBER_LIST:
        cases.append((f"fiber sum g={g} n={n}",
                      (lambda g=g, n=n: (check_fiber_sum(compute_omega(g, n)), ""))))
    cases.append(("fiber sum defect of the Bergmann kernel is the x-plane double pole",
                  lambda: (w02_fiber_discrepancy_is_x_double_pole(), "")))
    for g, n in SD_LIST:
        cases.append((f"string and dilaton g={g} n={n}",
                      (lambda g=g, n=n:
                       (check_string_dilaton(engine_for(stable_truncation(g, n)), g, n), ""))))
    for g, n in STAB_LIST:
        def stab(g=g, n=n):
            N = stable_truncation(g, n)
            return compute_omega(g, n, N) == compute_omega(g, n, N + 1), f"N={N} vs {N + 1}"
        cases.append((f"truncation stabilization g={g} n={n}", stab))
    for g, n in FIBER_LIST:
        def orders(g=g, n=n):
            w = compute_omega(g, n)
            bound = 6 * g - 4 + 2 * n
            mn = min(f[1] for key in w.terms for f in key)
            return (w.max_order() == bound and mn >= 2,
                    f"orders in [{mn}, {w.max_order()}], bound {bound}")
        cases.append((f"pole orders g={g} n={n}", orders))
    for g, n in [(0, 3), (1, 1), (1, 2)]:
        def parity(g=g, n=n):
            for b in iproduct(range(1, 6), repeat=n):
                if (sum(b) - n - 2 * g) % 2 and expand.N_value(g, n, b):
                    return False, f"b={b}"
            return True, ""
        cases.append((f"parity vanishing of z-expansion g={g} n={n}", parity))
    for g, n in MDIV_LIST:
        cases.append((f"divisor and string identities on M g={g} n={n}",
                      (lambda g=g, n=n: (expand.check_M_divisor_string(g, n, 6), ""))))
    return cases


# ----------------------------------------------------------------------
# oracle-side identities
# ----------------------------------------------------------------------

def _oracle_agreement(g: int, n: int, bmax: int) -> Tuple[bool, str]:
    def rec(lo: int, prefix: tuple):
        if len(prefix) == n:
            yield prefix
            return
        for x in range(lo, bmax + 1):
            yield from rec(x, prefix + (x,))
    for b in rec(0, ()):
        lhs = gw.connected_stationary(g, b)
        rhs = gw.stationary_toprec(g, gw.stationary_key(b))
        if lhs != rhs:
            return False, f"b={b}: partition {lhs} vs recursion {rhs}"
    return True, f"b_i <= {bmax}"


def _closed_agreement(umax: int = 4) -> Tuple[bool, str]:
    for name, (g, arity, parities, _) in gw.CLOSED_FORM_NAMES.items():
        arities = [arity] if arity is not None else [5, 6]
        cap = umax if arity is not None else 2
        for nn in arities:
            for u in iproduct(range(0, cap + 1), repeat=nn):
                powers = gw.closed_form_powers(name, u)
                if any(x < 0 for x in powers):
                    continue
                want = gw.closed_forms(name, u)
                got = gw.connected_stationary(g, tuple(powers)) if g >= 2 or nn <= 3 \
                    else None
                if got is not None and got != want:
                    return False, f"{name} u={u}: partition {got} vs {want}"
                if g <= 1:
                    alt = gw.stationary_toprec(g, gw.stationary_key(powers))
                    if alt != want:
                        return False, f"{name} u={u}: recursion {alt} vs {want}"
    return True, f"u_i <= {umax}"


def _gw_sdd(weight: int = 12) -> Tuple[bool, str]:
    for g in (0, 1):
        for n in range(1, 5):
            for b in iproduct(range(0, weight), repeat=n):
                if sum(x + 1 for x in b) > weight:
                    continue
                X = gw.stationary_key(b)
                base = gw.stationary_toprec(g, X)
                s = gw.stationary_toprec(g, (("f", 0),) + X)
                s_want = sum(gw.stationary_toprec(
                    g, X[:i] + (("p", X[i][1] - 1),) + X[i + 1:])
                    for i in range(n) if X[i][1] >= 1)
                if s != s_want:
                    return False, f"string g={g} b={b}"
                twod = sum(b) + 2 - 2 * g
                if twod >= 0 and twod % 2 == 0:
                    d = Fraction(twod, 2)
                    div = gw.stationary_toprec(g, (("p", 0),) + X)
                    if div != d * base:
                        return False, f"divisor g={g} b={b}"
                dil = gw.stationary_toprec(g, (("f", 1),) + X)
                if dil != (2 * g - 2 + n) * base:
                    return False, f"dilaton g={g} b={b}"
    return True, f"weight <= {weight}"


def _vacuum_norm(dmax: int = 10) -> Tuple[bool, str]:
    for d in range(dmax + 1):
        if sum(gw.dim_partition(l) ** 2 for l in gw.partitions(d)) != factorial(d):
            return False, f"d={d}"
    return True, f"d <= {dmax}"


def _parity_vanishing() -> Tuple[bool, str]:
    for g in (0, 1, 2):
        for n in (1, 2, 3):
            for b in iproduct(range(0, 5), repeat=n):
                W = sum(b) - (2 * g - 2)
                if (W < 0 or W % 2) and gw.connected_stationary(g, b) != 0:
                    return False, f"g={g} b={b}"
    return True, ""


EVAL_PROPS_LIST = [(0, 3), (0, 4), (1, 1), (1, 2), (1, 3)]


def suite_gw_identities() -> List[Case]:
    cases: List[Case] = []
    for g in (0, 1):
        for n in (1, 2, 3, 4):
            cases.append((f"oracle agreement g={g} n={n}",
                          (lambda g=g, n=n: _oracle_agreement(g, n, 6))))
    cases.append(("closed forms vs both oracles", _closed_agreement))
    cases.append(("string, divisor, dilaton on the evaluator", _gw_sdd))
    cases.append(("vacuum normalization of the partition measure", _vacuum_norm))
    cases.append(("parity and dimension vanishing", _parity_vanishing))
    for g, n in EVAL_PROPS_LIST:
        cases.append((f"removable insertions vs sector polynomials g={g} n={n}",
                      (lambda g=g, n=n: (gw.check_eval_props(g, n, 4), ""))))
    return cases


# ----------------------------------------------------------------------
# golden table
# ----------------------------------------------------------------------

def suite_table7() -> List[Case]:
    cases: List[Case] = []
    for g, n, k, npoly, mpoly in golden_rows():
        def diff(g=g, n=n, k=k, npoly=npoly, mpoly=mpoly):
            got_n = expand.n_quasi(g, n).sectors[k]
            got_m = expand.m_quasi(g, n).sectors[k]
            if got_n != npoly:
                return False, f"z-expansion row differs: {got_n} vs {npoly}"
            if got_m != mpoly:
                return False, f"x-expansion row differs: {got_m} vs {mpoly}"
            return True, ""
        cases.append((f"table row g={g} n={n} k={k}", diff))
    return cases


def build_suite(name: str, max_weight: int = 10, bmax: int = 9) -> List[Case]:
    if name == "theorem1":
        return suite_theorem1(max_weight)
    if name == "theorem2":
        return suite_theorem2()
    if name == "loop":
        return suite_loop()
    if name == "eo-identities":
        return suite_eo_identities()
    if name == "gw-identities":
        return suite_gw_identities()
    if name == "exceptional":
        return suite_exceptional(bmax)
    if name == "all":
        out: List[Case] = []
        for s in SUITE_NAMES:
            out.extend(build_suite(s, max_weight, bmax))
        return out
    raise KeyError(f"unknown suite {name!r}")
