"""Acceptance gate: every criterion below is exact (tolerance 0) and prints
one pass/fail line.  Run with `pytest tests/test_acceptance.py -s` to see the
per-criterion report.
"""

from fractions import Fraction
from itertools import product
from math import factorial

from spectralrec import expand, gw, verify


def _report(criterion: str, ok: bool, detail: str = "") -> bool:
    tail = f" ({detail})" if detail else ""
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}{tail}")
    return ok


def _run_suite(cases):
    results = verify.run_cases(cases)
    bad = [(name, detail) for name, ok, detail in results if not ok]
    return not bad, bad


def test_criterion_1_table_reproduction():
    ok, bad = _run_suite(verify.suite_table7())
    assert _report("criterion 1: full coefficient table regenerated and "
                   "matched exactly", ok, str(bad) if bad else "22 rows"), bad


def test_criterion_2_expansion_equals_invariants():
    ok, bad = _run_suite(verify.suite_theorem1(max_weight=10))
    assert _report("criterion 2: expansion coefficients equal factorial "
                   "times stationary invariants (g <= 2, weight <= 10, both "
                   "oracles for g <= 1)", ok, str(bad) if bad else ""), bad


def test_criterion_3_exceptional_cases():
    ok, bad = _run_suite(verify.suite_exceptional(bmax=9))
    assert _report("criterion 3: exceptional one- and two-point expansions "
                   "match the closed forms for b <= 9", ok,
                   str(bad) if bad else ""), bad


def test_criterion_4_top_coefficients():
    ok, bad = _run_suite(verify.suite_theorem2())
    assert _report("criterion 4: top sector coefficients equal the "
                   "intersection-number formulas (m- and p-forms)", ok,
                   str(bad) if bad else ""), bad


def test_criterion_5_structural_suites():
    cases = (verify.suite_eo_identities() + verify.suite_loop()
             + verify.suite_gw_identities())
    ok, bad = _run_suite(cases)
    assert _report("criterion 5: structural identity suites (fiber sum, "
                   "string/dilaton, divisor/string on M, loop equations, "
                   "stabilization, evaluator identities)", ok,
                   str(bad) if bad else f"{len(cases)} cases"), bad


def test_criterion_6_spot_values():
    ok = True
    details = []

    def spot(label, want, *paths):
        nonlocal ok
        good = all(p == want for p in paths) and len(paths) >= 2
        ok = ok and good
        if not good:
            details.append((label, want, paths))

    spot("<tau_0(w)>_1 = -1/24", Fraction(-1, 24),
         gw.stationary_toprec(1, gw.stationary_key([0])),
         gw.connected_stationary(1, (0,)),
         expand.M_value(1, 1, (1,)) / 1)
    spot("<tau_2(w)>_1 = 1/24", Fraction(1, 24),
         gw.stationary_toprec(1, gw.stationary_key([2])),
         gw.connected_stationary(1, (2,)),
         gw.closed_forms("genus1-one-point", [1]),
         expand.M_value(1, 1, (3,)) / factorial(3))
    spot("<tau_0(w)^3>_0 = 1", Fraction(1),
         gw.stationary_toprec(0, gw.stationary_key([0, 0, 0])),
         gw.connected_stationary(0, (0, 0, 0)),
         gw.closed_forms("genus0-three-even", [0, 0, 0]),
         expand.M_value(0, 3, (1, 1, 1)) / 1)
    spot("<tau_4(w)>_2 = 1/1920", Fraction(1, 1920),
         gw.connected_stationary(2, (4,)),
         gw.closed_forms("genus2-one-point", [2]),
         expand.M_value(2, 1, (5,)) / factorial(5))

    npoint_ok = True
    for n in range(3, 7):
        for u in product(range(4), repeat=n):
            want = gw.closed_forms("genus0-even-npoint", list(u))
            got = gw.stationary_toprec(0, gw.stationary_key([2 * x for x in u]))
            npoint_ok = npoint_ok and got == want
    ok = ok and npoint_ok
    if not npoint_ok:
        details.append(("genus-0 even n-point family", None, None))

    assert _report("criterion 6: oracle spot values reproduced by at least "
                   "two independent paths each", ok,
                   str(details) if details else ""), details
