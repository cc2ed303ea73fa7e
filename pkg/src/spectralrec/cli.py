"""Command-line front end: compute invariants, emit the coefficient table,
run verification suites.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a
verification or table diff failed, 2 budget exceeded or unsupported request.
Identical invocations produce byte-identical output regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from . import expand, gw, verify
from .eo import compute_omega, stable_truncation
from .exact import rat_str
from .expand import poly_str
from .golden import golden_rows

BUDGET_G = 3
BUDGET_CHI = 6
BUDGET_N = 6

__all__ = ["main", "entry"]


def _jobs_default() -> int:
    env = os.environ.get("SPECTRALREC_JOBS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def cmd_omega(args) -> int:
    g, n = args.g, args.n
    if g < 0 or n < 1 or 2 * g - 2 + n <= 0:
        print(f"unstable target ({g},{n})", file=sys.stderr)
        return 2
    if g > BUDGET_G or 2 * g - 2 + n > BUDGET_CHI or n > BUDGET_N:
        print(f"({g},{n}) exceeds the default budget "
              f"(g <= {BUDGET_G}, 2g-2+n <= {BUDGET_CHI}, n <= {BUDGET_N})",
              file=sys.stderr)
        return 2
    w = compute_omega(g, n, args.trunc)
    if args.format == "json":
        print(json.dumps(w.to_json_obj()))
    else:
        print(f"invariant g={g} n={n} ({len(w.terms)} terms, "
              f"max pole order {w.max_order()})")
        for key, val in sorted(w.terms.items()):
            forms = " ".join(f"({b:+d},{o})" for b, o in key)
            print(f"  {forms}  {rat_str(val)}")
    return 0


def _closed_lookup(g: int, b: Sequence[int]) -> Optional[Tuple[str, List[int]]]:
    evens = sorted(x for x in b if x % 2 == 0)
    odds = sorted(x for x in b if x % 2)
    pattern = "e" * len(evens) + "o" * len(odds)
    u = [x // 2 for x in evens] + [(x + 1) // 2 for x in odds]
    for name, (gg, arity, pat, _) in gw.CLOSED_FORM_NAMES.items():
        if gg == g and arity == len(b) and pat == pattern:
            return name, u
    if g == 0 and not odds and len(b) >= 3:
        return "genus0-even-npoint", u
    return None


def cmd_gw(args) -> int:
    g = args.g
    b = [int(x) for x in args.b.split(",") if x != ""]
    if not b or any(x < 0 for x in b):
        print("need a comma list of powers >= 0", file=sys.stderr)
        return 2
    ins = [{"class": "point", "b": x} for x in b]
    lookup = _closed_lookup(g, b)
    results = []
    if args.oracle in ("plancherel", "all"):
        results.append(("plancherel", gw.connected_stationary(g, tuple(b))))
    if args.oracle in ("toprec", "all"):
        if g > 1:
            if args.oracle == "toprec":
                print("the recursion evaluator supports g <= 1 only", file=sys.stderr)
                return 2
        else:
            results.append(("toprec", gw.stationary_toprec(g, gw.stationary_key(b))))
    if args.oracle in ("closed", "all"):
        if lookup is None:
            if args.oracle == "closed":
                print(f"no closed form covers g={g}, b={b}", file=sys.stderr)
                return 2
        else:
            name, u = lookup
            results.append((f"closed:{name}", gw.closed_forms(name, u)))
    agree = len({v for _, v in results}) <= 1
    if args.format == "json":
        if args.oracle == "all":
            print(json.dumps({
                "g": g, "insertions": ins,
                "results": [{"oracle": o, "value": rat_str(v)} for o, v in results],
                "agree": agree,
            }))
        else:
            o, v = results[0]
            print(json.dumps({"g": g, "insertions": ins, "value": rat_str(v),
                              "oracle": o}))
    else:
        for o, v in results:
            print(f"{o}: {rat_str(v)}")
        if args.oracle == "all":
            print(f"agree: {str(agree).lower()}")
    return 0 if agree else 1


def _table_rows():
    out = []
    for g, n, k, npoly, mpoly in golden_rows():
        got_n = expand.n_quasi(g, n).sectors[k]
        got_m = expand.m_quasi(g, n).sectors[k]
        out.append((g, n, k, got_n, got_m, got_n == npoly and got_m == mpoly))
    return out


def cmd_table7(args) -> int:
    rows = _table_rows()
    ok = all(r[5] for r in rows)
    if args.format == "json":
        print(json.dumps([{
            "g": g, "n": n, "k": k,
            "N": poly_str(p_n), "m": poly_str(p_m),
            "match": match,
        } for g, n, k, p_n, p_m, match in rows]))
    elif args.format == "csv":
        print("g,n,k,N,m,match")
        for g, n, k, p_n, p_m, match in rows:
            print(f'{g},{n},{k},"{poly_str(p_n)}","{poly_str(p_m)}",{str(match).lower()}')
    elif args.format == "latex":
        print(r"\begin{tabular}{||l|c|c|c|c||}")
        print(r"\hline\hline")
        print(r"g & n & k & $N^g_{n,k}$ & $m^g_{n,k}$\\ \hline")
        for g, n, k, p_n, p_m, _ in rows:
            print(f"{g} & {n} & {k} & ${poly_str(p_n, latex=True)}$ & "
                  f"${poly_str(p_m, latex=True)}$\\\\ \\hline")
        print(r"\hline\end{tabular}")
    else:
        for g, n, k, p_n, p_m, match in rows:
            flag = "ok " if match else "DIFF"
            print(f"[{flag}] g={g} n={n} k={k}  N = {poly_str(p_n)}  |  m = {poly_str(p_m)}")
    if not ok:
        print("table differs from the golden transcription", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    try:
        cases = verify.build_suite(args.suite, max_weight=args.max_weight,
                                   bmax=args.max_b)
    except KeyError as e:
        print(str(e), file=sys.stderr)
        return 2
    results = verify.run_cases(cases, jobs=args.jobs)
    failed = 0
    for name, ok, detail in results:
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f" ({detail})"
        print(line)
        failed += not ok
    print(f"{len(results) - failed}/{len(results)} cases passed", file=sys.stderr)
    return 1 if failed else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="spectralrec",
        description="Exact topological recursion on x = z + 1/z with "
                    "stationary Gromov-Witten cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", help="compute one invariant")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--trunc", type=int, default=None,
                   help="override the curve truncation order")
    p.set_defaults(fn=cmd_omega)

    p = sub.add_parser("gw", help="stationary invariants from the oracles")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b", type=str, required=True, help="comma list of powers")
    p.add_argument("--oracle", choices=["plancherel", "toprec", "closed", "all"],
                   default="all")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(fn=cmd_gw)

    p = sub.add_parser("table7", help="regenerate and diff the coefficient table")
    p.add_argument("--format", choices=["text", "json", "csv", "latex"],
                   default="text")
    p.set_defaults(fn=cmd_table7)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITE_NAMES + ["all"])
    p.add_argument("--max-weight", type=int, default=10)
    p.add_argument("--max-b", type=int, default=9)
    p.add_argument("--jobs", type=int, default=_jobs_default())
    p.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    return args.fn(args)


def entry() -> None:
    sys.exit(main())
