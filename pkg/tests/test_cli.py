import json

import pytest

from spectralrec.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.mark.parametrize("g,n,order", [(1, 1, 4), (0, 3, 2), (2, 1, 8)])
def test_omega_max_pole_order(capsys, g, n, order):
    rc, out, _ = run(capsys, "omega", "--g", str(g), "--n", str(n))
    assert rc == 0
    obj = json.loads(out)
    assert max(f["order"] for t in obj["terms"] for f in t["forms"]) == order


def test_omega_budget_exceeded(capsys):
    rc, _, err = run(capsys, "omega", "--g", "5", "--n", "1")
    assert rc == 2 and "budget" in err


def test_omega_unstable(capsys):
    rc, _, _ = run(capsys, "omega", "--g", "0", "--n", "2")
    assert rc == 2


def test_gw_all_oracles_agree(capsys):
    rc, out, _ = run(capsys, "gw", "--g", "1", "--b", "2", "--oracle", "all")
    assert rc == 0
    obj = json.loads(out)
    assert obj["agree"] is True
    assert {r["value"] for r in obj["results"]} == {"1/24"}
    assert len(obj["results"]) == 3


def test_gw_single_oracle(capsys):
    rc, out, _ = run(capsys, "gw", "--g", "2", "--b", "4", "--oracle", "plancherel")
    assert rc == 0
    obj = json.loads(out)
    assert obj["value"] == "1/1920" and obj["oracle"] == "plancherel"


def test_gw_toprec_genus_guard(capsys):
    rc, _, _ = run(capsys, "gw", "--g", "2", "--b", "4", "--oracle", "toprec")
    assert rc == 2


def test_gw_closed_guard(capsys):
    rc, _, _ = run(capsys, "gw", "--g", "1", "--b", "1,2,3,4", "--oracle", "closed")
    assert rc == 2


def test_table7_matches(capsys):
    rc, out, _ = run(capsys, "table7", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert all(r["match"] for r in rows)
    assert {(r["g"], r["n"]) for r in rows} == \
        {(0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 1), (3, 1)}


def test_table7_latex(capsys):
    rc, out, _ = run(capsys, "table7", "--format", "latex")
    assert rc == 0 and out.startswith("\\begin{tabular}")


def test_verify_suite(capsys):
    rc, out, _ = run(capsys, "verify", "exceptional")
    assert rc == 0
    assert all(line.startswith("PASS") for line in out.strip().splitlines())


def test_verify_deterministic_across_jobs(capsys):
    _, out1, _ = run(capsys, "verify", "exceptional", "--jobs", "1")
    _, out4, _ = run(capsys, "verify", "exceptional", "--jobs", "4")
    assert out1 == out4
