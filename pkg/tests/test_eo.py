import json
from fractions import Fraction

import pytest

from spectralrec.eo import (Engine, Multidiff, check_fiber_sum,
                            check_loop_equation, check_string_dilaton,
                            compute_omega, engine_for, sigma_pullback,
                            stable_truncation,
                            w02_fiber_discrepancy_is_x_double_pole)
from spectralrec.expand import N_value, n_value


def test_omega_0_3_closed_form():
    w = compute_omega(0, 3)
    assert w.terms == {
        (((1, 2),) * 3): Fraction(1, 2),
        (((-1, 2),) * 3): Fraction(1, 2),
    }


def test_omega_1_1_values():
    w = compute_omega(1, 1)
    assert w.coeff(((1, 2),)) == Fraction(-1, 48)
    assert w.coeff(((1, 4),)) == Fraction(1, 16)
    assert w.max_order() == 4


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)])
def test_max_pole_order_attained(g, n):
    w = compute_omega(g, n)
    assert w.max_order() == 6 * g - 4 + 2 * n
    assert min(f[1] for key in w.terms for f in key) >= 2  # zero residues


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 1)])
def test_fiber_sum(g, n):
    assert check_fiber_sum(compute_omega(g, n))


def test_w02_fiber_defect():
    assert w02_fiber_discrepancy_is_x_double_pole()


def test_sigma_pullback_triangular():
    # d(1/z)/(1/z-1)^2 = -dz/(z-1)^2; order 3 picks up the order-2 tail
    assert sigma_pullback((1, 2)) == [((1, 2), Fraction(-1))]
    assert sigma_pullback((1, 3)) == [((1, 3), Fraction(1)), ((1, 2), Fraction(1))]


def test_sigma_slot_leading_order():
    # a second-order form evaluated at 1/z still has a second-order pole
    parts = sigma_pullback((1, 2))
    assert max(order for (_, order), _ in parts) == 2


@pytest.mark.parametrize("g,n_big", [(0, 4), (0, 5), (1, 2), (1, 3), (2, 2)])
def test_string_dilaton(g, n_big):
    eng = engine_for(stable_truncation(g, n_big))
    assert check_string_dilaton(eng, g, n_big)


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)])
def test_truncation_stabilization(g, n):
    N = stable_truncation(g, n)
    assert compute_omega(g, n, N) == compute_omega(g, n, N + 1)


def test_one_step_below_default_differs_at_1_1():
    # the default is sharp: one step below, the deepest residues shift
    N = stable_truncation(1, 1)
    assert compute_omega(1, 1, N - 1) != compute_omega(1, 1, N)


@pytest.mark.parametrize("g,s", [(0, 2), (1, 0), (1, 1), (2, 0)])
def test_loop_equation_small(g, s):
    eng = engine_for(max(1, 6 * g - 2 + 2 * s))
    assert check_loop_equation(eng, g, s)


def test_loop_equation_detects_perturbation():
    eng = engine_for(4)
    w = eng.omega(1, 1)
    terms = dict(w.terms)
    key = next(iter(terms))
    terms[key] = terms[key] + 1
    assert not check_loop_equation(eng, 1, 0, perturb=Multidiff(1, 1, terms))


def test_unstable_targets_rejected():
    eng = Engine(2)
    for g, n in [(0, 1), (0, 2), (0, 0)]:
        with pytest.raises(ValueError):
            eng.omega(g, n)
    with pytest.raises(ValueError):
        eng.omega(2, 1)  # truncation too small for the target


def test_memo_is_idempotent():
    eng = Engine(3)
    assert eng.omega(1, 1) is eng.omega(1, 1)


def test_n_sector_values_of_omega_0_3():
    w = compute_omega(0, 3)
    assert n_value(w, (1, 1, 1)) == 1
    assert n_value(w, (2, 1, 1)) == 0   # two odd entries: zero sector
    assert n_value(w, (2, 2, 1)) == 1   # one odd entry
    assert n_value(w, (2, 2, 2)) == 0


def test_serialization_deterministic():
    w = compute_omega(1, 1)
    one = json.dumps(w.to_json_obj())
    two = json.dumps(compute_omega(1, 1).to_json_obj())
    assert one == two
    obj = json.loads(one)
    assert obj["g"] == 1 and obj["n"] == 1
    assert obj["terms"][0]["forms"][0].keys() == {"branch", "order"}


def test_engines_cached_per_truncation():
    assert engine_for(5) is engine_for(5)
