import dataclasses
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hitstats.bounds import (
    BRANCHES,
    RateInputs,
    epsilon_cap,
    evaluate_rate,
    exact_binomial_poisson_tv,
    lemma_a_bound_terms,
    optimize_epsilon,
    prop_rate_bound,
    rate_thm1,
    rate_thm2,
    stein_chen_iid_bound,
)
from hitstats.errors import Infeasible

WORKED = RateInputs(xi=2, alpha=3, dim_h=2, dim_u=1, epsilon=0.04)

# 50-digit mpmath enumeration (Poisson tail summed to k = 400)
EXACT_TV = {
    (10, 0.1): 0.029311571742836517607,
    (1, 0.5): 0.1967346701436832882,
    (20, 0.05): 0.014211242045797940276,
    (30, 0.5): 0.16709780670008532341,
}


def test_worked_example():
    res = rate_thm1(WORKED)
    assert res.feasible
    assert res.exponent_a == pytest.approx(0.000608, rel=1e-6)
    assert res.binding_term == "epsilon_sq_branch"
    expected = {"xi_branch": 1.9208, "corona_branch": 1.3412, "epsilon_sq_branch": 0.000608, "cap_branch": 0.01 / 3}
    for name, value in expected.items():
        assert res.branches[name] == pytest.approx(value, rel=1e-9)


def test_worked_example_alpha_too_small():
    with pytest.raises(Infeasible) as info:
        rate_thm1(dataclasses.replace(WORKED, alpha=1.0))
    assert info.value.constraint == "alpha_theorem"
    assert not info.value.result.feasible


def test_xi_not_binding():
    a = rate_thm1(WORKED).exponent_a
    assert rate_thm1(dataclasses.replace(WORKED, xi=1.5)).exponent_a == a


def test_thm2_example():
    res = rate_thm2(RateInputs(2, 6, 2, 1, 0.01, b=1.0))
    # dim_u -> b du/(b+du) = 1/2
    expected = {
        "xi_branch": 1.99**2 / 2,
        "corona_branch": ((1 + 1.99**2 / 2 * 6) * 0.5 - 4 - 0.02) / 2,
        "epsilon_sq_branch": 0.0001 / 2 - 3e-6,
        "cap_branch": 0.5 / 12 - 0.02,
    }
    for name, value in expected.items():
        assert res.branches[name] == pytest.approx(value, rel=1e-12)
    assert res.exponent_a == pytest.approx(4.7e-5, rel=1e-9)


def test_thm2_alpha_too_small():
    with pytest.raises(Infeasible):
        rate_thm2(RateInputs(2, 2, 2, 1, 0.01, b=1.0))


def test_thm2_requires_b():
    with pytest.raises(ValueError):
        rate_thm2(WORKED)


def test_epsilon_cap():
    assert epsilon_cap(2, 1) == pytest.approx(1 / 24)
    assert epsilon_cap(2, 1, b=1) == pytest.approx(0.5 / 24)
    assert epsilon_cap(0.5, 1) == pytest.approx(0.5 / 24)
    assert epsilon_cap(4, 4) == pytest.approx(1 / 12)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        RateInputs(1.0, 3, 2, 1)
    with pytest.raises(ValueError):
        RateInputs(2, -1, 2, 1)


def test_density_branch_set():
    inp = RateInputs(math.inf, 1.0, 2.0, 1.0, 0.01, b=0.5, lebesgue_density=True)
    res = rate_thm2(inp)
    assert res.feasible
    assert res.branches["corona_branch"] == pytest.approx(1.99**2 / 2 - 1)
    assert "alpha_theorem" not in res.constraint_report
    # without the density flag the stadium inputs are infeasible
    with pytest.raises(Infeasible):
        rate_thm2(dataclasses.replace(inp, lebesgue_density=False))


def test_density_picks_larger():
    inp = dataclasses.replace(WORKED, lebesgue_density=True)
    general = rate_thm1(WORKED).exponent_a
    assert rate_thm1(inp).exponent_a >= general


def test_optimize_epsilon_interior():
    eps, res = optimize_epsilon(WORKED)
    cap = epsilon_cap(2, 1)
    assert 0 < eps < cap
    assert res.exponent_a > rate_thm1(WORKED).exponent_a
    # a vanishes at both ends of the feasibility interval
    assert evaluate_rate(WORKED.with_epsilon(cap * 1e-6)).exponent_a < 1e-12
    assert evaluate_rate(WORKED.with_epsilon(cap * (1 - 1e-9))).exponent_a < 1e-8


def test_optimize_epsilon_refinement():
    cap = epsilon_cap(2, 1)
    e1, _ = optimize_epsilon(WORKED, grid_size=400)
    e2, _ = optimize_epsilon(WORKED, grid_size=800)
    cell = (cap / (cap * 1e-6)) ** (1 / 400)
    assert 1 / cell <= e2 / e1 <= cell


def test_optimize_epsilon_infeasible():
    with pytest.raises(Infeasible):
        optimize_epsilon(dataclasses.replace(WORKED, alpha=1.4))
    with pytest.raises(ValueError):
        optimize_epsilon(WORKED, grid_size=50)


@pytest.mark.parametrize("dim_h, dim_u", [(2.0, 1.0), (1.0, 1.0), (1.5, 0.8)])
def test_feasibility_flip_thm1(dim_h, dim_u):
    threshold = 2 / dim_u - 1 / dim_h
    base = RateInputs(2.0, threshold, dim_h, dim_u)
    optimize_epsilon(dataclasses.replace(base, alpha=threshold + 1e-4))
    with pytest.raises(Infeasible):
        optimize_epsilon(dataclasses.replace(base, alpha=threshold - 1e-4))
    with pytest.raises(Infeasible):
        optimize_epsilon(base)


@pytest.mark.parametrize("b", [0.5, 1.0, 3.0])
def test_feasibility_flip_thm2(b):
    dim_h, dim_u = 2.0, 1.0
    threshold = 2 / dim_u * (b + dim_u) / b - 1 / dim_h
    base = RateInputs(2.0, threshold, dim_h, dim_u, b=b)
    optimize_epsilon(dataclasses.replace(base, alpha=threshold + 1e-4))
    with pytest.raises(Infeasible):
        optimize_epsilon(dataclasses.replace(base, alpha=threshold - 1e-4))


def test_margin_sharpness():
    res = rate_thm1(WORKED)
    margin = res.constraint_report["alpha_corona"]
    with pytest.raises(Infeasible):
        rate_thm1(dataclasses.replace(WORKED, alpha=WORKED.alpha - margin * (1 + 1e-9)))
    rate_thm1(dataclasses.replace(WORKED, alpha=WORKED.alpha - margin * (1 - 1e-9)))


inputs = st.builds(
    RateInputs,
    xi=st.floats(1.01, 20),
    alpha=st.floats(0.1, 30),
    dim_h=st.floats(0.3, 3),
    dim_u=st.floats(0.3, 3),
    epsilon=st.floats(1e-4, 0.01),
    lebesgue_density=st.booleans(),
)


@settings(max_examples=300)
@given(inputs, st.floats(1.0, 3.0))
def test_monotone_in_xi_and_alpha(inp, factor):
    base = evaluate_rate(inp)
    assume(base.feasible)
    for bigger in (dataclasses.replace(inp, xi=inp.xi * factor), dataclasses.replace(inp, alpha=inp.alpha * factor)):
        res = evaluate_rate(bigger)
        assert res.feasible
        assert res.exponent_a >= base.exponent_a - 1e-15


@settings(max_examples=300)
@given(inputs)
def test_thm2_limit(inp):
    a = evaluate_rate(inp)
    b = evaluate_rate(dataclasses.replace(inp, b=1e9), use_b=True)
    for name in BRANCHES:
        assert b.branches[name] == pytest.approx(a.branches[name], rel=1e-6, abs=1e-12)
    assert a.feasible == b.feasible or min(abs(m) for m in a.constraint_report.values()) < 1e-6


@given(inputs)
def test_deterministic(inp):
    assert evaluate_rate(inp) == evaluate_rate(inp)


def test_stein_chen_bound():
    assert stein_chen_iid_bound(10, 0.1) == pytest.approx(0.4)
    assert stein_chen_iid_bound(1, 0.0) == 0.0


@pytest.mark.parametrize("nq, expected", EXACT_TV.items())
def test_exact_tv_oracle(nq, expected):
    assert exact_binomial_poisson_tv(*nq) == pytest.approx(expected, abs=1e-12)


def test_exact_tv_edge_cases():
    for n in (1, 5, 30):
        assert exact_binomial_poisson_tv(n, 0.0) == 0.0
    assert 0 < exact_binomial_poisson_tv(1, 0.5) <= 1.0
    assert exact_binomial_poisson_tv(20, 0.05) <= stein_chen_iid_bound(20, 0.05)
    with pytest.raises(ValueError):
        exact_binomial_poisson_tv(31, 0.1)


@given(st.integers(1, 30), st.integers(1, 50))
def test_stein_chen_domination(n, j):
    q = j / 100
    assert exact_binomial_poisson_tv(n, q) <= stein_chen_iid_bound(n, q)


def test_lemma_a_terms():
    b = lemma_a_bound_terms(10_000, 100, 1e-4, 0.01)
    # 4 (n-p) mu s = 4 * 9900 * 1e-4 * 0.01 and 4 p (n-p) mu^2 = 4 * 100 * 9900 * 1e-8
    assert b.term_short_returns == pytest.approx(0.0396)
    assert b.term_quadratic == pytest.approx(0.0396)
    assert b.term_boundary == pytest.approx(0.04)
    assert "decorrelation" in b.not_estimable
    z = lemma_a_bound_terms(100, 10, 0.0, 0.3)
    assert z.total == 0.0
    last = lemma_a_bound_terms(50, 49, 0.01, 0.5)
    assert last.term_short_returns == pytest.approx(4 * 0.01 * 0.5)
    assert last.term_quadratic == pytest.approx(4 * 49 * 0.01**2)
    with pytest.raises(ValueError):
        lemma_a_bound_terms(10, 10, 0.1, 0.1)


def test_prop_rate_bound_unit_radius():
    brk = prop_rate_bound(1.0, RateInputs(2, 3, 1, 1, 0.05), 0.0, 0.0)
    assert brk.total == pytest.approx(3.0)
    assert brk.label == "shape only"


def test_prop_rate_bound_arithmetic():
    brk = prop_rate_bound(0.01, RateInputs(2, 3, 1, 1, 0.05), 0.1, 0.02)
    # 50-digit mpmath: 0.01^0.95, 0.01^(0.95^2), 0.01^(0.05*0.95)
    powers = [0.012589254117941672, 0.015667510701081491, 0.80352612218561726]
    assert list(brk.power_terms.values()) == pytest.approx(powers, rel=1e-13)
    assert brk.term_corona == 0.1
    assert brk.term_corona_sq == pytest.approx(0.01)
    assert brk.term_short_returns == 0.02
    assert brk.total == pytest.approx(sum(powers) + 0.1 + 0.01 + 0.02, rel=1e-13)


def test_prop_rate_bound_decreasing():
    inp = RateInputs(math.inf, math.inf, 1.0, 1.0, 0.04, lebesgue_density=True)
    totals = [prop_rate_bound(r, inp, 0.12, 0.03).total for r in (0.1, 0.01, 0.001)]
    assert totals == sorted(totals, reverse=True)


def test_prop_rate_bound_window():
    brk = prop_rate_bound(0.01, RateInputs(2, 3, 1, 1, 0.05), 0.1, 0.02, mu_hat=0.02, horizon=2.0)
    assert brk.n == 100 and brk.p == math.floor(100**0.95)
