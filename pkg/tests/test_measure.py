import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hitstats.errors import DegenerateTarget, InsufficientGrid
from hitstats.measure import (
    CIRCLE,
    BallTarget,
    DistanceProfile,
    MeasureEstimate,
    Metric,
    corona_ratio,
    estimate_ball_measure,
    hit_indices,
    local_dimension,
    short_return_fraction,
    short_return_fraction_from_hits,
    short_return_window,
)
from hitstats.systems import Kind, SystemSpec, generate_orbit


@pytest.fixture(scope="module")
def doubling_orbit():
    return generate_orbit(SystemSpec(Kind.DOUBLING), 99, burn_in=0, length=1_000_000)


@pytest.fixture(scope="module")
def smale_orbit():
    return generate_orbit(SystemSpec(Kind.SMALE_SOLENOID, theta=0.1), 5, burn_in=1000, length=1_000_000)


def test_hit_indices_examples():
    orbit = np.array([0.1, 0.2, 0.4, 0.8])
    assert list(hit_indices(orbit, BallTarget(0.2, 0.05))) == [1]
    assert list(hit_indices(orbit, BallTarget(0.3, 1e-3))) == []
    assert list(hit_indices(orbit, BallTarget(0.2, 1.0))) == [0, 1, 2, 3]


def test_hit_indices_strict_inequality():
    orbit = np.array([0.5, 0.75])
    assert list(hit_indices(orbit, BallTarget(0.25, 0.25))) == []
    assert list(hit_indices(orbit, BallTarget(0.25, 0.2500001))) == [0]


def test_circle_metric_wraps():
    d = CIRCLE(np.array([0.01, 0.99, 0.5]), 0.0)
    np.testing.assert_allclose(d, [0.01, 0.01, 0.5])


def test_solenoid_metric_is_max():
    m = Metric("solenoid")
    pts = np.array([[0.95, 0.1, 0.0], [0.0, 0.0, 0.3]])
    np.testing.assert_allclose(m(pts, (0.0, 0.0, 0.0)), [0.1, 0.3])


def test_billiard_metric_period():
    m = Metric("billiard", period=10.0)
    d = m(np.array([[9.5, 0.0], [1.0, 0.4]]), (0.5, 0.1))
    np.testing.assert_allclose(d, [math.hypot(1.0, 0.1), math.hypot(0.5, 0.3)])


def test_ball_measure_lebesgue_oracle(doubling_orbit):
    est = estimate_ball_measure(doubling_orbit, BallTarget(0.2137, 0.01))
    assert abs(est.mean - 0.02) <= 3 * est.half_width
    assert est.sample_count == len(doubling_orbit)


def test_ball_measure_whole_space():
    orbit = np.random.default_rng(0).random((20_000, 1))
    est = estimate_ball_measure(orbit, BallTarget(0.3, 0.6))
    assert est.mean == 1.0 and est.half_width == 0.0


def test_ball_measure_degenerate():
    orbit = np.random.default_rng(0).random((20_000, 1))
    with pytest.raises(DegenerateTarget):
        estimate_ball_measure(orbit, BallTarget(0.3, 1e-12))


def test_ball_measure_needs_long_orbit():
    with pytest.raises(ValueError):
        estimate_ball_measure(np.zeros((100, 1)), BallTarget(0.0, 0.1))


def test_half_width_scaling():
    a = MeasureEstimate.from_counts(100, 10_000)
    b = MeasureEstimate.from_counts(400, 40_000)
    assert b.half_width == pytest.approx(a.half_width / 2)


@pytest.mark.parametrize("power", [1.0, 2.0, 0.7])
def test_local_dimension_exact_power(power):
    radii = 0.1 * 0.5 ** np.arange(6)
    targets = [BallTarget(0.0, r) for r in radii]
    slope, se = local_dimension(targets, radii**power)
    assert slope == pytest.approx(power, abs=1e-12)
    assert se == pytest.approx(0.0, abs=1e-7)


def test_local_dimension_needs_four_radii():
    with pytest.raises(InsufficientGrid):
        local_dimension([0.1, 0.05, 0.025], [0.2, 0.1, 0.05])


def test_local_dimension_smale(smale_orbit):
    z = tuple(smale_orbit[123_456])
    prof = DistanceProfile.from_orbit(smale_orbit, z, Metric("solenoid"))
    radii = 2.0 ** -np.arange(4, 10)
    slope, _ = local_dimension(radii, [prof.count_within(r) / len(prof) for r in radii])
    assert abs(slope - (1 + math.log(2) / math.log(10))) < 0.1


def test_corona_lebesgue(doubling_orbit):
    r = 0.01
    for frac in (0.05, 0.1, 0.2):
        delta = frac * r
        ratio = corona_ratio(doubling_orbit, 0.2137, r, delta)
        # counts: corona ~ Bin(n, 4 delta), ball ~ Bin(n, 2r)
        sigma = 2 * delta / r * math.sqrt(1 / (4 * delta * len(doubling_orbit)))
        assert abs(ratio - 2 * delta / r) < 3 * sigma + 1e-3


def test_corona_zero_delta(doubling_orbit):
    assert corona_ratio(doubling_orbit, 0.2137, 0.01, 0.0) == 0.0


def test_corona_smale(smale_orbit):
    z = tuple(smale_orbit[777])
    prof = DistanceProfile.from_orbit(smale_orbit, z, Metric("solenoid"))
    ratios = [prof.corona_ratio(0.05, d) for d in (0.001, 0.0025, 0.005)]
    assert ratios[-1] <= 0.5
    assert ratios == sorted(ratios)


def test_short_returns_synthetic():
    assert short_return_fraction_from_hits([0, 100, 200], 1000, 10) == 0.0
    assert short_return_fraction_from_hits([0, 5, 200], 1000, 10) == pytest.approx(1 / 3)
    with pytest.raises(DegenerateTarget):
        short_return_fraction_from_hits([], 1000, 10)


def test_short_returns_window_edge():
    # hit 995 cannot see 10 further steps, so only hit 0 is eligible
    assert short_return_fraction_from_hits([0, 995], 1000, 10) == 0.0


def test_short_returns_fixed_point(doubling_orbit):
    frac = short_return_fraction(doubling_orbit, BallTarget(0.0, 0.01), 10)
    assert frac >= 0.4


def test_short_returns_generic(doubling_orbit):
    r = 1e-3
    p = math.floor((1 / (2 * r)) ** 0.5)
    assert short_return_fraction(doubling_orbit, BallTarget(0.2137, r), p) <= 0.05


def test_periodic_contrast(doubling_orbit):
    for r in (1e-2, 3e-3, 1e-3):
        _, p = short_return_window(2 * r, 1.0, 1.0, 0.5)
        fixed = short_return_fraction(doubling_orbit, BallTarget(0.0, r), p)
        generic = short_return_fraction(doubling_orbit, BallTarget(0.2137, r), p)
        assert fixed >= 5 * generic


def test_short_return_window():
    assert short_return_window(0.002, 1.0, 1.0, 0.5) == (500, 22)
    n, p = short_return_window(0.01, 2.0, 2.0, 0.01)
    assert n == 200 and p == math.floor(200 ** (1.99 / 2))


samples = arrays(np.float64, st.integers(10, 300), elements=st.floats(0, 1, exclude_max=True))


@settings(max_examples=50)
@given(samples, st.floats(0, 1, exclude_max=True), st.floats(0.01, 0.4), st.floats(0.0, 0.99))
def test_profile_invariants(xs, z, r, frac):
    prof = DistanceProfile.from_orbit(xs, z)
    delta = frac * r
    # consistency with hit indices
    assert prof.count_within(r) == len(hit_indices(xs, BallTarget(z, r)))
    # monotone in r
    assert prof.count_within(r) <= prof.count_within(r * 1.1)
    # additivity of the corona numerator
    assert prof.corona_count(r, delta) == prof.count_within(r + delta) - prof.count_within(r - delta)
    if prof.count_within(r):
        assert prof.corona_ratio(r, delta) <= prof.corona_ratio(r, min(delta * 1.5, r))
