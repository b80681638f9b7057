import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from plijax.distributions.families import DistributionSpec, FamilyTag
from plijax.estimation.iosample import IOSample
from plijax.models.analytic import builtin_model
from plijax.models.sample import generate_sample
from plijax.robustness.index import delta_grid
from plijax.robustness.ofpli import DeltaLevel, EstimatorMode, PliCurve, ofpli_at_delta, ofpli_curve
from plijax.utils.errors import DomainError, UnsupportedFamilyError

FAST = dict(K=8, n_steps=100)


def _level(delta, values, counts):
    n = len(values)
    spec = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))
    return DeltaLevel(delta, np.arange(n), (spec,) * n, np.array(values), np.array(counts), np.ones(n))


def test_zero_radius_is_the_nominal_law(gaussian_toy):
    level = ofpli_at_delta(gaussian_toy, 0, 0.0, 0.95)
    test_eq(level.values, np.zeros(1))
    test_eq(level.s_plus, 0.0)
    test_eq(level.s_minus, 0.0)
    test_eq(level.direction_indices, np.array([-1]))
    test_eq(level.argmax_spec, gaussian_toy.input_specs[0])
    assert level.admissible


def test_small_radius_gives_small_indices(gaussian_toy):
    level = ofpli_at_delta(gaussian_toy, 0, 1e-3, 0.95, **FAST)
    assert abs(level.s_plus) <= 1e-2
    assert abs(level.s_minus) <= 1e-2


def test_extremes_over_the_sphere(gaussian_toy):
    level = ofpli_at_delta(gaussian_toy, 0, 0.3, 0.95, K=16, n_steps=200)
    test_eq(level.n_valid, 16)
    assert level.s_minus < 0 < level.s_plus
    assert level.argmax_spec in level.points
    # the upper quantile grows with the mean and the scale
    mu, sigma = level.argmax_spec.theta
    assert mu > 0 or sigma > 1
    test_close(level.ess.max(), gaussian_toy.N, eps=0.2 * gaussian_toy.N)


def test_level_selection():
    mixed = _level(0.5, [0.1, 0.3], [20, 5])
    test_eq(mixed.admissible, False)
    test_eq(mixed.s_plus, 0.1)
    test_eq(mixed.s_minus, 0.1)
    none = _level(0.5, [0.1, 0.3], [1, 2])
    test_eq(none.s_plus, 0.3)
    test_eq(none.s_minus, 0.1)


def test_admissibility_cutoff_is_monotone():
    levels = (_level(0.1, [0.0], [50]), _level(0.2, [0.1], [3]), _level(0.3, [0.2], [50]))
    curve = PliCurve(0, "x1", 0.95, EstimatorMode.ReverseIS, levels, np.zeros((3, 2)), np.zeros((3, 2)))
    test_eq(curve.admissible, np.array([True, False, False]))
    test_eq(curve.delta_max, 0.1)


def test_curve_on_a_gaussian_toy(gaussian_toy):
    curve = ofpli_curve(gaussian_toy, 0, [0.0, 0.2, 0.4], 0.95, K=16, B=20, n_steps=200, seed=5)
    test_eq(curve.deltas, np.array([0.0, 0.2, 0.4]))
    test_eq(curve.n_valid, np.array([1, 16, 16]))
    test_eq(curve.admissible, np.array([True, True, True]))
    test_eq(curve.delta_max, 0.4)
    assert np.all(np.diff(curve.s_plus) > 0)
    assert np.all(np.diff(curve.s_minus) < 0)
    test_eq(curve.ci_plus[0], np.zeros(2))
    assert curve.ci_plus[2, 0] <= curve.ci_plus[2, 1]

    frame = curve.to_frame()
    test_eq(
        list(frame.columns),
        ["input", "delta", "s_plus", "s_minus", "ci_lo_plus", "ci_hi_plus", "ci_lo_minus", "ci_hi_minus", "admissible", "n_valid"],
    )
    test_eq(set(frame["input"]), {"X1"})
    points = curve.sphere_frame()
    test_eq(len(points), 33)
    test_eq(list(points.columns), ["input", "delta", "direction_index", "theta1", "theta2", "S", "admissible", "ess"])


def test_small_sample_loses_admissibility(gaussian_toy):
    small = gaussian_toy.take(np.arange(200))
    curve = ofpli_curve(small, 0, [0.0, 0.5, 1.0], 0.95, B=0, **FAST)
    test_eq(curve.admissible, np.array([True, False, False]))
    test_eq(curve.delta_max, 0.0)


def test_indices_do_not_depend_on_the_chart(gaussian_toy):
    x = gaussian_toy.inputs
    variance = IOSample(x, gaussian_toy.outputs, (DistributionSpec(FamilyTag.NormalVariance, (0.0, 1.0)),))
    a = ofpli_at_delta(gaussian_toy, 0, 0.5, 0.95, K=16, n_steps=200)
    b = ofpli_at_delta(variance, 0, 0.5, 0.95, K=16, n_steps=200)
    test_close(a.s_plus, b.s_plus, eps=5e-3)
    test_close(a.s_minus, b.s_minus, eps=5e-3)


def test_direct_resampling_is_reproducible(gaussian_toy):
    small = gaussian_toy.take(np.arange(2000))
    model = lambda X: X[:, 0]
    a = ofpli_at_delta(small, 0, 0.5, 0.95, model=model, seed=3, n_jobs=1, **FAST)
    b = ofpli_at_delta(small, 0, 0.5, 0.95, model=model, seed=3, n_jobs=2, **FAST)
    test_eq(a.values, b.values)
    test_eq(a.ess, np.full(8, 2000.0))
    curve = ofpli_curve(small, 0, [0.5], 0.95, B=10, model=model, seed=3, **FAST)
    test_eq(curve.mode, EstimatorMode.Resample)
    test_eq(curve.levels[0].values, a.values)


def test_rejected_arguments(gaussian_toy):
    test_fail(lambda: ofpli_at_delta(gaussian_toy, 0, -0.1, 0.95), exc=DomainError)
    test_fail(lambda: ofpli_curve(gaussian_toy, 0, [0.2, 0.1], 0.95), exc=DomainError)
    test_fail(lambda: ofpli_curve(gaussian_toy, 0, [-0.1, 0.1], 0.95), exc=DomainError)
    uniform = DistributionSpec(FamilyTag.Uniform, (), (-10.0, 10.0))
    s = IOSample(np.clip(gaussian_toy.inputs, -10, 10), gaussian_toy.outputs, (uniform,))
    test_fail(lambda: ofpli_at_delta(s, 0, 0.5, 0.95), exc=UnsupportedFamilyError)


def test_empty_grid(gaussian_toy):
    curve = ofpli_curve(gaussian_toy, 0, [], 0.95)
    test_eq(curve.delta_max, None)
    test_eq(len(curve.to_frame()), 0)
    test_eq(len(curve.sphere_frame()), 0)


@pytest.mark.slow
def test_flood_river_levels_matter_least(flood_sample):
    levels = [ofpli_at_delta(flood_sample, i, 0.5, 0.95, K=32) for i in range(4)]
    reach = [max(abs(level.s_plus), abs(level.s_minus)) for level in levels]
    assert max(reach[2], reach[3]) < 0.5 * min(reach[0], reach[1])
    assert levels[0].s_plus > 0 > levels[0].s_minus


@pytest.mark.slow
def test_ishigami_curve_brackets_zero():
    s = generate_sample(builtin_model("ishigami"), 5000, seed=2)
    curve = ofpli_curve(s, 0, [0.2, 0.4], 0.95, K=32, B=50, seed=1)
    assert np.all(curve.s_minus <= 0)
    assert np.all(curve.s_plus >= 0)
    test_eq(curve.to_frame()["input"].tolist(), ["X1", "X1"])


@pytest.mark.slow
def test_ishigami_extremes_under_direct_resampling():
    model = builtin_model("ishigami")
    s = generate_sample(model, 5000, seed=0)
    levels = [ofpli_at_delta(s, i, 0.9, 0.95, K=32, model=model, seed=0) for i in range(3)]
    s_plus = [level.s_plus for level in levels]
    s_minus = [level.s_minus for level in levels]
    test_eq(int(np.argmax(s_plus)), 2)
    test_eq(int(np.argmin(s_minus)), 1)
    # the extremes of the third input sit at high and low variance
    assert levels[2].argmax_spec.theta[1] > 1
    assert levels[2].argmin_spec.theta[1] < 1


@pytest.mark.slow
def test_flood_discharge_stays_admissible_over_the_grid():
    model = builtin_model("flood")
    grid = delta_grid(0.1, 1.4, 0.1)
    seeds = range(20)
    admissible, ordered = 0, 0
    for seed in seeds:
        s = generate_sample(model, 2000, seed=seed)
        curves = [ofpli_curve(s, i, grid, 0.95, K=100, B=0) for i in range(4)]
        admissible += bool(curves[0].admissible.all())
        reach = [np.abs(np.concatenate([c.s_plus, c.s_minus])).max() for c in curves]
        ordered += max(reach[2], reach[3]) < 0.5 * min(reach[0], reach[1])
    assert admissible > len(seeds) // 2
    assert ordered > len(seeds) // 2
