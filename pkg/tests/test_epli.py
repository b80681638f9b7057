import numpy as np
from fastcore.test import test_close, test_eq, test_fail
from scipy.integrate import simpson

from plijax.distributions.families import DistributionSpec, FamilyTag, pdf, sample
from plijax.estimation.iosample import IOSample
from plijax.robustness.epli import (
    EpliMode,
    StandardSpaceShift,
    epli_curve,
    epli_perturbed_density,
    kl_curve,
    variance_perturbation,
)
from plijax.utils.errors import DomainError, UnsupportedFamilyError

NORMAL = DistributionSpec(FamilyTag.Normal, (1.0, 2.0))
TRIANGULAR = DistributionSpec(FamilyTag.Triangular, (50.0,), (49.0, 51.0))
UNIFORM = DistributionSpec(FamilyTag.Uniform, (), (0.0, 1.0))


def test_gaussian_shift_is_a_mean_shift():
    x = np.linspace(-5.0, 7.0, 121)
    shifted = epli_perturbed_density(NORMAL, 0.5)
    test_close(shifted.pdf(x), pdf(DistributionSpec(FamilyTag.Normal, (2.0, 2.0)), x), eps=1e-10)
    test_close(shifted.standard_score(x), (x - 1.0) / 2.0, eps=1e-10)


def test_zero_shift_is_the_nominal_law():
    x = np.linspace(49.0, 51.0, 11)
    law = StandardSpaceShift(TRIANGULAR, 0.0)
    test_eq(law.log_likelihood_ratio(x), np.zeros(11))
    test_eq(law.pdf(x), pdf(TRIANGULAR, x))
    test_eq(law.sample(9, 100), sample(TRIANGULAR, 9, 100))


def test_shifted_density_is_a_density():
    law = StandardSpaceShift(TRIANGULAR, 0.7)
    x = np.linspace(49.0, 51.0, 20001)
    density = law.pdf(x)
    test_eq(density[0], 0.0)
    test_eq(density[-1], 0.0)
    test_close(simpson(density, x=x), 1.0, eps=1e-3)
    mean = simpson(x * density, x=x)
    assert mean > 50.0
    test_close(law.sample(3, 100_000).mean(), mean, eps=0.01)


def test_variance_perturbation():
    test_eq(variance_perturbation(NORMAL, 4.0).theta, (1.0, 4.0))
    chart = DistributionSpec(FamilyTag.NormalVariance, (1.0, 4.0))
    test_eq(variance_perturbation(chart, 2.0).theta, (1.0, 8.0))
    truncated = DistributionSpec(FamilyTag.TruncNormal, (30.0, 7.5), (15.0, 75.0))
    perturbed = variance_perturbation(truncated, 0.25)
    test_eq(perturbed.theta, (30.0, 3.75))
    test_eq(perturbed.support, truncated.support)
    test_fail(lambda: variance_perturbation(TRIANGULAR, 2.0), exc=UnsupportedFamilyError)
    test_fail(lambda: variance_perturbation(NORMAL, 0.0), exc=DomainError)


def test_kl_of_a_standard_space_shift():
    deltas = [0.0, 0.5, 1.0]
    test_close(kl_curve(NORMAL, deltas), np.array([0.0, 0.125, 0.5]), eps=1e-5)
    uniform = kl_curve(UNIFORM, [0.25, 0.5, 1.0])
    assert np.all(np.diff(uniform) > 0)
    assert uniform[0] >= -1e-9
    test_close(uniform[-1], 0.5, eps=0.05)


def test_mean_shift_curve(gaussian_toy):
    curve = epli_curve(gaussian_toy, 0, [-0.5, 0.0, 0.5], 0.95)
    test_eq(curve.mode, EpliMode.MeanShift)
    test_eq(curve.pli[1], 0.0)
    test_close(curve.pli[2], (2.1449 - 1.6449) / 1.6449, eps=0.03)
    assert curve.pli[0] < 0
    test_eq(curve.admissible, np.array([True, True, True]))
    frame = curve.to_frame()
    test_eq(list(frame.columns), ["input", "mode", "parameter", "pli", "admissible"])
    test_eq(set(frame["mode"]), {"mean_shift"})


def test_variance_curve(gaussian_toy):
    curve = epli_curve(gaussian_toy, 0, [0.81, 1.0, 1.21], 0.95, mode="variance_scale")
    test_eq(curve.pli[1], 0.0)
    test_close(curve.pli[2], 0.1, eps=0.03)
    test_close(curve.pli[0], -0.1, eps=0.03)


def test_variance_scaling_needs_a_gaussian_input():
    s = IOSample([[49.5], [50.5]], [1.0, 2.0], (TRIANGULAR,))
    test_fail(lambda: epli_curve(s, 0, [2.0], 0.5, mode=EpliMode.VarianceScale), exc=UnsupportedFamilyError)


def test_direct_resampling(gaussian_toy):
    model = lambda X: X[:, 0]
    test_fail(lambda: epli_curve(gaussian_toy, 0, [0.5], 0.95, model=model), exc=DomainError)
    curve = epli_curve(gaussian_toy, 0, [0.0, 0.5], 0.95, model=model, seed=1)
    test_eq(curve.pli[0], 0.0)
    test_close(curve.pli[1], (2.1449 - 1.6449) / 1.6449, eps=0.03)
    again = epli_curve(gaussian_toy, 0, [0.0, 0.5], 0.95, model=model, seed=1)
    test_eq(curve.pli, again.pli)
