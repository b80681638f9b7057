import math

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail
from scipy.stats import norm, normaltest

from plijax.distributions.families import DistributionSpec, FamilyTag, sample
from plijax.estimation.bootstrap import bootstrap
from plijax.estimation.iosample import IOSample
from plijax.estimation.quantile import empirical_quantile, likelihood_ratios, resampled_quantile, weighted_quantiles
from plijax.robustness.epli import StandardSpaceShift
from plijax.robustness.index import baseline_quantile, delta_grid, max_admissible_pli, pli, pli_detail
from plijax.utils.errors import DomainError
from plijax.utils.parallel import derive_rng, derive_seed

LAWS = [
    DistributionSpec(FamilyTag.TruncNormal, (30.0, 7.5), (15.0, 75.0)),
    DistributionSpec(FamilyTag.TruncLogNormal, (0.0, 0.76), (0.1, 10.0)),
    DistributionSpec(FamilyTag.TruncGumbel, (1013.0, 558.0), (500.0, 3000.0)),
    DistributionSpec(FamilyTag.Triangular, (50.0,), (49.0, 51.0)),
    DistributionSpec(FamilyTag.Normal, (1.0, 1.0)),
    DistributionSpec(FamilyTag.NormalVariance, (1.0, 1.0)),
    DistributionSpec(FamilyTag.Uniform, (), (1.0, 2.0)),
]
STANDARD = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))


@pytest.mark.parametrize("spec", LAWS, ids=str)
def test_nominal_perturbation_is_the_identity(spec):
    x = sample(spec, 1, 1000)
    s = IOSample(x[:, None], x + 10.0, (spec,))
    test_eq(likelihood_ratios(s, 0, spec), np.ones(1000))
    test_eq(pli(s, 0, spec, 0.95), 0.0)
    test_eq(pli(s, 0, StandardSpaceShift(spec, 0.0), 0.95), 0.0)


def test_detail_of_a_mean_shift(gaussian_toy):
    detail = pli_detail(gaussian_toy, 0, DistributionSpec(FamilyTag.Normal, (0.3, 1.0)), 0.95)
    test_close(detail.quantile, 1.6449, eps=0.05)
    test_close(detail.pli, 0.3 / 1.6449, eps=0.04)
    assert detail.admissible
    assert 0.8 * gaussian_toy.N < detail.ess < gaussian_toy.N


def test_reverse_importance_sampling_agrees_with_resampling(gaussian_toy):
    shifted = DistributionSpec(FamilyTag.Normal, (0.5, 1.0))
    reweighted = pli_detail(gaussian_toy, 0, shifted, 0.95).perturbed_quantile
    direct = resampled_quantile(lambda X: X[:, 0], gaussian_toy.input_specs, 0, shifted, 20_000, 0.95, seed=2)
    test_close(reweighted, direct, eps=0.08)


def test_zero_baseline_is_rejected():
    spec = DistributionSpec(FamilyTag.Uniform, (), (0.0, 1.0))
    s = IOSample(np.full((20, 1), 0.5), np.zeros(20), (spec,))
    test_fail(lambda: pli(s, 0, spec, 0.5), exc=DomainError)
    test_fail(lambda: baseline_quantile([0.0, 0.0], 0.5), exc=DomainError)


def test_largest_admissible_index():
    y = np.arange(1.0, 101.0)
    lo, hi = max_admissible_pli(y, 0.5)
    test_close(lo, (11.0 - 50.0) / 50.0)
    test_close(hi, (90.0 - 50.0) / 50.0)
    test_fail(lambda: max_admissible_pli(y[:10], 0.5), exc=DomainError)


def test_delta_grid():
    test_eq(delta_grid(0.1, 1.4, 0.1).size, 14)
    test_eq(delta_grid(0.1, 1.4, 0.1)[-1], 1.4)
    test_eq(delta_grid(0.5, 0.5, 0.1), np.array([0.5]))
    test_fail(lambda: delta_grid(0.5, 0.1, 0.1), exc=DomainError)
    test_fail(lambda: delta_grid(0.1, 0.5, 0.0), exc=DomainError)


def _toy(x):
    return IOSample(x[:, None], x.copy(), (STANDARD,))


@pytest.mark.slow
def test_reverse_importance_sampling_within_resampling_spread():
    N, B = 100_000, 100
    # a mean shift and a variance reduction, both at Fisher distance 0.5
    laws = [DistributionSpec(FamilyTag.Normal, (0.5, 1.0)), DistributionSpec(FamilyTag.Normal, (0.0, math.exp(-0.5 / math.sqrt(2))))]
    agree, trials = 0, 0
    for seed in range(50):
        s = _toy(derive_rng(seed, 0).standard_normal(N))
        for j, law in enumerate(laws):
            ratios = likelihood_ratios(s, 0, law)
            reweighted = float(weighted_quantiles(s.outputs, ratios[None], 0.95)[0])
            spread_is = bootstrap(s, lambda r: weighted_quantiles(r.outputs, ratios[None, r.rows], 0.95)[0], B, seed)

            direct_sample = _toy(sample(law, derive_seed(seed, 1 + j), N))
            direct = empirical_quantile(direct_sample.outputs, 0.95)
            spread_rs = bootstrap(direct_sample, lambda r: empirical_quantile(r.outputs, 0.95), B, seed)

            # both estimators are noisy: compare against the spread of their difference
            half_width = math.hypot(spread_is.hi95 - spread_is.lo95, spread_rs.hi95 - spread_rs.lo95) / 2
            agree += abs(reweighted - direct) <= half_width
            trials += 1
    assert agree >= 0.9 * trials


@pytest.mark.slow
def test_index_estimates_are_consistent():
    shifted = DistributionSpec(FamilyTag.Normal, (0.5, 1.0))
    exact = 0.5 / norm.ppf(0.95)

    def estimates(N, seeds):
        return np.array([pli(_toy(derive_rng(seed, N).standard_normal(N)), 0, shifted, 0.95) for seed in seeds])

    medians = [np.median(np.abs(estimates(N, range(20)) - exact)) for N in (1_000, 10_000, 100_000)]
    assert medians[0] > medians[1] > medians[2]
    errors = estimates(10_000, range(500)) - exact
    assert normaltest((errors - errors.mean()) / errors.std()).pvalue > 0.01
