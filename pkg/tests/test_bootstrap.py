import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail
from scipy.stats import norm

from plijax.distributions.families import DistributionSpec, FamilyTag
from plijax.estimation.bootstrap import bootstrap, bootstrap_replicates
from plijax.estimation.iosample import IOSample
from plijax.estimation.quantile import empirical_quantile
from plijax.utils.errors import DomainError, NumericalError
from plijax.utils.parallel import derive_rng


def _mean(s):
    return s.outputs.mean()


def test_interval_brackets_the_estimate(gaussian_toy):
    result = bootstrap(gaussian_toy, _mean, B=100, seed=1)
    estimate = gaussian_toy.outputs.mean()
    assert result.lo95 <= estimate <= result.hi95
    assert result.hi95 - result.lo95 < 0.1
    assert isinstance(result.mean, float)


def test_replicates_do_not_depend_on_the_pool(gaussian_toy):
    serial, _ = bootstrap_replicates(gaussian_toy, _mean, B=20, seed=4, n_jobs=1)
    pooled, _ = bootstrap_replicates(gaussian_toy, _mean, B=20, seed=4, n_jobs=4)
    test_eq(serial, pooled)
    other, _ = bootstrap_replicates(gaussian_toy, _mean, B=20, seed=5, n_jobs=1)
    assert not np.array_equal(serial, other)


def test_vector_statistic(gaussian_toy):
    result = bootstrap(gaussian_toy, lambda s: [s.outputs.min(), s.outputs.max()], B=30, seed=2)
    test_eq(result.mean.shape, (2,))
    assert np.all(result.lo95 <= result.hi95)


def test_failed_replicates_are_dropped(gaussian_toy):
    def flaky(s):
        if s.rows[0] % 2:
            raise NumericalError("odd first row")
        return s.outputs.mean()

    def always(s):
        raise NumericalError("never works")

    values, dropped = bootstrap_replicates(gaussian_toy, lambda s: np.nan if s.rows[0] % 20 == 0 else 1.0, B=50, seed=0)
    test_eq(len(values) + dropped, 50)
    test_fail(lambda: bootstrap(gaussian_toy, always, B=20, seed=0), exc=NumericalError)
    test_fail(lambda: bootstrap(gaussian_toy, flaky, B=200, seed=0), exc=NumericalError)


def test_bootstrap_arguments(gaussian_toy):
    test_fail(lambda: bootstrap(gaussian_toy, _mean, B=1), exc=DomainError)
    spec = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))
    empty = IOSample(np.zeros((0, 1)), np.zeros(0), (spec,))
    test_fail(lambda: bootstrap(empty, _mean, B=10), exc=DomainError)


def _standard_sample(rng, N):
    x = rng.standard_normal(N)
    return IOSample(x[:, None], x.copy(), (DistributionSpec(FamilyTag.Normal, (0.0, 1.0)),))


def test_interval_width_of_a_mean():
    N = 10_000
    result = bootstrap(_standard_sample(derive_rng(8), N), _mean, B=400, seed=3)
    clt_width = 2 * 1.96 / np.sqrt(N)
    test_close((result.hi95 - result.lo95) / clt_width, 1.0, eps=0.2)


@pytest.mark.slow
def test_quantile_interval_coverage():
    exact = norm.ppf(0.95)
    hits = 0
    for rep in range(100):
        s = _standard_sample(derive_rng(rep, 1), 2000)
        result = bootstrap(s, lambda r: empirical_quantile(r.outputs, 0.95), B=200, seed=rep)
        hits += result.lo95 <= exact <= result.hi95
    assert hits >= 90
