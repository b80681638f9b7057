import fastcore.test
import numpy as np
import pytest

from plijax.distributions.families import DistributionSpec, FamilyTag
from plijax.estimation.iosample import IOSample
from plijax.models.analytic import builtin_model
from plijax.models.sample import generate_sample
from plijax.utils.parallel import set_progress

# the fastcore assertion helpers are named test_*; keep pytest from collecting them as tests
for _name in dir(fastcore.test):
    if _name.startswith("test_") and callable(getattr(fastcore.test, _name)):
        getattr(fastcore.test, _name).__test__ = False


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: statistical acceptance checks, deselect with -m 'not slow'")
    set_progress(False)


@pytest.fixture
def standard_normal():
    return DistributionSpec(FamilyTag.Normal, (0.0, 1.0))


@pytest.fixture(scope="session")
def gaussian_toy():
    "Y = X1 with X1 ~ N(0, 1), N = 20000."
    spec = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))
    x = np.random.default_rng(3).standard_normal(20_000)
    return IOSample(x[:, None], x + 0.0, (spec,), input_names=("X1",))


@pytest.fixture(scope="session")
def flood_sample():
    return generate_sample(builtin_model("flood"), 2000, seed=7)
