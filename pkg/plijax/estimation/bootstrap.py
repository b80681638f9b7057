"""Nonparametric bootstrap over the rows of a sample."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/estimation/bootstrap.ipynb.

# %% auto 0
__all__ = ['MAX_DROPPED_FRACTION', 'BootstrapResult', 'bootstrap_replicates', 'bootstrap']

# %% ../../nbs/estimation/bootstrap.ipynb 2
from typing import Callable, NamedTuple, Optional, Tuple, Union

import numpy as np
from absl import logging

from ..utils.errors import DomainError, NumericalError, PliError
from ..utils.parallel import derive_rng, parallel_map
from .iosample import IOSample

# %% ../../nbs/estimation/bootstrap.ipynb 3
MAX_DROPPED_FRACTION = 0.2


class BootstrapResult(NamedTuple):
    mean: Union[float, np.ndarray]
    lo95: Union[float, np.ndarray]
    hi95: Union[float, np.ndarray]


def bootstrap_replicates(
    s: IOSample,
    statistic: Callable[[IOSample], object],  # real or vector valued
    B: int = 200,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> Tuple[np.ndarray, int]:
    "Statistic on `B` row resamples (replicate `b` seeded by `(seed, b)`); failed replicates are dropped."
    if B < 2:
        raise DomainError(f"bootstrap needs B >= 2 replicates, got {B}")
    if s.N == 0:
        raise DomainError("bootstrap of an empty sample")

    def replicate(b: int):
        idx = derive_rng(seed, b).integers(0, s.N, s.N)
        try:
            value = np.asarray(statistic(s.take(idx)), dtype=float)
        except (PliError, ArithmeticError, ValueError) as e:
            logging.debug(f"bootstrap replicate {b} failed: {e}")
            return None
        return value if np.all(np.isfinite(value)) else None

    results = parallel_map(replicate, range(B), n_jobs)
    kept = [r for r in results if r is not None]
    dropped = B - len(kept)
    if dropped:
        logging.warning(f"{dropped}/{B} bootstrap replicates dropped")
    if dropped > MAX_DROPPED_FRACTION * B:
        raise NumericalError(f"{dropped} of {B} bootstrap replicates failed (more than {MAX_DROPPED_FRACTION:.0%})")
    return np.stack(kept), dropped


def bootstrap(
    s: IOSample,
    statistic: Callable[[IOSample], object],
    B: int = 200,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> BootstrapResult:
    "Bootstrap mean and 2.5/97.5 percentile interval, entrywise for vector statistics."
    values, _ = bootstrap_replicates(s, statistic, B, seed, n_jobs)
    mean = values.mean(axis=0)
    lo, hi = np.percentile(values, [2.5, 97.5], axis=0)
    if mean.ndim == 0:
        return BootstrapResult(float(mean), float(lo), float(hi))
    return BootstrapResult(mean, lo, hi)
