"""Perturbed-law index of a single perturbation and related helpers."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/robustness/index.ipynb.

# %% auto 0
__all__ = ['PliValue', 'baseline_quantile', 'pli', 'pli_detail', 'max_admissible_pli', 'delta_grid']

# %% ../../nbs/robustness/index.ipynb 2
from typing import NamedTuple, Tuple

import numpy as np

from ..estimation.iosample import IOSample
from ..estimation.quantile import (
    MIN_EXCEED,
    Direction,
    admissible,
    effective_sample_size,
    empirical_quantile,
    exceed_count,
    likelihood_ratios,
    weighted_quantiles,
)
from ..utils.errors import DomainError

# %% ../../nbs/robustness/index.ipynb 3
class PliValue(NamedTuple):
    quantile: float
    perturbed_quantile: float
    pli: float
    exceed_count: int
    admissible: bool
    ess: float


def baseline_quantile(outputs, alpha: float) -> float:
    q = empirical_quantile(outputs, alpha)
    if q == 0:
        raise DomainError("the nominal quantile is zero; the relative index is undefined")
    return q


def pli_detail(s: IOSample, i: int, perturbed, alpha: float) -> PliValue:
    "Reverse importance sampling index with its admissibility diagnostics."
    q = baseline_quantile(s.outputs, alpha)
    ratios = likelihood_ratios(s, i, perturbed)
    q_perturbed = float(weighted_quantiles(s.outputs, ratios[None], alpha)[0])
    count = exceed_count(s.outputs, q_perturbed, Direction.for_alpha(alpha))
    return PliValue(
        q,
        q_perturbed,
        (q_perturbed - q) / q,
        count,
        admissible(count, alpha, Direction.for_alpha(alpha)),
        effective_sample_size(ratios),
    )


def pli(
    s: IOSample,
    i: int,  # input index
    perturbed,  # perturbed law of input i
    alpha: float,
) -> float:
    "Relative shift `(q_perturbed - q) / q` of the output alpha-quantile."
    return pli_detail(s, i, perturbed, alpha).pli

# %% ../../nbs/robustness/index.ipynb 4
def max_admissible_pli(outputs, alpha: float) -> Tuple[float, float]:
    "Extreme indices an admissible estimate can reach: quantiles keeping `MIN_EXCEED` points beyond them."
    y = np.sort(np.asarray(outputs, dtype=float))
    if y.size <= MIN_EXCEED:
        raise DomainError(f"need more than {MIN_EXCEED} outputs, got {y.size}")
    q = baseline_quantile(y, alpha)
    return (y[MIN_EXCEED] - q) / q, (y[-MIN_EXCEED - 1] - q) / q


def delta_grid(delta_min: float, delta_max: float, step: float) -> np.ndarray:
    "Inclusive increasing grid from `delta_min` to `delta_max`."
    if step <= 0 or delta_max < delta_min:
        raise DomainError(f"invalid grid [{delta_min}, {delta_max}] with step {step}")
    n = int(np.floor((delta_max - delta_min) / step + 1e-9)) + 1
    return np.round(delta_min + step * np.arange(n), 12)
