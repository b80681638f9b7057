"""Empirical and reverse importance sampling quantiles of a fixed sample."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/estimation/quantile.ipynb.

# %% auto 0
__all__ = ['MIN_EXCEED', 'Direction', 'empirical_quantile', 'likelihood_ratios', 'WeightedCdf', 'weighted_cdf',
           'weighted_quantiles', 'perturbed_quantile', 'exceed_count', 'admissible', 'effective_sample_size',
           'resampled_quantile']

# %% ../../nbs/estimation/quantile.ipynb 2
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from ..distributions.families import DistributionSpec, logpdf
from ..models.analytic import ModelSpec, evaluate
from ..models.sample import draw_inputs
from ..utils.errors import DomainError, NumericalError
from .iosample import IOSample

# %% ../../nbs/estimation/quantile.ipynb 3
MIN_EXCEED = 10  # smallest trusted number of sample points beyond a perturbed quantile


class Direction(str, Enum):
    Upper = "upper"
    Lower = "lower"

    @classmethod
    def for_alpha(cls, alpha: float) -> "Direction":
        "Tail in which the alpha-quantile sits."
        return cls.Upper if alpha >= 0.5 else cls.Lower


def _check_alpha(alpha: float):
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha}")

# %% ../../nbs/estimation/quantile.ipynb 4
def empirical_quantile(outputs, alpha: float) -> float:
    "The `ceil(alpha N)`-th order statistic, i.e. `inf{t : F_N(t) >= alpha}`."
    y = np.asarray(outputs, dtype=float).reshape(-1)
    if y.size == 0:
        raise DomainError("empirical quantile of an empty sample")
    _check_alpha(alpha)
    k = min(max(math.ceil(alpha * y.size), 1), y.size)
    return float(np.partition(y, k - 1)[k - 1])

# %% ../../nbs/estimation/quantile.ipynb 5
def _log_ratios(s: IOSample, i: int, perturbed) -> np.ndarray:
    nominal = s.input_specs[i]
    x = s.inputs[:, i]
    if hasattr(perturbed, "log_likelihood_ratio"):
        return np.asarray(perturbed.log_likelihood_ratio(x), dtype=float)
    if perturbed.support != nominal.support:
        raise DomainError(f"perturbed support {perturbed.support} differs from nominal {nominal.support}")
    log_nominal = np.asarray(logpdf(nominal, x))
    zero = np.flatnonzero(~np.isfinite(log_nominal))
    if zero.size:
        raise NumericalError(f"nominal density of input {i} vanishes at an observed point", row=int(zero[0]))
    return np.asarray(logpdf(perturbed, x)) - log_nominal


def likelihood_ratios(
    s: IOSample,
    i: int,  # input index
    perturbed,  # DistributionSpec on the same support, or a law exposing `log_likelihood_ratio`
) -> np.ndarray:
    "`f_perturbed(x_i) / f_i(x_i)` for every row."
    if perturbed == s.input_specs[i]:
        return np.ones(s.N)
    return np.exp(_log_ratios(s, i, perturbed))

# %% ../../nbs/estimation/quantile.ipynb 6
@dataclass(frozen=True)
class WeightedCdf:
    "Self-normalised weighted empirical cdf; ties keep the original row order."

    values: np.ndarray  # sorted outputs
    cumulative: np.ndarray  # running sum of the unnormalised weights, sorted order

    @classmethod
    def from_ratios(cls, outputs, ratios) -> "WeightedCdf":
        y = np.asarray(outputs, dtype=float)
        if y.size == 0:
            raise DomainError("weighted cdf of an empty sample")
        order = np.argsort(y, kind="stable")
        cumulative = np.cumsum(np.asarray(ratios, dtype=float)[order])
        if not cumulative[-1] > 0 or not np.isfinite(cumulative[-1]):
            raise NumericalError("likelihood ratios sum to zero or are not finite")
        return cls(y[order], cumulative)

    @property
    def weights(self) -> np.ndarray:
        return np.diff(self.cumulative, prepend=0.0) / self.cumulative[-1]

    def evaluate(self, t):
        idx = np.searchsorted(self.values, t, side="right")
        out = np.where(idx > 0, self.cumulative[np.maximum(idx - 1, 0)] / self.cumulative[-1], 0.0)
        return out if np.ndim(out) else float(out)

    def quantile(self, alpha: float) -> float:
        "First sorted output whose cumulative weight reaches `alpha`."
        _check_alpha(alpha)
        k = int(np.argmax(self.cumulative >= alpha * self.cumulative[-1]))
        return float(self.values[k])


def weighted_cdf(s: IOSample, i: int, perturbed) -> WeightedCdf:
    return WeightedCdf.from_ratios(s.outputs, likelihood_ratios(s, i, perturbed))


def weighted_quantiles(
    outputs,  # (N,)
    ratio_matrix,  # (K, N), one row of likelihood ratios per perturbed law
    alpha: float,
) -> np.ndarray:
    "Vectorised `WeightedCdf.quantile` for `K` weightings of the same outputs."
    _check_alpha(alpha)
    y = np.asarray(outputs, dtype=float)
    order = np.argsort(y, kind="stable")
    cumulative = np.cumsum(np.atleast_2d(ratio_matrix)[:, order], axis=1)
    totals = cumulative[:, -1:]
    if np.any(~(totals > 0)) or not np.all(np.isfinite(totals)):
        raise NumericalError("likelihood ratios sum to zero or are not finite")
    k = np.argmax(cumulative >= alpha * totals, axis=1)
    return y[order][k]

# %% ../../nbs/estimation/quantile.ipynb 7
def exceed_count(outputs, q: float, direction: Union[str, Direction] = Direction.Upper) -> int:
    "Sample points strictly beyond `q` in the given tail."
    y = np.asarray(outputs)
    if Direction(direction) == Direction.Upper:
        return int((y > q).sum())
    return int((y < q).sum())


def perturbed_quantile(
    s: IOSample,
    i: int,
    perturbed,
    alpha: float,
) -> Tuple[float, int]:
    "Reverse importance sampling alpha-quantile under the perturbed law, and the count of outputs above it."
    if s.N == 0:
        raise DomainError("perturbed quantile of an empty sample")
    q = weighted_cdf(s, i, perturbed).quantile(alpha)
    return q, exceed_count(s.outputs, q, Direction.Upper)


def admissible(
    count: int,  # sample points beyond the perturbed quantile
    alpha: float = 0.95,
    direction: Union[str, Direction] = Direction.Upper,
) -> bool:
    "At least `MIN_EXCEED` points beyond the quantile, in whichever tail `direction` names."
    _check_alpha(alpha)
    Direction(direction)
    return count >= MIN_EXCEED


def effective_sample_size(weights) -> float:
    "`(sum w)^2 / sum w^2`; equals N for uniform weights."
    w = np.asarray(weights, dtype=float)
    ess = w.sum(axis=-1) ** 2 / (w**2).sum(axis=-1)
    return float(ess) if np.ndim(ess) == 0 else ess

# %% ../../nbs/estimation/quantile.ipynb 8
def resampled_quantile(
    model: Union[ModelSpec, Callable[[np.ndarray], np.ndarray]],
    input_specs: Sequence[DistributionSpec],
    i: int,
    perturbed,  # DistributionSpec or a law exposing `sample(seed, n)`
    N: int,
    alpha: float,
    seed: int,
) -> float:
    "Direct estimate: fresh sample of size `N` with input `i` drawn from the perturbed law."
    inputs = draw_inputs(input_specs, N, seed, overrides={i: perturbed})
    return empirical_quantile(evaluate(model, inputs), alpha)
