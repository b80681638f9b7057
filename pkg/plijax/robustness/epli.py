"""Standard-space perturbations: mean shift after the Gaussian iso-probabilistic transform, and Gaussian variance scaling."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/robustness/epli.ipynb.

# %% auto 0
__all__ = ['EpliMode', 'StandardSpaceShift', 'epli_perturbed_density', 'variance_perturbation', 'kl_curve', 'EpliCurve',
           'epli_curve']

# %% ../../nbs/robustness/epli.ipynb 2
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from absl import logging
from scipy.special import ndtr, ndtri

from ..distributions.divergence import kl_divergence
from ..distributions.families import (
    GAUSSIAN_FAMILIES,
    DistributionSpec,
    FamilyTag,
    cdf,
    integration_bounds,
    inverse_cdf,
    pdf,
    sample,
    sf,
)
from ..estimation.iosample import IOSample
from ..estimation.quantile import Direction, admissible, empirical_quantile, exceed_count
from ..models.analytic import ModelSpec, evaluate
from ..models.sample import draw_inputs
from ..utils.errors import DomainError, UnsupportedFamilyError
from ..utils.parallel import derive_seed, progress
from .index import baseline_quantile, pli_detail

# %% ../../nbs/robustness/epli.ipynb 3
class EpliMode(str, Enum):
    MeanShift = "mean_shift"
    VarianceScale = "variance_scale"

# %% ../../nbs/robustness/epli.ipynb 4
@dataclass(frozen=True)
class StandardSpaceShift:
    """
    Law of `F^-1(Phi(Z + delta))` with `Z ~ N(0, 1)`, i.e. the density
    `exp((-delta^2 + 2 delta Phi^-1(F(x))) / 2) f(x)`. A Gaussian law becomes `N(mu + delta sigma, sigma^2)`.
    """

    spec: DistributionSpec
    delta: float

    @property
    def support(self) -> Tuple[float, float]:
        return self.spec.support

    def integration_bounds(self) -> Tuple[float, float]:
        return integration_bounds(self.spec)

    def standard_score(self, x) -> np.ndarray:
        "`Phi^-1(F(x))`, from the lower or upper tail for accuracy; infinite at the support ends."
        u, s = np.asarray(cdf(self.spec, x)), np.asarray(sf(self.spec, x))
        return np.where(u < 0.5, ndtri(u), -ndtri(s))

    def log_likelihood_ratio(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.delta == 0:
            return np.zeros_like(x)
        return self.delta * self.standard_score(x) - 0.5 * self.delta**2

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        if self.delta == 0:
            return pdf(self.spec, x)
        z = self.standard_score(x)
        with np.errstate(over="ignore", invalid="ignore"):
            out = pdf(self.spec, x) * np.exp(self.delta * z - 0.5 * self.delta**2)
        # Phi^-1 is infinite where F is 0 or 1; the density is taken as 0 there
        return np.where(np.isfinite(z), out, 0.0)

    def logpdf(self, x):
        with np.errstate(divide="ignore"):
            return np.log(self.pdf(x))

    def sample(self, rng_seed: int, n: int) -> np.ndarray:
        "Inverse transform of the same uniforms `families.sample` uses, so `delta = 0` reproduces it."
        if self.delta == 0:
            return sample(self.spec, rng_seed, n)
        u = np.random.default_rng(rng_seed).random(n)
        return inverse_cdf(self.spec, ndtr(ndtri(u) + self.delta))


def epli_perturbed_density(spec: DistributionSpec, delta: float) -> StandardSpaceShift:
    return StandardSpaceShift(spec, float(delta))


def variance_perturbation(spec: DistributionSpec, ratio: float) -> DistributionSpec:
    "Gaussian law with its variance multiplied by `ratio`, mean and support unchanged."
    if spec.family not in GAUSSIAN_FAMILIES:
        raise UnsupportedFamilyError(f"variance perturbation needs a Gaussian input, got {spec.family.value}")
    if not ratio > 0:
        raise DomainError(f"variance ratio must be positive, got {ratio}")
    mu, scale = spec.theta
    if spec.family == FamilyTag.NormalVariance:
        return spec.with_theta((mu, scale * ratio))
    return spec.with_theta((mu, scale * np.sqrt(ratio)))


def kl_curve(
    spec: DistributionSpec,
    deltas: Sequence[float],
    n_points: int = 2001,
) -> np.ndarray:
    "`KL(standard-space shift of delta || spec)` along `deltas`."
    return np.array([kl_divergence(StandardSpaceShift(spec, float(d)), spec, n_points) for d in deltas])

# %% ../../nbs/robustness/epli.ipynb 5
@dataclass(frozen=True)
class EpliCurve:
    input_index: int
    input_name: str
    mode: EpliMode
    parameters: np.ndarray
    pli: np.ndarray
    admissible: np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "input": self.input_name,
                "mode": self.mode.value,
                "parameter": self.parameters,
                "pli": self.pli,
                "admissible": self.admissible,
            }
        )


def _perturbed_law(spec: DistributionSpec, mode: EpliMode, value: float):
    if mode == EpliMode.MeanShift:
        return StandardSpaceShift(spec, float(value))
    return variance_perturbation(spec, float(value))


def _is_identity(mode: EpliMode, value: float) -> bool:
    return value == (0.0 if mode == EpliMode.MeanShift else 1.0)


def epli_curve(
    s: IOSample,
    i: int,  # input index
    parameter_grid: Sequence[float],  # mean shifts, or variance ratios
    alpha: float,
    mode: Union[str, EpliMode] = EpliMode.MeanShift,
    model: Optional[Union[ModelSpec, Callable]] = None,  # given: direct resampling instead of reverse IS
    seed: Optional[int] = None,  # seeds the fresh samples of direct resampling
) -> EpliCurve:
    "Index along a grid of standard-space mean shifts or Gaussian variance ratios."
    mode = EpliMode(mode)
    spec = s.input_specs[i]
    if mode == EpliMode.VarianceScale and spec.family not in GAUSSIAN_FAMILIES:
        raise UnsupportedFamilyError(f"variance perturbation needs a Gaussian input, got {spec.family.value}")
    if model is not None and seed is None:
        raise DomainError("direct resampling needs a seed")

    q = baseline_quantile(s.outputs, alpha)
    direction = Direction.for_alpha(alpha)
    values, flags = [], []
    for g, value in enumerate(progress(parameter_grid, f"E-PLI {s.input_names[i]}")):
        if _is_identity(mode, value):
            values.append(0.0)
            flags.append(admissible(exceed_count(s.outputs, q, direction), alpha, direction))
            continue
        law = _perturbed_law(spec, mode, value)
        if model is None:
            detail = pli_detail(s, i, law, alpha)
            values.append(detail.pli)
            flags.append(detail.admissible)
        else:
            inputs = draw_inputs(s.input_specs, s.N, derive_seed(seed, i, g), overrides={i: law})
            outputs = evaluate(model, inputs)
            q_perturbed = empirical_quantile(outputs, alpha)
            values.append((q_perturbed - q) / q)
            flags.append(admissible(exceed_count(outputs, q_perturbed, direction), alpha, direction))
    logging.info(f"E-PLI ({mode.value}) of input {s.input_names[i]} over {len(values)} grid points")
    return EpliCurve(i, s.input_names[i], mode, np.asarray(parameter_grid, dtype=float), np.array(values), np.array(flags))
