"""Pick-freeze Sobol indices of the output and of its threshold exceedance."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/sensitivity/sobol.ipynb.

# %% auto 0
__all__ = ['SobolResult', 'pick_freeze_outputs', 'sobol_pick_freeze', 'sobol_target', 'sobol_indices']

# %% ../../nbs/sensitivity/sobol.ipynb 2
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from absl import logging
from einops import rearrange
from SALib.analyze import sobol as salib_sobol
from scipy.stats import norm

from ..distributions.families import DistributionSpec
from ..estimation.quantile import empirical_quantile
from ..models.analytic import ModelSpec, evaluate
from ..models.sample import draw_inputs
from ..utils.errors import DomainError
from ..utils.parallel import derive_seed

# %% ../../nbs/sensitivity/sobol.ipynb 3
@dataclass(frozen=True)
class SobolResult:
    """
    First-order and total indices of `Y` and of `1(Y > threshold)`.
    Standard errors are bootstrap estimates over the design rows.
    Fields of a variant that was not computed hold NaN.
    """

    input_names: Tuple[str, ...]
    first_order: np.ndarray
    total: np.ndarray
    target_first_order: np.ndarray
    target_total: np.ndarray
    se_first_order: np.ndarray
    se_total: np.ndarray
    se_target_first_order: np.ndarray
    se_target_total: np.ndarray
    N_base: int
    threshold: Optional[float] = None

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "input": list(self.input_names),
                "first_order": self.first_order,
                "total": self.total,
                "target_first_order": self.target_first_order,
                "target_total": self.target_total,
                "se_first_order": self.se_first_order,
                "se_total": self.se_total,
                "se_target_first_order": self.se_target_first_order,
                "se_target_total": self.se_target_total,
            }
        )

# %% ../../nbs/sensitivity/sobol.ipynb 4
def pick_freeze_outputs(
    model: Union[ModelSpec, Callable[[np.ndarray], np.ndarray]],
    input_specs: Sequence[DistributionSpec],
    N_base: int,
    seed: int,
) -> np.ndarray:
    """
    Model outputs on the pick-freeze designs, shape `(N_base, d + 2)`.

    Column 0 is `y_A`, column `d + 1` is `y_B` and column `1 + j` evaluates `A`
    with column `j` taken from `B`. Costs `(d + 2) N_base` runs.
    """
    if N_base < 2:
        raise DomainError(f"N_base must be at least 2, got {N_base}")
    d = len(input_specs)
    A = draw_inputs(input_specs, N_base, derive_seed(seed, 0))
    B = draw_inputs(input_specs, N_base, derive_seed(seed, 1))
    blocks = np.repeat(A[:, None, :], d + 2, axis=1)
    blocks[:, -1] = B
    for j in range(d):
        blocks[:, 1 + j, j] = B[:, j]
    outputs = evaluate(model, rearrange(blocks, "n k d -> (n k) d"))
    return rearrange(outputs, "(n k) -> n k", k=d + 2)


def _analyze(outputs: np.ndarray, names: Sequence[str], seed: int) -> Tuple[np.ndarray, ...]:
    "(first order, total, their standard errors) from `(N_base, d + 2)` outputs."
    d = outputs.shape[1] - 2
    y = np.concatenate([outputs[:, 0], outputs[:, -1]])
    if np.ptp(y) == 0:
        logging.warning("output variance is zero; Sobol indices set to 0")
        zeros = np.zeros(d)
        return zeros, zeros, zeros, zeros
    problem = {
        "num_vars": d,
        "names": list(names),
        "bounds": [[0.0, 1.0]] * d,  # unused by the estimator
    }
    result = salib_sobol.analyze(
        problem,
        rearrange(outputs, "n k -> (n k)"),
        calc_second_order=False,
        conf_level=0.95,
        seed=derive_seed(seed, 2) % (2**32 - 1) + 1,
    )
    z = norm.ppf(0.975)
    return (
        np.asarray(result["S1"], dtype=float),
        np.asarray(result["ST"], dtype=float),
        np.asarray(result["S1_conf"], dtype=float) / z,
        np.asarray(result["ST_conf"], dtype=float) / z,
    )


def _names(model, input_specs) -> Tuple[str, ...]:
    if isinstance(model, ModelSpec):
        return model.input_names
    return tuple(f"x{j + 1}" for j in range(len(input_specs)))


def _nan(d: int) -> np.ndarray:
    return np.full(d, np.nan)

# %% ../../nbs/sensitivity/sobol.ipynb 5
def sobol_pick_freeze(
    model: Union[ModelSpec, Callable[[np.ndarray], np.ndarray]],
    input_specs: Sequence[DistributionSpec],
    N_base: int = 100_000,
    seed: int = 0,
) -> SobolResult:
    "First-order and total indices of the model output."
    names = _names(model, input_specs)
    S1, ST, se1, seT = _analyze(pick_freeze_outputs(model, input_specs, N_base, seed), names, seed)
    d = len(names)
    return SobolResult(names, S1, ST, _nan(d), _nan(d), se1, seT, _nan(d), _nan(d), N_base)


def sobol_target(
    model: Union[ModelSpec, Callable[[np.ndarray], np.ndarray]],
    input_specs: Sequence[DistributionSpec],
    N_base: int = 100_000,
    threshold: float = 0.0,
    seed: int = 0,
) -> SobolResult:
    "Indices of the exceedance indicator `1(Y > threshold)`."
    if not np.isfinite(threshold):
        raise DomainError(f"threshold must be finite, got {threshold}")
    names = _names(model, input_specs)
    outputs = pick_freeze_outputs(model, input_specs, N_base, seed)
    S1, ST, se1, seT = _analyze((outputs > threshold).astype(float), names, seed)
    d = len(names)
    return SobolResult(names, _nan(d), _nan(d), S1, ST, _nan(d), _nan(d), se1, seT, N_base, float(threshold))


def sobol_indices(
    model: Union[ModelSpec, Callable[[np.ndarray], np.ndarray]],
    input_specs: Sequence[DistributionSpec],
    N_base: int = 100_000,
    seed: int = 0,
    threshold_alpha: float = 0.95,  # target threshold is this quantile of y_A
    threshold: Optional[float] = None,  # explicit threshold, overrides `threshold_alpha`
) -> SobolResult:
    "Both variants on shared designs."
    names = _names(model, input_specs)
    outputs = pick_freeze_outputs(model, input_specs, N_base, seed)
    if threshold is None:
        threshold = empirical_quantile(outputs[:, 0], threshold_alpha)
    S1, ST, se1, seT = _analyze(outputs, names, seed)
    tS1, tST, tse1, tseT = _analyze((outputs > threshold).astype(float), names, seed)
    logging.info(
        f"Sobol indices with N_base={N_base}: first order {np.round(S1, 3).tolist()}, total {np.round(ST, 3).tolist()}"
    )
    return SobolResult(names, S1, ST, tS1, tST, se1, seT, tse1, tseT, N_base, float(threshold))
