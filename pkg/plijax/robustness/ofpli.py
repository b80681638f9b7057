"""OF-PLI: extreme perturbed-law indices over Fisher spheres of growing radius."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/robustness/ofpli.ipynb.

# %% auto 0
__all__ = ['EstimatorMode', 'DeltaLevel', 'ofpli_at_delta', 'PliCurve', 'ofpli_curve']

# %% ../../nbs/robustness/ofpli.ipynb 2
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from absl import logging

from ..distributions.families import DistributionSpec
from ..estimation.bootstrap import bootstrap
from ..estimation.iosample import IOSample
from ..estimation.quantile import (
    MIN_EXCEED,
    Direction,
    effective_sample_size,
    likelihood_ratios,
    weighted_quantiles,
)
from ..models.analytic import ModelSpec, evaluate
from ..models.sample import draw_inputs
from ..solver.geodesic import Integrator
from ..solver.sphere import fisher_sphere
from ..utils.errors import DomainError, UnsupportedFamilyError
from ..utils.parallel import derive_seed, parallel_map, progress
from .index import baseline_quantile

# %% ../../nbs/robustness/ofpli.ipynb 3
class EstimatorMode(str, Enum):
    ReverseIS = "reverse_is"
    Resample = "resample"


def _exceed_counts(outputs: np.ndarray, quantiles: np.ndarray, direction: Direction) -> np.ndarray:
    "Row-wise `exceed_count`; `outputs` is (N,) or (n, N)."
    y = np.atleast_2d(outputs)
    q = np.asarray(quantiles)[:, None]
    return ((y > q) if direction == Direction.Upper else (y < q)).sum(axis=1)


def _order_statistics(outputs: np.ndarray, alpha: float) -> np.ndarray:
    "Row-wise `empirical_quantile` of an (n, N) matrix."
    n = outputs.shape[1]
    k = min(max(math.ceil(alpha * n), 1), n)
    return np.partition(outputs, k - 1, axis=1)[:, k - 1]

# %% ../../nbs/robustness/ofpli.ipynb 4
@dataclass(frozen=True)
class DeltaLevel:
    "Index of every valid point of one Fisher sphere."

    delta: float
    direction_indices: np.ndarray  # (n,) sphere direction of each point, -1 for the center itself
    points: Tuple[DistributionSpec, ...]
    values: np.ndarray  # (n,)
    exceed_counts: np.ndarray  # (n,) sample points beyond each perturbed quantile
    ess: np.ndarray  # (n,) effective sample size, N under direct resampling
    max_drift: float = 0.0
    per_point: Optional[np.ndarray] = None  # (n, N) likelihood ratios or resampled outputs

    @property
    def point_admissible(self) -> np.ndarray:
        return self.exceed_counts >= MIN_EXCEED

    @property
    def admissible(self) -> bool:
        "One inadmissible point invalidates the whole level."
        return bool(self.point_admissible.all())

    @property
    def n_valid(self) -> int:
        return len(self.points)

    @property
    def selection(self) -> np.ndarray:
        "Points entering the max and min: the admissible ones, or all of them when none is."
        ok = self.point_admissible
        return ok if ok.any() else np.ones_like(ok)

    def _extreme(self, pick) -> int:
        candidates = np.flatnonzero(self.selection)
        return int(candidates[pick(self.values[candidates])])

    @property
    def s_plus(self) -> float:
        return float(self.values[self._extreme(np.argmax)])

    @property
    def s_minus(self) -> float:
        return float(self.values[self._extreme(np.argmin)])

    @property
    def argmax_spec(self) -> DistributionSpec:
        return self.points[self._extreme(np.argmax)]

    @property
    def argmin_spec(self) -> DistributionSpec:
        return self.points[self._extreme(np.argmin)]


def ofpli_at_delta(
    s: IOSample,
    i: int,  # input index
    delta: float,  # Fisher radius, 0 gives the nominal law alone
    alpha: float,
    K: int = 100,  # sphere directions
    method: Union[str, Integrator] = Integrator.AdamsMoulton,
    n_steps: int = 1000,
    model: Optional[Union[ModelSpec, Callable]] = None,  # given: direct resampling instead of reverse IS
    seed: int = 0,  # direct resampling: point k of level g is drawn with seed (seed, i, g, k)
    level: int = 0,
    n_jobs: Optional[int] = None,
) -> DeltaLevel:
    "Index of every valid point on the Fisher sphere of radius `delta` around input `i`."
    spec = s.input_specs[i]
    if not spec.has_fisher_structure:
        raise UnsupportedFamilyError(f"input {s.input_names[i]} ({spec.family.value}) has no Fisher structure")
    if not delta >= 0:
        raise DomainError(f"delta must be non-negative, got {delta}")
    q = baseline_quantile(s.outputs, alpha)
    direction = Direction.for_alpha(alpha)

    if delta == 0:
        counts = _exceed_counts(s.outputs, np.array([q]), direction)
        return DeltaLevel(0.0, np.array([-1]), (spec,), np.zeros(1), counts, np.array([float(s.N)]))

    sphere = fisher_sphere(spec, delta, K, method, n_steps)
    points, indices = sphere.points, sphere.valid_indices
    if model is None:
        per_point = np.stack([likelihood_ratios(s, i, point) for point in points])
        quantiles = weighted_quantiles(s.outputs, per_point, alpha)
        counts = _exceed_counts(s.outputs, quantiles, direction)
        ess = np.atleast_1d(effective_sample_size(per_point))
    else:

        def run(k: int) -> np.ndarray:
            inputs = draw_inputs(s.input_specs, s.N, derive_seed(seed, i, level, int(indices[k])), {i: points[k]})
            return evaluate(model, inputs)

        per_point = np.stack(parallel_map(run, range(len(points)), n_jobs))
        quantiles = _order_statistics(per_point, alpha)
        counts = _exceed_counts(per_point, quantiles, direction)
        ess = np.full(len(points), float(s.N))

    result = DeltaLevel(
        float(delta), indices, points, (quantiles - q) / q, counts, ess, sphere.max_drift, per_point
    )
    logging.debug(
        f"input {s.input_names[i]}, delta={delta:g}: S+={result.s_plus:.4f} S-={result.s_minus:.4f} "
        f"over {result.n_valid} points, admissible={result.admissible}"
    )
    return result

# %% ../../nbs/robustness/ofpli.ipynb 5
def _bootstrap_statistic(level: DeltaLevel, alpha: float, mode: EstimatorMode):
    "(S+, S-) on a row resample, over the same sphere points."
    per_point = level.per_point[level.selection]

    def statistic(replicate: IOSample) -> np.ndarray:
        q = baseline_quantile(replicate.outputs, alpha)
        if mode == EstimatorMode.ReverseIS:
            quantiles = weighted_quantiles(replicate.outputs, per_point[:, replicate.rows], alpha)
        else:
            quantiles = _order_statistics(per_point[:, replicate.rows], alpha)
        values = (quantiles - q) / q
        return np.array([values.max(), values.min()])

    return statistic


@dataclass(frozen=True)
class PliCurve:
    input_index: int
    input_name: str
    alpha: float
    mode: EstimatorMode
    levels: Tuple[DeltaLevel, ...]
    ci_plus: np.ndarray  # (n_delta, 2) bootstrap 95% interval of S+
    ci_minus: np.ndarray  # (n_delta, 2)

    @property
    def deltas(self) -> np.ndarray:
        return np.array([level.delta for level in self.levels])

    @property
    def s_plus(self) -> np.ndarray:
        return np.array([level.s_plus for level in self.levels])

    @property
    def s_minus(self) -> np.ndarray:
        return np.array([level.s_minus for level in self.levels])

    @property
    def n_valid(self) -> np.ndarray:
        return np.array([level.n_valid for level in self.levels], dtype=int)

    @property
    def admissible(self) -> np.ndarray:
        "Monotone cutoff: a level is admissible only if every smaller level is."
        flags = np.array([level.admissible for level in self.levels], dtype=bool)
        return np.logical_and.accumulate(flags) if flags.size else flags

    @property
    def delta_max(self) -> Optional[float]:
        "Largest admissible radius of the grid."
        admissible = np.flatnonzero(self.admissible)
        return float(self.deltas[admissible[-1]]) if admissible.size else None

    def to_frame(self) -> pd.DataFrame:
        ci_plus = self.ci_plus.reshape(-1, 2)
        ci_minus = self.ci_minus.reshape(-1, 2)
        return pd.DataFrame(
            {
                "input": self.input_name,
                "delta": self.deltas,
                "s_plus": self.s_plus,
                "s_minus": self.s_minus,
                "ci_lo_plus": ci_plus[:, 0],
                "ci_hi_plus": ci_plus[:, 1],
                "ci_lo_minus": ci_minus[:, 0],
                "ci_hi_minus": ci_minus[:, 1],
                "admissible": self.admissible,
                "n_valid": self.n_valid,
            }
        )

    def sphere_frame(self) -> pd.DataFrame:
        "One row per sphere point and radius, for plotting the index over the sphere."
        frames = []
        for level in self.levels:
            thetas = np.array([point.theta for point in level.points], dtype=float)
            columns = {"input": self.input_name, "delta": level.delta, "direction_index": level.direction_indices}
            columns.update({f"theta{j + 1}": thetas[:, j] for j in range(thetas.shape[1])})
            columns.update({"S": level.values, "admissible": level.point_admissible, "ess": level.ess})
            frames.append(pd.DataFrame(columns))
        if not frames:
            return pd.DataFrame(columns=["input", "delta", "direction_index", "S", "admissible", "ess"])
        return pd.concat(frames, ignore_index=True)


def ofpli_curve(
    s: IOSample,
    i: int,
    deltas: Sequence[float],  # increasing, non-negative
    alpha: float,
    K: int = 100,
    B: int = 200,  # bootstrap replicates per radius, 0 skips the intervals
    method: Union[str, Integrator] = Integrator.AdamsMoulton,
    n_steps: int = 1000,
    model: Optional[Union[ModelSpec, Callable]] = None,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> PliCurve:
    "`ofpli_at_delta` along a grid of radii, with bootstrap intervals and the admissibility cutoff."
    grid = np.asarray(deltas, dtype=float).reshape(-1)
    if np.any(grid < 0) or np.any(np.diff(grid) <= 0):
        raise DomainError(f"delta grid must be increasing and non-negative, got {grid.tolist()}")
    mode = EstimatorMode.ReverseIS if model is None else EstimatorMode.Resample
    name = s.input_names[i]
    if grid.size == 0:
        logging.warning(f"empty delta grid for input {name}")

    base = replace(s, rows=None)  # positional row ids index the per-point arrays
    levels, ci_plus, ci_minus = [], [], []
    cut = False
    for g, delta in enumerate(progress(grid, f"OF-PLI {name}")):
        level = ofpli_at_delta(s, i, float(delta), alpha, K, method, n_steps, model, seed, g, n_jobs)
        if B > 0 and level.per_point is not None:
            result = bootstrap(base, _bootstrap_statistic(level, alpha, mode), B, derive_seed(seed, i, g), n_jobs)
            ci_plus.append((result.lo95[0], result.hi95[0]))
            ci_minus.append((result.lo95[1], result.hi95[1]))
        else:
            ci_plus.append((level.s_plus, level.s_plus))
            ci_minus.append((level.s_minus, level.s_minus))
        if not level.admissible and not cut:
            logging.info(f"input {name}: admissibility lost at delta={delta:g}")
            cut = True
        levels.append(replace(level, per_point=None))

    curve = PliCurve(
        i, name, alpha, mode, tuple(levels), np.array(ci_plus).reshape(-1, 2), np.array(ci_minus).reshape(-1, 2)
    )
    logging.info(f"OF-PLI of input {name} over {grid.size} radii ({mode.value}): delta_max={curve.delta_max}")
    return curve
