"""Fisher spheres: geodesic endpoints at a prescribed Fisher distance from a center law."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/solver/sphere.ipynb.

# %% auto 0
__all__ = ['DRIFT_TOLERANCE', 'sphere_directions', 'initial_momenta', 'screen_path', 'FisherSphere', 'fisher_sphere',
           'gaussian_fisher_distance', 'triangular_fisher_distance', 'sphere_density_table']

# %% ../../nbs/solver/sphere.ipynb 2
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np
import pandas as pd
from absl import logging

from ..distributions.families import DistributionSpec, integration_bounds, pdf
from ..distributions.fisher import fisher_information
from ..utils.errors import DomainError, SphereEmptyError, UnsupportedFamilyError
from .geodesic import GeodesicPath, Integrator, PathStatus, get_system, path_length

# %% ../../nbs/solver/sphere.ipynb 3
def sphere_directions(r: int, K: int) -> Tuple[np.ndarray, np.ndarray]:
    "Unit directions and their angles: `K` equally spaced angles for r=2, the pair +1/-1 for r=1."
    if K < 1:
        raise DomainError(f"K must be at least 1, got {K}")
    if r == 1:
        angles = np.array([0.0, math.pi])[: min(K, 2)]
        return np.cos(angles)[:, None], angles
    if r == 2:
        angles = 2 * np.pi * np.arange(K) / K
        return np.stack([np.cos(angles), np.sin(angles)], axis=1), angles
    raise UnsupportedFamilyError(f"sphere directions are implemented for r in (1, 2), got r={r}")


def initial_momenta(
    center: DistributionSpec,
    delta: float,  # Fisher radius
    K: int,  # number of directions
) -> np.ndarray:
    "`p_k = delta L u_k` with `L` the Cholesky factor of `I(center)`, so that `p^T I^-1 p = delta^2`."
    if not delta >= 0:
        raise DomainError(f"delta must be non-negative, got {delta}")
    L = fisher_information(center).cholesky()
    directions, _ = sphere_directions(center.r, K)
    return delta * directions @ L.T

# %% ../../nbs/solver/sphere.ipynb 4
# largest relative Hamiltonian drift a sphere point may carry, per integrator
DRIFT_TOLERANCE = {Integrator.Euler: 1e-2, Integrator.AdamsMoulton: 1e-3}


def screen_path(
    path: GeodesicPath,
    delta: float,  # target Fisher length
    drift_tol: float,  # largest accepted `max |H(t)/H(0) - 1|`
    length_tol: float,  # largest accepted `|length - delta| / delta`
) -> GeodesicPath:
    """
    Fail a complete geodesic whose energy or length disagrees with the radius.

    A drifting path is cut before its first step over `drift_tol`; a path that
    stays within `drift_tol` but whose measured length misses `delta` keeps its states.
    Truncated and failed paths are returned unchanged.
    """
    if path.status != PathStatus.Complete:
        return path
    over = np.flatnonzero(np.abs(path.drift) > drift_tol)
    if over.size:
        k = int(over[0])
        assert k > 0
        return replace(path, t=path.t[:k], q=path.q[:k], p=path.p[:k], H=path.H[:k], status=PathStatus.Failed)
    if abs(path_length(path) - delta) > length_tol * delta:
        return replace(path, status=PathStatus.Failed)
    return path

# %% ../../nbs/solver/sphere.ipynb 5
@dataclass(frozen=True)
class FisherSphere:
    center: DistributionSpec
    radius: float
    directions: np.ndarray  # (K, r) unit vectors
    angles: np.ndarray  # (K,)
    paths: Tuple[GeodesicPath, ...]

    @property
    def K(self) -> int:
        return len(self.paths)

    @property
    def statuses(self) -> Tuple[PathStatus, ...]:
        return tuple(path.status for path in self.paths)

    @property
    def valid(self) -> np.ndarray:
        return np.array([s == PathStatus.Complete for s in self.statuses])

    @property
    def n_valid(self) -> int:
        return int(self.valid.sum())

    @property
    def valid_indices(self) -> np.ndarray:
        return np.flatnonzero(self.valid)

    @property
    def points(self) -> Tuple[DistributionSpec, ...]:
        "Endpoints of the complete geodesics, in direction order."
        return tuple(self.paths[k].endpoint for k in self.valid_indices)

    @property
    def max_drift(self) -> float:
        return max(path.max_drift for path in self.paths)

    def measured_lengths(self) -> np.ndarray:
        return np.array([path_length(path) for path in self.paths])

    def to_frame(self) -> pd.DataFrame:
        "One row per direction; invalid directions report their last valid state."
        r = self.center.r
        thetas = np.array([path.q[-1] for path in self.paths])
        columns = {"direction_index": np.arange(self.K), "angle": self.angles}
        columns.update({f"theta{j + 1}": thetas[:, j] for j in range(r)})
        columns["status"] = [s.value for s in self.statuses]
        columns["measured_length"] = self.measured_lengths()
        return pd.DataFrame(columns)


@lru_cache(maxsize=128)
def _integrate_sphere(
    center: DistributionSpec, delta: float, K: int, method: Integrator, n_steps: int, drift_tol: float
) -> FisherSphere:
    directions, angles = sphere_directions(center.r, K)
    momenta = initial_momenta(center, delta, K)
    raw = get_system(center).integrate(momenta, method, n_steps)
    # lengths of accurate paths are within 10/n_steps of delta
    paths = tuple(screen_path(path, delta, drift_tol, 10.0 / n_steps) for path in raw)
    sphere = FisherSphere(center, delta, directions, angles, paths)

    n_truncated = sum(s == PathStatus.TruncatedAtBoundary for s in sphere.statuses)
    n_failed = sum(s == PathStatus.Failed for s in sphere.statuses)
    n_screened = sum(a.status != b.status for a, b in zip(raw, paths))
    if n_truncated or n_failed:
        logging.warning(
            f"Fisher sphere of radius {delta:g} around {center}: {n_truncated} directions truncated at the "
            f"parameter boundary, {n_failed} failed ({n_screened} over the drift or length tolerance); "
            f"{sphere.n_valid}/{sphere.K} kept"
        )
    if sphere.n_valid == 0:
        raise SphereEmptyError(f"no valid point on the Fisher sphere of radius {delta:g} around {center}")
    logging.debug(f"Fisher sphere of radius {delta:g} around {center}: max drift {sphere.max_drift:.2e}")
    return sphere


def fisher_sphere(
    center: DistributionSpec,
    delta: float,  # radius, > 0
    K: int = 100,  # number of geodesics
    method: Union[str, Integrator] = Integrator.AdamsMoulton,
    n_steps: int = 1000,
    drift_tol: Optional[float] = None,  # defaults to `DRIFT_TOLERANCE[method]`
) -> FisherSphere:
    """
    Integrate `K` geodesics from equally spaced directions.

    Only complete geodesics whose drift stays within `drift_tol` and whose
    length is `delta` up to `10 / n_steps` become sphere points; the others are
    counted as truncated or failed. Spheres are cached by their arguments.
    """
    if not delta > 0:
        raise DomainError(f"sphere radius must be positive, got {delta}")
    if K < 2:
        raise DomainError(f"a sphere needs K >= 2 directions, got {K}")
    method = Integrator.parse(method)
    if drift_tol is None:
        drift_tol = DRIFT_TOLERANCE[method]
    if not drift_tol > 0:
        raise DomainError(f"drift tolerance must be positive, got {drift_tol}")
    return _integrate_sphere(center, float(delta), int(K), method, int(n_steps), float(drift_tol))

# %% ../../nbs/solver/sphere.ipynb 6
def gaussian_fisher_distance(
    theta0: Tuple[float, float],  # (mu, sigma)
    theta1: Tuple[float, float],
) -> float:
    "Closed-form distance of `ds^2 = (dmu^2 + 2 dsigma^2) / sigma^2`, a scaled Poincare half-plane."
    (mu0, s0), (mu1, s1) = theta0, theta1
    if s0 <= 0 or s1 <= 0:
        raise DomainError(f"standard deviations must be positive, got {s0} and {s1}")
    x = ((mu1 - mu0) ** 2 / 2 + (s1 - s0) ** 2) / (2 * s0 * s1)
    # arccosh(1 + x) written to stay accurate for small x
    return math.sqrt(2) * 2 * math.asinh(math.sqrt(x / 2))


def triangular_fisher_distance(m0: float, m1: float, support: Tuple[float, float]) -> float:
    "Distance between two modes of a triangular law with fixed endpoints, where `I(m) = 1/((m-a)(b-m))`."
    a, b = support
    for m in (m0, m1):
        if not a < m < b:
            raise DomainError(f"mode {m} is outside ({a}, {b})")
    return abs(math.asin((2 * m1 - a - b) / (b - a)) - math.asin((2 * m0 - a - b) / (b - a)))


def sphere_density_table(
    sphere: FisherSphere,
    n_grid: int = 201,  # grid points over the support
) -> pd.DataFrame:
    "Long table (direction_index, x, pdf) of every valid sphere density; the center is direction -1."
    lo, hi = integration_bounds(sphere.center)
    x = np.linspace(lo, hi, n_grid)
    frames = [pd.DataFrame({"direction_index": -1, "x": x, "pdf": pdf(sphere.center, x)})]
    for k, point in zip(sphere.valid_indices, sphere.points):
        frames.append(pd.DataFrame({"direction_index": int(k), "x": x, "pdf": pdf(point, x)}))
    return pd.concat(frames, ignore_index=True)
