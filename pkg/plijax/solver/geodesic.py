"""Fixed-step integration of Hamilton's equations for Fisher-Rao geodesics."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/solver/geodesic.ipynb.

# %% auto 0
__all__ = ['Integrator', 'PathStatus', 'GeodesicPath', 'HamiltonianSystem', 'get_system', 'integrate_geodesic',
           'hamiltonian_drift', 'path_length', 'path_energy', 'drift_convergence']

# %% ../../nbs/solver/geodesic.ipynb 2
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, partial
from typing import Optional, Tuple, Union

import jax
import jax.numpy as jnp
import numpy as np
import pandas as pd
from absl import logging
from einops import rearrange

from ..distributions.families import DistributionSpec, domain_check
from ..distributions.fisher import make_metric, make_metric_gradient
from ..utils.errors import DomainError, UnsupportedFamilyError

jax.config.update("jax_enable_x64", True)

# %% ../../nbs/solver/geodesic.ipynb 3
class Integrator(str, Enum):
    Euler = "euler"
    AdamsMoulton = "adams_moulton"

    @classmethod
    def parse(cls, name: Union[str, "Integrator"]) -> "Integrator":
        if isinstance(name, cls):
            return name
        for member in cls:
            if name in (member.value, member.name):
                return member
        raise DomainError(f"unknown integrator {name!r}, expected 'euler' or 'adams_moulton'")


class PathStatus(str, Enum):
    Complete = "complete"
    TruncatedAtBoundary = "truncated_at_boundary"
    Failed = "failed"

# %% ../../nbs/solver/geodesic.ipynb 4
@dataclass(frozen=True)
class GeodesicPath:
    "Discretised solution of Hamilton's equations; arrays hold the valid steps only."

    center: DistributionSpec
    t: np.ndarray  # (n,) times in [0, 1]
    q: np.ndarray  # (n, r) positions on the parameter manifold
    p: np.ndarray  # (n, r) momenta
    H: np.ndarray  # (n,) Hamiltonian
    status: PathStatus
    t_exit: Optional[float] = None  # first time outside the parameter domain

    @property
    def drift(self) -> np.ndarray:
        "Relative Hamiltonian variation `(H(t) - H(0)) / H(0)`."
        if self.H[0] == 0:
            return np.zeros_like(self.H)
        return (self.H - self.H[0]) / self.H[0]

    @property
    def max_drift(self) -> float:
        return float(np.abs(self.drift).max())

    @property
    def endpoint(self) -> DistributionSpec:
        return self.center.with_theta(self.q[-1])

    def to_frame(self) -> pd.DataFrame:
        r = self.q.shape[1]
        columns = {"t": self.t}
        columns.update({f"q{j + 1}": self.q[:, j] for j in range(r)})
        columns.update({f"p{j + 1}": self.p[:, j] for j in range(r)})
        columns.update({"H": self.H, "delta_H": self.drift})
        return pd.DataFrame(columns)

# %% ../../nbs/solver/geodesic.ipynb 5
class HamiltonianSystem:
    """
    Geodesic flow of the Fisher metric around a center distribution.

    With `H(q, p) = 1/2 p^T I(q)^-1 p` the equations are `dq/dt = I^-1 p` and
    `dp_j/dt = 1/2 p^T I^-1 (dI/dq_j) I^-1 p`. The family, support and (for quadrature
    families) the integration rule are frozen at the center.
    """

    def __init__(
        self,
        center: DistributionSpec,
        rtol: float = 1e-8,  # quadrature tolerance of the metric
        step: float = 1e-4,  # relative finite-difference step of the metric gradient
    ):
        if not center.has_fisher_structure:
            raise UnsupportedFamilyError(f"{center.family.value} has no Fisher structure")
        self.center = center
        self.r = center.r
        self.metric = make_metric(center, rtol)
        self.metric_gradient = make_metric_gradient(center, self.metric, step)
        self.inside = domain_check(center.family, center.support)
        self.batched_metric = jax.jit(jax.vmap(self.metric))
        self._solvers = {}

    def hamiltonian(self, q, p):
        return 0.5 * p @ jnp.linalg.solve(self.metric(q), p)

    def vector_field(self, y):
        q, p = y[: self.r], y[self.r :]
        v = jnp.linalg.solve(self.metric(q), p)
        dp = 0.5 * jnp.einsum("i,jik,k->j", v, self.metric_gradient(q), v)
        return jnp.concatenate([v, dp])

    def healthy(self, y):
        "Finite state with a positive definite metric."
        chol = jnp.linalg.cholesky(self.metric(y[: self.r]))
        return jnp.all(jnp.isfinite(y)) & jnp.all(jnp.isfinite(chol))

    def _euler(self, y0, h, n_steps):
        def step(y, _):
            y1 = y + h * self.vector_field(y)
            return y1, y1

        _, ys = jax.lax.scan(step, y0, None, length=n_steps)
        return ys

    def _adams_moulton(self, y0, h, n_steps):
        f = self.vector_field
        f0 = f(y0)
        # one classical Runge-Kutta step provides the second starting value
        k2 = f(y0 + 0.5 * h * f0)
        k3 = f(y0 + 0.5 * h * k2)
        k4 = f(y0 + h * k3)
        y1 = y0 + h / 6.0 * (f0 + 2 * k2 + 2 * k3 + k4)

        def step(carry, _):
            y, fy, f_prev = carry
            predicted = y + h * (1.5 * fy - 0.5 * f_prev)
            corrected = y + 0.5 * h * (fy + f(predicted))
            return (corrected, f(corrected), fy), corrected

        _, ys = jax.lax.scan(step, (y1, f(y1), f0), None, length=n_steps - 1)
        return jnp.concatenate([y1[None], ys])

    def _solve(self, q0, p0, method: Integrator, n_steps: int):
        y0 = jnp.concatenate([q0, p0])
        h = 1.0 / n_steps
        if method == Integrator.Euler:
            ys = self._euler(y0, h, n_steps)
        else:
            ys = self._adams_moulton(y0, h, n_steps)
        ys = jnp.concatenate([y0[None], ys])
        H = jax.vmap(lambda y: self.hamiltonian(y[: self.r], y[self.r :]))(ys)
        inside = jax.vmap(lambda y: self.inside(y[: self.r]))(ys)
        healthy = jax.vmap(self.healthy)(ys)
        return ys, H, inside, healthy

    def solver(self, method: Integrator, n_steps: int):
        "Compiled integrator over a batch of initial momenta sharing `q(0) = center`."
        key = (method, n_steps)
        if key not in self._solvers:
            solve = partial(self._solve, method=method, n_steps=n_steps)
            self._solvers[key] = jax.jit(jax.vmap(solve, in_axes=(None, 0)))
        return self._solvers[key]

    def integrate(
        self,
        momenta: np.ndarray,  # (K, r) initial momenta
        method: Union[str, Integrator] = Integrator.AdamsMoulton,
        n_steps: int = 1000,
    ) -> Tuple[GeodesicPath, ...]:
        method = Integrator.parse(method)
        if n_steps < 10:
            raise DomainError(f"n_steps must be at least 10, got {n_steps}")
        momenta = np.atleast_2d(np.asarray(momenta, dtype=float))
        if momenta.shape[1] != self.r or not np.all(np.isfinite(momenta)):
            raise DomainError(f"initial momenta must be finite with {self.r} columns, got shape {momenta.shape}")
        q0 = jnp.asarray(self.center.theta)
        ys, H, inside, healthy = jax.device_get(self.solver(method, n_steps)(q0, jnp.asarray(momenta)))
        t = np.linspace(0.0, 1.0, n_steps + 1)
        return tuple(
            self._to_path(t, ys[k], H[k], inside[k], healthy[k]) for k in range(momenta.shape[0])
        )

    def _to_path(self, t, ys, H, inside, healthy) -> GeodesicPath:
        q, p = ys[:, : self.r], ys[:, self.r :]
        bad = ~(inside & healthy)
        if not bad.any():
            return GeodesicPath(self.center, t, q, p, H, PathStatus.Complete)
        k = int(np.argmax(bad))
        assert k > 0, "the center must be a valid state"
        if np.all(np.isfinite(ys[k])) and not inside[k]:
            status, t_exit = PathStatus.TruncatedAtBoundary, float(t[k])
        else:
            status, t_exit = PathStatus.Failed, None
        logging.debug(f"geodesic from {self.center} stopped at t={t[k]:.4f}: {status.value}")
        return GeodesicPath(self.center, t[:k], q[:k], p[:k], H[:k], status, t_exit)


@lru_cache(maxsize=64)
def get_system(center: DistributionSpec) -> HamiltonianSystem:
    "Shared system per center so compiled integrators are reused across radii."
    return HamiltonianSystem(center)

# %% ../../nbs/solver/geodesic.ipynb 6
def integrate_geodesic(
    center: DistributionSpec,
    p0,  # initial momentum, r-vector
    method: Union[str, Integrator] = Integrator.AdamsMoulton,
    n_steps: int = 1000,
) -> GeodesicPath:
    "Geodesic on [0, 1] from `center` with initial momentum `p0`."
    return get_system(center).integrate(np.asarray(p0, dtype=float)[None], method, n_steps)[0]


def hamiltonian_drift(path: GeodesicPath) -> float:
    return path.max_drift


def _segment_norms(path: GeodesicPath) -> np.ndarray:
    "Squared metric norm of every step, metric averaged over the step ends."
    I = np.asarray(get_system(path.center).batched_metric(jnp.asarray(path.q)))
    I_mid = 0.5 * (I[1:] + I[:-1])
    dq = rearrange(np.diff(path.q, axis=0), "n r -> n r 1")
    return rearrange(np.swapaxes(dq, 1, 2) @ I_mid @ dq, "n 1 1 -> n")


def path_length(path: GeodesicPath) -> float:
    "Fisher length of the discretised path (trapezoid rule for the metric on every step)."
    if len(path.t) < 2:
        return 0.0
    return float(np.sqrt(np.maximum(_segment_norms(path), 0.0)).sum())


def path_energy(path: GeodesicPath) -> float:
    "`1/2 int qdot^T I(q) qdot dt` with finite-difference velocities."
    if len(path.t) < 2:
        return 0.0
    dt = np.diff(path.t)
    return float(0.5 * (_segment_norms(path) / dt).sum())


def drift_convergence(
    center: DistributionSpec,
    p0,
    method: Union[str, Integrator] = Integrator.AdamsMoulton,
    n_steps: int = 1000,
) -> Tuple[float, float, float]:
    "Max drift at `n_steps`, at `2 * n_steps`, and their ratio (about 2 for Euler, 4 for Adams-Moulton)."
    coarse = hamiltonian_drift(integrate_geodesic(center, p0, method, n_steps))
    fine = hamiltonian_drift(integrate_geodesic(center, p0, method, 2 * n_steps))
    ratio = coarse / fine if fine > 0 else float("inf")
    logging.info(f"drift {coarse:.3e} at {n_steps} steps, {fine:.3e} at {2 * n_steps} steps, ratio {ratio:.2f}")
    return coarse, fine, ratio
