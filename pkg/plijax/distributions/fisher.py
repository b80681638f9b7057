"""Score function, Fisher information matrix and its parameter derivatives."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/distributions/fisher.ipynb.

# %% auto 0
__all__ = ['FisherMatrix', 'score', 'quadrature_rule', 'fisher_information', 'make_metric', 'make_metric_gradient',
           'fisher_information_gradient', 'fisher_inner_product']

# %% ../../nbs/distributions/fisher.ipynb 2
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import jax
import jax.numpy as jnp
import numpy as np
from absl import logging

from ..utils.errors import DomainError, NumericalError, UnsupportedFamilyError
from .families import (
    DistributionSpec,
    FamilyTag,
    in_domain,
    integration_bounds,
    log_density,
)

jax.config.update("jax_enable_x64", True)

# %% ../../nbs/distributions/fisher.ipynb 3
@dataclass(frozen=True)
class FisherMatrix:
    matrix: np.ndarray  # r x r, symmetric
    theta_at: Tuple[float, ...]
    tolerance: Optional[float] = None  # achieved quadrature tolerance, None when analytic

    @property
    def is_positive_definite(self) -> bool:
        return bool(np.all(np.isfinite(self.matrix)) and np.linalg.eigvalsh(self.matrix).min() > 0)

    def cholesky(self) -> np.ndarray:
        "Lower triangular factor `L` with `L @ L.T == matrix`."
        if not self.is_positive_definite:
            raise NumericalError(f"Fisher information at theta={self.theta_at} is not positive definite")
        return np.linalg.cholesky(self.matrix)

    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)


def _require_fisher(spec: DistributionSpec):
    if not spec.has_fisher_structure:
        raise UnsupportedFamilyError(
            f"{spec.family.value} has no Fisher structure; its support bounds are not regular parameters"
        )

# %% ../../nbs/distributions/fisher.ipynb 4
@lru_cache(maxsize=None)
def _score_fn(family: FamilyTag, support: Tuple[float, float]):
    grad = jax.grad(lambda theta, x: log_density(family, theta, x, support))
    return jax.jit(jax.vmap(grad, in_axes=(None, 0)))


@lru_cache(maxsize=None)
def _outer_fn(family: FamilyTag, support: Tuple[float, float]):
    "Integrand `f(x) s(x) s(x)^T` evaluated on a vector of nodes."
    score_fn = jax.vmap(jax.grad(lambda theta, x: log_density(family, theta, x, support)), in_axes=(None, 0))
    density = jax.vmap(lambda theta, x: jnp.exp(log_density(family, theta, x, support)), in_axes=(None, 0))

    def outer(theta, xs):
        s = score_fn(theta, xs)
        return density(theta, xs)[:, None, None] * s[:, :, None] * s[:, None, :]

    return jax.jit(outer)


def score(
    spec: DistributionSpec,
    x,  # point(s) strictly inside the support
) -> np.ndarray:
    "Gradient of the log density in theta, truncation normaliser included."
    _require_fisher(spec)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    lo, hi = spec.support
    outside = ~((x_arr > lo) & (x_arr < hi))
    if np.any(outside):
        raise DomainError(f"score needs points inside the support ({lo}, {hi}), got {x_arr[outside][:5]}")
    fn = _score_fn(spec.family, spec.support)
    out = np.asarray(fn(jnp.asarray(spec.theta), jnp.asarray(x_arr)))
    return out[0] if np.ndim(x) == 0 else out

# %% ../../nbs/distributions/fisher.ipynb 5
def _breakpoints(spec: DistributionSpec) -> List[float]:
    lo, hi = integration_bounds(spec)
    points = [lo, hi]
    if spec.family == FamilyTag.Triangular:
        points.insert(1, spec.theta[0])
    return points


def _adaptive_panels(
    integrand: Callable[[np.ndarray], np.ndarray],  # nodes -> (n, ...) values
    breakpoints: List[float],
    rtol: float,
    order: int = 20,  # Gauss-Legendre nodes per panel
    max_panels: int = 2000,
):
    "Adaptive Gauss-Legendre: split panels until the halves agree with the whole to `rtol`."
    x, w = np.polynomial.legendre.leggauss(order)

    def rule(a, b):
        half = 0.5 * (b - a)
        return np.tensordot(half * w, np.asarray(integrand(half * x + 0.5 * (a + b))), axes=1)

    width = breakpoints[-1] - breakpoints[0]
    pending = [(a, b, rule(a, b)) for a, b in zip(breakpoints[:-1], breakpoints[1:])]
    scale = max(float(np.abs(sum(p[2] for p in pending)).max()), np.finfo(float).tiny)
    accepted, total_err = [], 0.0
    while pending:
        a, b, whole = pending.pop()
        m = 0.5 * (a + b)
        left, right = rule(a, m), rule(m, b)
        err = float(np.abs(whole - left - right).max())
        if not np.isfinite(err):
            raise NumericalError(f"non-finite integrand on [{a:.6g}, {b:.6g}]")
        if err <= rtol * scale * (b - a) / width:
            accepted += [(a, m, left), (m, b, right)]
            total_err += err
        else:
            pending += [(a, m, left), (m, b, right)]
        if len(accepted) + len(pending) > max_panels:
            raise NumericalError(
                f"adaptive quadrature did not converge within {max_panels} panels",
                tolerance=(total_err + err) / scale,
            )
    accepted.sort(key=lambda p: p[0])
    total = sum(p[2] for p in accepted)
    return [(a, b) for a, b, _ in accepted], total, total_err / scale


def quadrature_rule(
    spec: DistributionSpec,
    rtol: float = 1e-8,
    subdivisions: int = 1,  # split every adapted panel into this many equal panels
    order: int = 20,
) -> Tuple[np.ndarray, np.ndarray]:
    "Composite Gauss-Legendre nodes and weights adapted to the Fisher integrand at `spec`."
    _require_fisher(spec)
    outer = _outer_fn(spec.family, spec.support)
    theta = jnp.asarray(spec.theta)
    panels, _, _ = _adaptive_panels(lambda xs: outer(theta, jnp.asarray(xs)), _breakpoints(spec), rtol, order)
    x, w = np.polynomial.legendre.leggauss(order)
    nodes, weights = [], []
    for a, b in panels:
        edges = np.linspace(a, b, subdivisions + 1)
        for lo, hi in zip(edges[:-1], edges[1:]):
            half = 0.5 * (hi - lo)
            nodes.append(half * x + 0.5 * (lo + hi))
            weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)

# %% ../../nbs/distributions/fisher.ipynb 6
def _analytic_fim(family: FamilyTag, theta, support):
    "Closed forms, traceable; None when the family needs quadrature."
    lo, hi = support
    if family == FamilyTag.Normal:
        return jnp.diag(jnp.array([1.0, 2.0]) / theta[1] ** 2)
    if family == FamilyTag.NormalVariance:
        return jnp.diag(jnp.stack([1.0 / theta[1], 0.5 / theta[1] ** 2]))
    if family == FamilyTag.Triangular:
        m = theta[0]
        return jnp.reshape(1.0 / ((m - lo) * (hi - m)), (1, 1))
    return None


def fisher_information(
    spec: DistributionSpec,
    rtol: float = 1e-8,  # relative tolerance of the adaptive quadrature
) -> FisherMatrix:
    "Expected outer product of the score; closed form for Normal and Triangular, quadrature otherwise."
    _require_fisher(spec)
    theta = jnp.asarray(spec.theta)
    analytic = _analytic_fim(spec.family, theta, spec.support)
    if analytic is not None:
        return FisherMatrix(np.asarray(analytic), spec.theta)

    outer = _outer_fn(spec.family, spec.support)
    _, total, achieved = _adaptive_panels(lambda xs: outer(theta, jnp.asarray(xs)), _breakpoints(spec), rtol)
    matrix = 0.5 * (total + total.T)
    logging.debug(f"Fisher information of {spec}: {matrix.tolist()} (tolerance {achieved:.2e})")
    return FisherMatrix(matrix, spec.theta, achieved)

# %% ../../nbs/distributions/fisher.ipynb 7
def make_metric(
    spec: DistributionSpec,
    rtol: float = 1e-8,
    subdivisions: int = 4,  # safety margin of the frozen rule away from `spec`
) -> Callable[[jnp.ndarray], jnp.ndarray]:
    "Traceable `theta -> I(theta)` for the family and support of `spec`."
    _require_fisher(spec)
    family, support = spec.family, spec.support
    if _analytic_fim(family, jnp.asarray(spec.theta), support) is not None:
        return lambda theta: _analytic_fim(family, theta, support)

    # the rule is built once at `spec` and reused at nearby parameters
    nodes, weights = quadrature_rule(spec, rtol, subdivisions)
    nodes, weights = jnp.asarray(nodes), jnp.asarray(weights)
    outer = _outer_fn(family, support)

    def metric(theta):
        I = jnp.einsum("n,nij->ij", weights, outer(theta, nodes))
        return 0.5 * (I + I.T)

    return metric


def _central_difference(metric, theta, step: float):
    h = step * jnp.maximum(1.0, jnp.abs(theta))
    eye = jnp.eye(theta.shape[0])

    def column(e, hj):
        return (metric(theta + hj * e) - metric(theta - hj * e)) / (2.0 * hj)

    return jax.vmap(column)(eye, h)


def make_metric_gradient(
    spec: DistributionSpec,
    metric: Optional[Callable] = None,  # reuse an existing `make_metric` result
    step: float = 1e-4,  # relative finite-difference step
) -> Callable[[jnp.ndarray], jnp.ndarray]:
    "Traceable `theta -> dI/dtheta` of shape (r, r, r), index 0 being the parameter."
    family, (lo, hi) = spec.family, spec.support
    if family == FamilyTag.Normal:
        return lambda theta: jnp.stack(
            [jnp.zeros((2, 2)), jnp.diag(jnp.array([-2.0, -4.0]) / theta[1] ** 3)]
        )
    if family == FamilyTag.NormalVariance:
        return lambda theta: jnp.stack(
            [jnp.zeros((2, 2)), jnp.diag(jnp.stack([-1.0 / theta[1] ** 2, -1.0 / theta[1] ** 3]))]
        )
    if family == FamilyTag.Triangular:
        return lambda theta: jnp.reshape(
            (2 * theta[0] - lo - hi) / ((theta[0] - lo) * (hi - theta[0])) ** 2, (1, 1, 1)
        )
    metric = metric if metric is not None else make_metric(spec)
    return lambda theta: _central_difference(metric, theta, step)


def fisher_information_gradient(
    spec: DistributionSpec,
    step: float = 1e-4,  # h_j = step * max(1, |theta_j|)
) -> np.ndarray:
    "`dI/dtheta_j` for every j, shape (r, r, r); central differences except for closed-form families."
    _require_fisher(spec)
    theta = np.asarray(spec.theta)
    h = step * np.maximum(1.0, np.abs(theta))
    for j in range(spec.r):
        for sign in (-1.0, 1.0):
            shifted = theta.copy()
            shifted[j] += sign * h[j]
            if not in_domain(spec.family, shifted, spec.support):
                raise DomainError(f"finite-difference stencil leaves the parameter domain at theta={shifted.tolist()}")
    gradient = make_metric_gradient(spec, step=step)
    return np.asarray(gradient(jnp.asarray(theta)))


def fisher_inner_product(spec: DistributionSpec, u, v) -> float:
    "`u^T I(theta) v`, the local inner product of two tangent vectors."
    I = fisher_information(spec).matrix
    return float(np.asarray(u, dtype=float) @ I @ np.asarray(v, dtype=float))
