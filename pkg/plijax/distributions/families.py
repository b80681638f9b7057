"""Parametric input laws on fixed (truncated) supports: density, cdf, quantile, sampling and their JSON form."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/distributions/families.ipynb.

# %% auto 0
__all__ = ['FamilyTag', 'FISHER_FAMILIES', 'GAUSSIAN_FAMILIES', 'n_params', 'in_domain', 'DistributionSpec', 'parent',
           'integration_bounds', 'pdf', 'logpdf', 'cdf', 'sf', 'inverse_cdf', 'quantile', 'sample', 'log_density', 'domain_check',
           'spec_from_dict', 'spec_to_dict']

# %% ../../nbs/distributions/families.ipynb 2
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Tuple, Union

import jax
import jax.numpy as jnp
import numpy as np
from jax.scipy.special import ndtr
from scipy import stats

from ..utils.errors import DomainError

jax.config.update("jax_enable_x64", True)

# %% ../../nbs/distributions/families.ipynb 3
class FamilyTag(str, Enum):
    TruncNormal = "trunc_normal"
    TruncLogNormal = "trunc_lognormal"
    TruncGumbel = "trunc_gumbel"
    Triangular = "triangular"
    Normal = "normal"
    NormalVariance = "normal_variance"  # Gaussian law in the (mean, variance) chart
    Uniform = "uniform"

    @classmethod
    def parse(cls, name: Union[str, "FamilyTag"]) -> "FamilyTag":
        "Accepts the JSON name (`trunc_normal`) or the member name (`TruncNormal`)."
        if isinstance(name, cls):
            return name
        for member in cls:
            if name in (member.value, member.name):
                return member
        choices = ", ".join(m.value for m in cls)
        raise DomainError(f"unknown distribution family {name!r}, expected one of: {choices}")


FISHER_FAMILIES = frozenset(FamilyTag) - {FamilyTag.Uniform}
GAUSSIAN_FAMILIES = frozenset({FamilyTag.Normal, FamilyTag.NormalVariance, FamilyTag.TruncNormal})

_UNBOUNDED = {FamilyTag.Normal, FamilyTag.NormalVariance}


def n_params(family: FamilyTag) -> int:
    if family == FamilyTag.Uniform:
        return 0
    if family == FamilyTag.Triangular:
        return 1
    return 2

# %% ../../nbs/distributions/families.ipynb 4
def in_domain(
    family: FamilyTag,
    theta,  # parameter vector
    support: Tuple[float, float],
) -> bool:
    "Whether `theta` lies in the open parameter domain of `family`."
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (n_params(family),) or not np.all(np.isfinite(theta)):
        return False
    lo, hi = support
    if family == FamilyTag.Uniform:
        return True
    if family == FamilyTag.Triangular:
        return bool(lo < theta[0] < hi)
    if family == FamilyTag.TruncGumbel:
        return bool(theta[0] > 0 and theta[1] > 0)
    return bool(theta[1] > 0)


def _check_support(family: FamilyTag, support: Tuple[float, float]):
    lo, hi = support
    if math.isnan(lo) or math.isnan(hi) or not lo < hi:
        raise DomainError(f"support must satisfy lo < hi, got [{lo}, {hi}]")
    if family in _UNBOUNDED:
        if math.isfinite(lo) or math.isfinite(hi):
            raise DomainError(
                f"{family.value} is untruncated and needs support (-inf, inf); use trunc_normal for [{lo}, {hi}]"
            )
        return
    if family == FamilyTag.TruncNormal:
        return
    if family == FamilyTag.TruncLogNormal:
        if lo < 0 or not math.isfinite(hi):
            raise DomainError(f"trunc_lognormal needs 0 <= lo < hi < inf, got [{lo}, {hi}]")
        return
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError(f"{family.value} needs a bounded support, got [{lo}, {hi}]")

# %% ../../nbs/distributions/families.ipynb 5
@dataclass(frozen=True)
class DistributionSpec:
    "A point of a statistical manifold: family, parameter vector and fixed support."

    family: FamilyTag
    theta: Tuple[float, ...]
    support: Tuple[float, float] = (-math.inf, math.inf)

    def __post_init__(self):
        family = FamilyTag.parse(self.family)
        theta = tuple(float(t) for t in np.atleast_1d(np.asarray(self.theta, dtype=float)))
        support = tuple(float(s) for s in self.support)
        if len(support) != 2:
            raise DomainError(f"support must have two bounds, got {support}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "support", support)

        if len(theta) != n_params(family):
            raise DomainError(f"{family.value} takes {n_params(family)} parameters, got {len(theta)}")
        _check_support(family, support)
        if not in_domain(family, theta, support):
            raise DomainError(f"theta={theta} is outside the parameter domain of {family.value} on {support}")

    @property
    def r(self) -> int:
        return len(self.theta)

    @property
    def has_fisher_structure(self) -> bool:
        return self.family in FISHER_FAMILIES

    def with_theta(self, theta) -> "DistributionSpec":
        return DistributionSpec(self.family, tuple(np.asarray(theta, dtype=float)), self.support)

    def __str__(self):
        theta = ", ".join(f"{t:.6g}" for t in self.theta)
        return f"{self.family.value}({theta}) on [{self.support[0]:g}, {self.support[1]:g}]"

# %% ../../nbs/distributions/families.ipynb 6
def parent(spec: DistributionSpec):
    "The untruncated scipy law whose restriction to the support is `spec`."
    f, theta, (lo, hi) = spec.family, spec.theta, spec.support
    if f in (FamilyTag.TruncNormal, FamilyTag.Normal):
        return stats.norm(loc=theta[0], scale=theta[1])
    if f == FamilyTag.NormalVariance:
        return stats.norm(loc=theta[0], scale=math.sqrt(theta[1]))
    if f == FamilyTag.TruncLogNormal:
        return stats.lognorm(s=theta[1], scale=math.exp(theta[0]))
    if f == FamilyTag.TruncGumbel:
        return stats.gumbel_r(loc=theta[0], scale=theta[1])
    if f == FamilyTag.Triangular:
        return stats.triang(c=(theta[0] - lo) / (hi - lo), loc=lo, scale=hi - lo)
    return stats.uniform(loc=lo, scale=hi - lo)


def _bounds_mass(spec: DistributionSpec, law):
    "Parent cdf at lo, parent sf at hi and the mass in between."
    lo, hi = spec.support
    cdf_lo = float(law.cdf(lo)) if math.isfinite(lo) else 0.0
    sf_hi = float(law.sf(hi)) if math.isfinite(hi) else 0.0
    if cdf_lo > 0.5:
        mass = float(law.sf(lo)) - sf_hi
    else:
        mass = (float(law.cdf(hi)) if math.isfinite(hi) else 1.0) - cdf_lo
    return cdf_lo, sf_hi, mass


def integration_bounds(
    spec: DistributionSpec,
    tail: float = 1e-16,  # parent tail mass dropped on an infinite side
) -> Tuple[float, float]:
    "Finite interval carrying the law; infinite bounds are replaced by far parent quantiles."
    lo, hi = spec.support
    law = parent(spec)
    if not math.isfinite(lo):
        lo = float(law.ppf(tail))
    if not math.isfinite(hi):
        hi = float(law.isf(tail))
    return lo, hi

# %% ../../nbs/distributions/families.ipynb 7
def pdf(spec: DistributionSpec, x):
    "Density, 0 outside the support; truncated families are renormalised by the parent mass on the support."
    x = np.asarray(x, dtype=float)
    lo, hi = spec.support
    law = parent(spec)
    _, _, mass = _bounds_mass(spec, law)
    inside = (x >= lo) & (x <= hi)
    out = np.where(inside, law.pdf(np.clip(x, lo, hi)) / mass, 0.0)
    return out if out.ndim else float(out)


def logpdf(spec: DistributionSpec, x):
    x = np.asarray(x, dtype=float)
    lo, hi = spec.support
    law = parent(spec)
    _, _, mass = _bounds_mass(spec, law)
    inside = (x >= lo) & (x <= hi)
    out = np.where(inside, law.logpdf(np.clip(x, lo, hi)) - math.log(mass), -np.inf)
    return out if out.ndim else float(out)


def cdf(spec: DistributionSpec, x):
    x = np.asarray(x, dtype=float)
    lo, hi = spec.support
    law = parent(spec)
    cdf_lo, _, mass = _bounds_mass(spec, law)
    value = (law.cdf(np.clip(x, lo, hi)) - cdf_lo) / mass
    out = np.where(x <= lo, 0.0, np.where(x >= hi, 1.0, np.clip(value, 0.0, 1.0)))
    return out if out.ndim else float(out)


def sf(spec: DistributionSpec, x):
    "Survival function `1 - cdf`, computed from the upper tail for accuracy."
    x = np.asarray(x, dtype=float)
    lo, hi = spec.support
    law = parent(spec)
    _, sf_hi, mass = _bounds_mass(spec, law)
    value = (law.sf(np.clip(x, lo, hi)) - sf_hi) / mass
    out = np.where(x <= lo, 1.0, np.where(x >= hi, 0.0, np.clip(value, 0.0, 1.0)))
    return out if out.ndim else float(out)


def inverse_cdf(spec: DistributionSpec, u):
    "Quantile without range checks: levels in [0, 1] map onto the closed support."
    lo, hi = spec.support
    law = parent(spec)
    cdf_lo, sf_hi, mass = _bounds_mass(spec, law)
    u = np.asarray(u, dtype=float)
    with np.errstate(invalid="ignore"):
        lower = law.ppf(cdf_lo + u * mass)
        upper = law.isf(sf_hi + (1.0 - u) * mass)
    return np.clip(np.where(u <= 0.5, lower, upper), lo, hi)


def quantile(spec: DistributionSpec, u):
    u_arr = np.asarray(u, dtype=float)
    if np.any(~((u_arr > 0) & (u_arr < 1))):
        raise DomainError(f"quantile level must lie strictly inside (0, 1), got {u}")
    out = inverse_cdf(spec, u_arr)
    return out if out.ndim else float(out)


def sample(
    spec: DistributionSpec,
    rng_seed: int,  # explicit seed, no global state is used
    n: int,
) -> np.ndarray:
    "`n` draws by inverse transform of uniforms from a seeded generator."
    if n < 0:
        raise DomainError(f"sample size must be non-negative, got {n}")
    u = np.random.default_rng(rng_seed).random(n)
    return inverse_cdf(spec, u)

# %% ../../nbs/distributions/families.ipynb 8
def _parent_cdf_jnp(family: FamilyTag, theta, x: float):
    "Parent cdf at a finite bound, as a traceable function of `theta`."
    if family == FamilyTag.TruncNormal:
        return ndtr((x - theta[0]) / theta[1])
    if family == FamilyTag.TruncLogNormal:
        if x <= 0:
            return 0.0
        return ndtr((math.log(x) - theta[0]) / theta[1])
    if family == FamilyTag.TruncGumbel:
        return jnp.exp(-jnp.exp(-(x - theta[0]) / theta[1]))
    raise AssertionError(f"{family} is not truncated")


def _log_mass_jnp(family: FamilyTag, theta, support: Tuple[float, float]):
    if family not in (FamilyTag.TruncNormal, FamilyTag.TruncLogNormal, FamilyTag.TruncGumbel):
        return 0.0
    lo, hi = support
    upper = _parent_cdf_jnp(family, theta, hi) if math.isfinite(hi) else 1.0
    lower = _parent_cdf_jnp(family, theta, lo) if math.isfinite(lo) else 0.0
    return jnp.log(upper - lower)


def log_density(
    family: FamilyTag,
    theta: jnp.ndarray,  # parameter vector, differentiated through
    x,  # point of the support
    support: Tuple[float, float],  # static bounds
):
    "Log density written in `jax.numpy`, truncation normaliser included, for differentiation in `theta`."
    lo, hi = support
    if family in (FamilyTag.TruncNormal, FamilyTag.Normal, FamilyTag.NormalVariance):
        scale = jnp.sqrt(theta[1]) if family == FamilyTag.NormalVariance else theta[1]
        z = (x - theta[0]) / scale
        logf = -0.5 * z**2 - jnp.log(scale) - 0.5 * jnp.log(2 * jnp.pi)
    elif family == FamilyTag.TruncLogNormal:
        z = (jnp.log(x) - theta[0]) / theta[1]
        logf = -0.5 * z**2 - jnp.log(theta[1]) - jnp.log(x) - 0.5 * jnp.log(2 * jnp.pi)
    elif family == FamilyTag.TruncGumbel:
        z = (x - theta[0]) / theta[1]
        logf = -jnp.log(theta[1]) - z - jnp.exp(-z)
    elif family == FamilyTag.Triangular:
        m = theta[0]
        rising = jnp.log(2.0 * (x - lo)) - jnp.log((hi - lo) * (m - lo))
        falling = jnp.log(2.0 * (hi - x)) - jnp.log((hi - lo) * (hi - m))
        logf = jnp.where(x < m, rising, falling)
    else:
        logf = -jnp.log(hi - lo) + 0.0 * x
    return logf - _log_mass_jnp(family, theta, support)


def domain_check(family: FamilyTag, support: Tuple[float, float]) -> Callable[[jnp.ndarray], jnp.ndarray]:
    "Traceable version of `in_domain` for a fixed family and support."
    lo, hi = support

    def check(theta):
        finite = jnp.all(jnp.isfinite(theta))
        if family == FamilyTag.Triangular:
            return finite & (theta[0] > lo) & (theta[0] < hi)
        if family == FamilyTag.TruncGumbel:
            return finite & (theta[0] > 0) & (theta[1] > 0)
        return finite & (theta[1] > 0)

    return check

# %% ../../nbs/distributions/families.ipynb 9
def _decode_bound(value, default: float) -> float:
    if value is None:
        return default
    return float(value)


def spec_from_dict(d: Dict[str, Any]) -> DistributionSpec:
    "Decode `{\"family\": ..., \"theta\": [...], \"support\": [lo, hi]}`; `null` bounds are infinite."
    if "family" not in d:
        raise DomainError(f"distribution spec {dict(d)} has no 'family'")
    family = FamilyTag.parse(d["family"])
    theta = tuple(d.get("theta") or ())
    support = d.get("support")
    if support is None:
        support = (None, None)
    if len(support) != 2:
        raise DomainError(f"support must have two bounds, got {list(support)}")
    return DistributionSpec(
        family,
        theta,
        (_decode_bound(support[0], -math.inf), _decode_bound(support[1], math.inf)),
    )


def spec_to_dict(spec: DistributionSpec) -> Dict[str, Any]:
    lo, hi = spec.support
    return {
        "family": spec.family.value,
        "theta": list(spec.theta),
        "support": [lo if math.isfinite(lo) else None, hi if math.isfinite(hi) else None],
    }
