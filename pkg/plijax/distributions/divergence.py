"""Kullback-Leibler divergence between input laws."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/distributions/divergence.ipynb.

# %% auto 0
__all__ = ['kl_divergence']

# %% ../../nbs/distributions/divergence.ipynb 2
from functools import partial

import numpy as np
from scipy.integrate import simpson
from scipy.special import rel_entr

from ..utils.errors import DomainError
from .families import DistributionSpec, integration_bounds, pdf

# %% ../../nbs/distributions/divergence.ipynb 3
def _as_density(law):
    "(pdf, support, finite integration bounds) of a spec or of any object exposing `pdf` and `support`."
    if isinstance(law, DistributionSpec):
        return partial(pdf, law), law.support, integration_bounds(law)
    return law.pdf, law.support, law.integration_bounds()


def kl_divergence(
    p,  # DistributionSpec or density object (e.g. a standard-space perturbation)
    q,  # reference law, its support must contain the support of `p`
    n_points: int = 2001,  # Simpson grid size over the support of `p`
) -> float:
    "`KL(p || q) = int p log(p / q)` by composite Simpson's rule."
    p_pdf, p_support, (lo, hi) = _as_density(p)
    q_pdf, q_support, _ = _as_density(q)
    if q_support[0] > p_support[0] or q_support[1] < p_support[1]:
        raise DomainError(f"support {list(q_support)} does not contain {list(p_support)}")

    x = np.linspace(lo, hi, n_points)
    integrand = rel_entr(np.asarray(p_pdf(x), dtype=float), np.asarray(q_pdf(x), dtype=float))
    if not np.all(np.isfinite(integrand)):
        raise DomainError("p puts mass where q vanishes; the divergence is infinite")
    return float(simpson(integrand, x=x))
