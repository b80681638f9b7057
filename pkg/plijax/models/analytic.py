"""Built-in analytic test models and their nominal input laws."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/models/analytic.ipynb.

# %% auto 0
__all__ = ['ModelKind', 'ishigami', 'flood', 'builtin_input_specs', 'builtin_input_names', 'ModelSpec', 'builtin_model',
           'as_model_fn', 'evaluate']

# %% ../../nbs/models/analytic.ipynb 2
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from ..distributions.families import DistributionSpec, FamilyTag
from ..utils.errors import DomainError, UnsupportedError

# %% ../../nbs/models/analytic.ipynb 3
class ModelKind(str, Enum):
    Ishigami = "ishigami"
    Flood = "flood"
    External = "external"

    @classmethod
    def parse(cls, name: Union[str, "ModelKind"]) -> "ModelKind":
        if isinstance(name, cls):
            return name
        for member in cls:
            if name in (member.value, member.name):
                return member
        raise DomainError(f"unknown model {name!r}, expected one of: ishigami, flood, external")

# %% ../../nbs/models/analytic.ipynb 4
def ishigami(
    x1,
    x2,
    x3,
    a: float = 7.0,
    b: float = 0.1,
):
    "`sin(x1) + a sin(x2)^2 + b x3^4 sin(x1)`."
    return np.sin(x1) + a * np.sin(x2) ** 2 + b * np.asarray(x3) ** 4 * np.sin(x1)


def flood(
    Q,  # m3/s   maximal annual flowrate
    Ks,  # m1/3/s Strickler coefficient
    Zv,  # m      river downstream level
    Zm,  # m      river upstream level
):
    "Maximal annual water level `H = (Q / (300 Ks sqrt(2e-4 (Zm - Zv))))^0.6`."
    Q, Ks, Zv, Zm = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (Q, Ks, Zv, Zm)))
    bad = ~((Ks > 0) & (Zm > Zv))
    if np.any(bad):
        rows = np.flatnonzero(np.atleast_1d(bad)).tolist()
        raise DomainError(f"flood model needs Ks > 0 and Zm > Zv; violated at rows {rows[:20]}")
    H = (Q / (300.0 * Ks * np.sqrt(2e-4 * (Zm - Zv)))) ** 0.6
    return H if H.ndim else float(H)

# %% ../../nbs/models/analytic.ipynb 5
def builtin_input_specs(kind: Union[str, ModelKind]) -> Tuple[DistributionSpec, ...]:
    kind = ModelKind.parse(kind)
    if kind == ModelKind.Ishigami:
        return tuple(DistributionSpec(FamilyTag.Normal, (0.0, 1.0)) for _ in range(3))
    if kind == ModelKind.Flood:
        # fmt: off
        return (
            DistributionSpec(FamilyTag.TruncGumbel, (1013.0, 558.0), (500.0, 3000.0)),  # Q
            DistributionSpec(FamilyTag.TruncNormal, (30.0, 7.5), (15.0, 75.0)),         # Ks, 75 = mean + 6 sd
            DistributionSpec(FamilyTag.Triangular, (50.0,), (49.0, 51.0)),              # Zv
            DistributionSpec(FamilyTag.Triangular, (55.0,), (54.0, 56.0)),              # Zm
        )
        # fmt: on
    raise UnsupportedError("external models have no built-in input laws")


def builtin_input_names(kind: Union[str, ModelKind]) -> Tuple[str, ...]:
    kind = ModelKind.parse(kind)
    if kind == ModelKind.Ishigami:
        return ("X1", "X2", "X3")
    if kind == ModelKind.Flood:
        return ("Q", "Ks", "Zv", "Zm")
    raise UnsupportedError("external models have no built-in input names")

# %% ../../nbs/models/analytic.ipynb 6
_DIMENSIONS = {ModelKind.Ishigami: 3, ModelKind.Flood: 4}


@dataclass(frozen=True)
class ModelSpec:
    kind: ModelKind
    input_specs: Tuple[DistributionSpec, ...]
    path: Optional[str] = None  # sample file of an external model
    input_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        kind = ModelKind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "input_specs", tuple(self.input_specs))
        d = len(self.input_specs)
        if kind in _DIMENSIONS and d != _DIMENSIONS[kind]:
            raise DomainError(f"{kind.value} takes {_DIMENSIONS[kind]} inputs, got {d}")
        if kind == ModelKind.External and self.path is None:
            raise DomainError("an external model needs the path of its sample file")
        names = self.input_names
        if names is None:
            names = builtin_input_names(kind) if kind in _DIMENSIONS else tuple(f"x{j + 1}" for j in range(d))
        if len(names) != d:
            raise DomainError(f"{len(names)} input names for {d} inputs")
        object.__setattr__(self, "input_names", tuple(names))

    @property
    def d(self) -> int:
        return len(self.input_specs)

    @property
    def can_evaluate(self) -> bool:
        return self.kind != ModelKind.External


def builtin_model(kind: Union[str, ModelKind], input_specs: Optional[Sequence[DistributionSpec]] = None) -> ModelSpec:
    kind = ModelKind.parse(kind)
    specs = builtin_input_specs(kind) if input_specs is None else tuple(input_specs)
    return ModelSpec(kind, specs)

# %% ../../nbs/models/analytic.ipynb 7
def as_model_fn(model: Union[ModelSpec, Callable[[np.ndarray], np.ndarray]]) -> Callable[[np.ndarray], np.ndarray]:
    "Batch function `(N, d) -> (N,)` for a built-in model spec or a plain callable."
    if callable(model):
        return model
    if model.kind == ModelKind.Ishigami:
        return lambda X: ishigami(X[:, 0], X[:, 1], X[:, 2])
    if model.kind == ModelKind.Flood:
        return lambda X: flood(X[:, 0], X[:, 1], X[:, 2], X[:, 3])
    raise UnsupportedError("external models cannot be evaluated; only their stored sample is available")


def evaluate(model: Union[ModelSpec, Callable], inputs: np.ndarray) -> np.ndarray:
    "Evaluate the model on every row of `inputs`; non-finite outputs are reported by row."
    X = np.atleast_2d(np.asarray(inputs, dtype=float))
    if X.shape[0] == 0:
        return np.zeros(0)
    y = np.asarray(as_model_fn(model)(X), dtype=float).reshape(-1)
    if y.shape[0] != X.shape[0]:
        raise DomainError(f"model returned {y.shape[0]} outputs for {X.shape[0]} rows")
    bad = np.flatnonzero(~np.isfinite(y))
    if bad.size:
        raise DomainError(f"model evaluation failed at row {int(bad[0])} (non-finite output)")
    return y
