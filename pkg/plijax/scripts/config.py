"""Run configurations: OmegaConf structured schema, loading, overrides and validation."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/scripts/config.ipynb.

# %% auto 0
__all__ = ['RunConfig', 'RunPlan', 'load_config', 'validate_config', 'demo_config']

# %% ../../nbs/scripts/config.ipynb 2
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from ..distributions.families import DistributionSpec, spec_from_dict
from ..models.analytic import ModelKind, ModelSpec, builtin_input_specs
from ..robustness.index import delta_grid
from ..robustness.ofpli import EstimatorMode
from ..solver.geodesic import Integrator
from ..utils.errors import ConfigError, PliError

# %% ../../nbs/scripts/config.ipynb 3
@dataclass
class RunConfig:
    model: str = "external"  # ishigami, flood or external
    sample_path: Optional[str] = None  # CSV sample of an external model
    inputs: Optional[List[Any]] = None  # DistributionSpec dicts, built-in laws when omitted
    input_names: Optional[List[str]] = None
    alpha: float = 0.95
    delta_grid: Optional[List[float]] = None  # explicit radii, else delta_min..delta_max by delta_step
    delta_min: float = 0.1
    delta_max: float = 1.0
    delta_step: float = 0.1
    K: int = 100  # directions per Fisher sphere
    n_steps: int = 1000
    integrator: str = "adams_moulton"
    B: int = 200  # bootstrap replicates, 0 skips the intervals
    N: int = 2000  # sample size of generated samples
    seed: Optional[int] = None  # required
    mode: str = "reverse_is"  # reverse_is or resample
    inputs_to_analyse: Optional[List[str]] = None  # names or indices, all inputs when omitted
    threshold_alpha: float = 0.95  # target Sobol threshold quantile
    N_base: int = 100000
    epli_mean_grid: Optional[List[float]] = None
    epli_variance_grid: Optional[List[float]] = None
    input: Optional[str] = None  # `pli` command: analysed input, name or index
    perturbed: Optional[Dict[str, Any]] = None  # `pli` command: perturbed law
    out_dir: str = "outputs"


@dataclass(frozen=True)
class RunPlan:
    "A validated configuration with every field decoded."

    config: RunConfig
    model: ModelSpec
    deltas: np.ndarray
    analysed: Tuple[int, ...]  # input indices
    integrator: Integrator
    mode: EstimatorMode
    perturbed: Optional[DistributionSpec] = None

    @property
    def input_names(self) -> Tuple[str, ...]:
        return self.model.input_names

# %% ../../nbs/scripts/config.ipynb 4
def load_config(
    path: Optional[Union[str, Path]] = None,  # JSON or YAML file
    overrides: Sequence[str] = (),  # dotted `key=value` overrides
    base: Optional[RunConfig] = None,  # defaults to merge the file into
) -> RunConfig:
    "Merge schema defaults, the config file and command line overrides."
    layers = [OmegaConf.structured(base if base is not None else RunConfig)]
    try:
        if path is not None:
            layers.append(OmegaConf.load(path))
        if overrides:
            layers.append(OmegaConf.from_dotlist(list(overrides)))
        return OmegaConf.to_object(OmegaConf.merge(*layers))
    except OmegaConfBaseException as e:
        raise ConfigError(getattr(e, "full_key", None) or "config", str(e).splitlines()[0]) from e


def _index_of(names: Tuple[str, ...], value: str, field: str) -> int:
    if value in names:
        return names.index(value)
    if str(value).isdigit() and int(value) < len(names):
        return int(value)
    raise ConfigError(field, f"unknown input {value!r}, expected one of {list(names)}")


def _in_open_unit(value: float, field: str):
    if not 0 < value < 1:
        raise ConfigError(field, f"must lie strictly inside (0, 1), got {value}")


def _at_least(value: int, minimum: int, field: str):
    if value < minimum:
        raise ConfigError(field, f"must be at least {minimum}, got {value}")


def _model(cfg: RunConfig) -> ModelSpec:
    try:
        kind = ModelKind.parse(cfg.model)
    except PliError as e:
        raise ConfigError("model", str(e)) from e
    if cfg.inputs is None:
        if kind == ModelKind.External:
            raise ConfigError("inputs", "an external model needs its input laws")
        specs = builtin_input_specs(kind)
    else:
        try:
            specs = tuple(spec_from_dict(d) for d in cfg.inputs)
        except (PliError, TypeError, ValueError) as e:
            raise ConfigError("inputs", str(e)) from e
    if kind == ModelKind.External and not cfg.sample_path:
        raise ConfigError("sample_path", "an external model needs a sample file")
    names = tuple(cfg.input_names) if cfg.input_names is not None else None
    try:
        return ModelSpec(kind, specs, cfg.sample_path, names)
    except PliError as e:
        raise ConfigError("inputs", str(e)) from e


def _deltas(cfg: RunConfig) -> np.ndarray:
    if cfg.delta_grid is not None:
        grid = np.asarray(cfg.delta_grid, dtype=float)
        if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
            raise ConfigError("delta_grid", f"must be increasing and positive, got {grid.tolist()}")
        return grid
    if not 0 < cfg.delta_min <= cfg.delta_max:
        raise ConfigError("delta_min", f"need 0 < delta_min <= delta_max, got {cfg.delta_min} and {cfg.delta_max}")
    if not cfg.delta_step > 0:
        raise ConfigError("delta_step", f"must be positive, got {cfg.delta_step}")
    return delta_grid(cfg.delta_min, cfg.delta_max, cfg.delta_step)


def validate_config(cfg: RunConfig) -> RunPlan:
    "Check every field once; the first offending field is named in the `ConfigError`."
    if cfg.seed is None:
        raise ConfigError("seed", "a seed is required")
    if cfg.seed < 0:
        raise ConfigError("seed", f"must be non-negative, got {cfg.seed}")
    _in_open_unit(cfg.alpha, "alpha")
    _in_open_unit(cfg.threshold_alpha, "threshold_alpha")
    model = _model(cfg)
    deltas = _deltas(cfg)
    _at_least(cfg.K, 2, "K")
    _at_least(cfg.n_steps, 10, "n_steps")
    _at_least(cfg.N, 1, "N")
    _at_least(cfg.N_base, 2, "N_base")
    if cfg.B == 1 or cfg.B < 0:
        raise ConfigError("B", f"must be 0 or at least 2, got {cfg.B}")
    try:
        integrator = Integrator.parse(cfg.integrator)
    except PliError as e:
        raise ConfigError("integrator", str(e)) from e
    try:
        mode = EstimatorMode(cfg.mode)
    except ValueError as e:
        raise ConfigError("mode", f"expected 'reverse_is' or 'resample', got {cfg.mode!r}") from e
    if mode == EstimatorMode.Resample and not model.can_evaluate:
        raise ConfigError("mode", "direct resampling needs a model that can be evaluated")

    names = model.input_names
    selected = cfg.inputs_to_analyse if cfg.inputs_to_analyse is not None else names
    analysed = tuple(_index_of(names, str(v), "inputs_to_analyse") for v in selected)
    if cfg.input is not None:
        _index_of(names, str(cfg.input), "input")
    for field in ("epli_mean_grid", "epli_variance_grid"):
        grid = getattr(cfg, field)
        if grid is not None and np.any(np.diff(np.asarray(grid, dtype=float)) <= 0):
            raise ConfigError(field, "must be increasing")
    if cfg.epli_variance_grid is not None and np.any(np.asarray(cfg.epli_variance_grid) <= 0):
        raise ConfigError("epli_variance_grid", "variance ratios must be positive")

    perturbed = None
    if cfg.perturbed is not None:
        try:
            perturbed = spec_from_dict(cfg.perturbed)
        except (PliError, TypeError, ValueError) as e:
            raise ConfigError("perturbed", str(e)) from e
    return RunPlan(cfg, model, deltas, analysed, integrator, mode, perturbed)

# %% ../../nbs/scripts/config.ipynb 5
def demo_config(model: str, seed: int) -> RunConfig:
    "Configuration of the built-in demonstrations, mirroring `conf/ishigami.json` and `conf/flood.json`."
    kind = ModelKind.parse(model)
    if kind == ModelKind.Ishigami:
        return RunConfig(
            model="ishigami",
            alpha=0.95,
            delta_grid=[0.1, 0.3, 0.5, 0.7, 0.9],
            mode="resample",
            N=2000,
            seed=seed,
            epli_mean_grid=[-1.0, -0.5, 0.0, 0.5, 1.0],
            epli_variance_grid=[0.25, 0.5, 1.0, 2.0, 4.0],
            out_dir="outputs/ishigami",
        )
    if kind == ModelKind.Flood:
        return RunConfig(
            model="flood",
            alpha=0.95,
            delta_min=0.1,
            delta_max=1.4,
            delta_step=0.1,
            mode="reverse_is",
            N=2000,
            seed=seed,
            out_dir="outputs/flood",
        )
    raise ConfigError("model", "demos exist for the ishigami and flood models only")
