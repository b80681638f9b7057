"""The `plijax` command line: quick geometry commands and configuration driven analyses."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/scripts/cli.ipynb.

# %% auto 0
__all__ = ['COMMANDS', 'RunResults', 'emit_results', 'fim', 'geodesic', 'sphere', 'pli', 'ofpli', 'epli', 'sobol', 'demo',
           'run', 'main']

# %% ../../nbs/scripts/cli.ipynb 2
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import jax
import numpy as np
import pandas as pd
import scipy
from absl import logging
from fastcore.script import Param, anno_parser, store_true
from omegaconf import OmegaConf

from .. import __version__
from ..distributions.families import GAUSSIAN_FAMILIES, DistributionSpec, FamilyTag, spec_to_dict
from ..distributions.fisher import fisher_information
from ..estimation.iosample import IOSample
from ..models.sample import generate_sample, load_sample
from ..robustness.epli import EpliCurve, EpliMode, epli_curve
from ..robustness.index import pli_detail
from ..robustness.ofpli import EstimatorMode, PliCurve, ofpli_curve
from ..sensitivity.sobol import SobolResult, sobol_indices
from ..solver.geodesic import integrate_geodesic
from ..solver.sphere import fisher_sphere, sphere_density_table
from ..utils.errors import ConfigError, NumericalError, PliError
from ..utils.parallel import set_progress, set_threads
from .config import RunConfig, RunPlan, demo_config, load_config, validate_config

# %% ../../nbs/scripts/cli.ipynb 3
@dataclass
class RunResults:
    plan: RunPlan
    curves: List[PliCurve] = field(default_factory=list)
    epli: List[EpliCurve] = field(default_factory=list)
    sobol: Optional[SobolResult] = None
    pli: Optional[pd.DataFrame] = None
    started: float = field(default_factory=time.perf_counter)


def _manifest(results: RunResults) -> dict:
    cfg = results.plan.config
    manifest = {
        "plijax": __version__,
        "versions": {"numpy": np.__version__, "scipy": scipy.__version__, "jax": jax.__version__, "pandas": pd.__version__},
        "seed": cfg.seed,
        "config": OmegaConf.to_container(OmegaConf.structured(cfg)),
        "inputs": [spec_to_dict(spec) for spec in results.plan.model.input_specs],
        "admissibility": {
            curve.input_name: {
                "delta": curve.deltas.tolist(),
                "admissible": curve.admissible.tolist(),
                "delta_max": curve.delta_max,
            }
            for curve in results.curves
        },
        "wall_time": round(time.perf_counter() - results.started, 3),
    }
    if results.sobol is not None:
        manifest["sobol"] = {"N_base": results.sobol.N_base, "threshold": results.sobol.threshold}
    return manifest


def emit_results(results: RunResults, out_dir: Optional[str] = None) -> List[Path]:
    "Write the CSV tables of `results` and the run manifest; returns the written paths."
    out = Path(out_dir if out_dir is not None else results.plan.config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def write(frame: pd.DataFrame, name: str):
        frame.to_csv(out / name, index=False)
        written.append(out / name)

    for curve in results.curves:
        if not curve.levels:
            logging.warning(f"no radius analysed for input {curve.input_name}; only the manifest is written")
            continue
        write(curve.to_frame(), f"curve_{curve.input_name}.csv")
        write(curve.sphere_frame(), f"sphere_{curve.input_name}.csv")
    by_input = {}
    for curve in results.epli:
        by_input.setdefault(curve.input_name, []).append(curve.to_frame())
    for name, frames in by_input.items():
        write(pd.concat(frames, ignore_index=True), f"epli_{name}.csv")
    if results.sobol is not None:
        write(results.sobol.to_frame(), "sobol.csv")
    if results.pli is not None:
        write(results.pli, "pli.csv")

    with open(out / "manifest.json", "w") as f:
        json.dump(_manifest(results), f, indent=2, sort_keys=True)
    written.append(out / "manifest.json")
    logging.info(f"wrote {len(written)} files to {out}")
    return written

# %% ../../nbs/scripts/cli.ipynb 4
def _floats(text: Optional[str], name: str) -> tuple:
    if text is None:
        raise ConfigError(name, "is required")
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError as e:
        raise ConfigError(name, f"expected comma separated numbers, got {text!r}") from e


def _spec(family: Optional[str], theta: Optional[str], support: Optional[str]) -> DistributionSpec:
    if family is None:
        raise ConfigError("family", "is required")
    tag = FamilyTag.parse(family)
    params = () if tag == FamilyTag.Uniform else _floats(theta, "theta")
    if support is None:
        return DistributionSpec(tag, params)
    return DistributionSpec(tag, params, _floats(support, "support"))


def _setup(threads: Optional[int], quiet: bool):
    if threads is not None and threads < 1:
        raise ConfigError("threads", f"must be a positive integer, got {threads}")
    set_threads(threads)
    set_progress(not quiet)
    logging.set_verbosity(logging.WARNING if quiet else logging.INFO)


def _plan(
    config: Optional[str],
    overrides: Optional[Sequence[str]],
    seed: Optional[int],
    alpha: Optional[float],
    out: Optional[str],
    base: Optional[RunConfig] = None,
) -> RunPlan:
    dotlist = list(overrides or [])
    for key, value in (("seed", seed), ("alpha", alpha), ("out_dir", out)):
        if value is not None:
            dotlist.append(f"{key}={value}")
    return validate_config(load_config(config, dotlist, base))


def _sample(plan: RunPlan) -> IOSample:
    cfg = plan.config
    if cfg.sample_path:
        return load_sample(cfg.sample_path, plan.model.input_specs, plan.model.input_names)
    return generate_sample(plan.model, cfg.N, cfg.seed)


def _ofpli_curves(plan: RunPlan, s: IOSample) -> List[PliCurve]:
    cfg = plan.config
    model = plan.model if plan.mode == EstimatorMode.Resample else None
    curves = []
    for i in plan.analysed:
        if not s.input_specs[i].has_fisher_structure:
            logging.warning(f"input {s.input_names[i]} ({s.input_specs[i].family.value}) has no Fisher sphere; skipped")
            continue
        curve = ofpli_curve(
            s, i, plan.deltas, cfg.alpha, cfg.K, cfg.B, plan.integrator, cfg.n_steps, model, cfg.seed
        )
        if curve.levels:
            print(
                f"{curve.input_name}: S+ max {curve.s_plus.max():.4f}, S- min {curve.s_minus.min():.4f}, "
                f"delta_max {curve.delta_max}"
            )
        curves.append(curve)
    return curves


def _epli_curves(plan: RunPlan, s: IOSample) -> List[EpliCurve]:
    cfg = plan.config
    model = plan.model if plan.mode == EstimatorMode.Resample else None
    curves = []
    for i in plan.analysed:
        name = s.input_names[i]
        if cfg.epli_mean_grid is not None:
            curves.append(epli_curve(s, i, cfg.epli_mean_grid, cfg.alpha, EpliMode.MeanShift, model, cfg.seed))
        if cfg.epli_variance_grid is not None:
            if s.input_specs[i].family in GAUSSIAN_FAMILIES:
                curves.append(
                    epli_curve(s, i, cfg.epli_variance_grid, cfg.alpha, EpliMode.VarianceScale, model, cfg.seed)
                )
            else:
                logging.warning(f"input {name} is not Gaussian; variance grid skipped")
        values = np.concatenate([c.pli for c in curves if c.input_name == name] or [np.zeros(0)])
        if values.size:
            print(f"{name}: E-PLI range [{values.min():.4f}, {values.max():.4f}]")
    return curves

# %% ../../nbs/scripts/cli.ipynb 5
_OVERRIDES = Param("dotted key=value overrides of the configuration", str, nargs="*", opt=False)


def fim(
    family: str = None,  # distribution family, e.g. trunc_gumbel
    theta: str = None,  # comma separated parameters
    support: str = None,  # comma separated bounds, `inf` allowed
    out: str = ".",  # output directory
    threads: int = None,  # worker threads, every core by default
    quiet: store_true = False,  # hide progress bars and info logs
):
    "Fisher information matrix at one parameter value."
    _setup(threads, quiet)
    spec = _spec(family, theta, support)
    info = fisher_information(spec)
    print(f"{spec}: I = {np.array2string(info.matrix, precision=6, separator=', ')}")
    Path(out).mkdir(parents=True, exist_ok=True)
    with open(Path(out) / "fim.json", "w") as f:
        json.dump({"spec": spec_to_dict(spec), "matrix": info.matrix.tolist(), "tolerance": info.tolerance}, f, indent=2)


def geodesic(
    family: str = None,
    theta: str = None,
    support: str = None,
    direction: str = None,  # unit direction in whitened coordinates, first axis by default
    delta: float = 1.0,  # Fisher length of the path
    method: str = "adams_moulton",  # euler or adams_moulton
    steps: int = 1000,
    out: str = ".",
    threads: int = None,
    quiet: store_true = False,
):
    "Integrate one geodesic from a distribution."
    _setup(threads, quiet)
    spec = _spec(family, theta, support)
    u = np.eye(spec.r)[0] if direction is None else np.asarray(_floats(direction, "direction"))
    if u.shape != (spec.r,) or not np.linalg.norm(u) > 0:
        raise ConfigError("direction", f"expected a non-zero vector of length {spec.r}")
    p0 = delta * fisher_information(spec).cholesky() @ (u / np.linalg.norm(u))
    path = integrate_geodesic(spec, p0, method, steps)
    Path(out).mkdir(parents=True, exist_ok=True)
    path.to_frame().to_csv(Path(out) / "geodesic.csv", index=False)
    print(f"{spec}: {path.status.value}, endpoint {path.endpoint}, max drift {path.max_drift:.3e}")


def sphere(
    family: str = None,
    theta: str = None,
    support: str = None,
    delta: float = 1.0,  # sphere radius
    k: int = 100,  # number of directions
    method: str = "adams_moulton",
    steps: int = 1000,
    densities: int = 0,  # grid size of the density table, 0 skips it
    out: str = ".",
    threads: int = None,
    quiet: store_true = False,
):
    "Fisher sphere around a distribution."
    _setup(threads, quiet)
    spec = _spec(family, theta, support)
    result = fisher_sphere(spec, delta, k, method, steps)
    Path(out).mkdir(parents=True, exist_ok=True)
    result.to_frame().to_csv(Path(out) / "sphere.csv", index=False)
    if densities > 0:
        sphere_density_table(result, densities).to_csv(Path(out) / "sphere_densities.csv", index=False)
    print(f"{spec}: {result.n_valid}/{result.K} valid directions, max drift {result.max_drift:.3e}")


def pli(
    overrides: _OVERRIDES = None,
    config: str = None,  # run configuration, JSON or YAML
    seed: int = None,
    alpha: float = None,
    out: str = None,  # output directory
    threads: int = None,  # worker threads, every core by default
    quiet: store_true = False,  # hide progress bars and info logs
):
    "Index of one perturbed law, configured by `input` and `perturbed`."
    _setup(threads, quiet)
    plan = _plan(config, overrides, seed, alpha, out)
    if plan.perturbed is None or plan.config.input is None:
        raise ConfigError("perturbed", "the pli command needs `input` and `perturbed`")
    s = _sample(plan)
    i = s.index_of(int(plan.config.input) if plan.config.input.isdigit() else plan.config.input)
    value = pli_detail(s, i, plan.perturbed, plan.config.alpha)
    frame = pd.DataFrame([{"input": s.input_names[i], **value._asdict()}])
    print(f"{s.input_names[i]}: PLI {value.pli:.4f} (admissible: {value.admissible})")
    emit_results(RunResults(plan, pli=frame))


def ofpli(
    overrides: _OVERRIDES = None,
    config: str = None,
    seed: int = None,
    alpha: float = None,
    out: str = None,
    threads: int = None,
    quiet: store_true = False,
):
    "OF-PLI curves over a grid of Fisher radii for every analysed input."
    _setup(threads, quiet)
    started = time.perf_counter()
    plan = _plan(config, overrides, seed, alpha, out)
    s = _sample(plan)
    emit_results(RunResults(plan, curves=_ofpli_curves(plan, s), started=started))


def epli(
    overrides: _OVERRIDES = None,
    config: str = None,
    seed: int = None,
    alpha: float = None,
    out: str = None,
    threads: int = None,
    quiet: store_true = False,
):
    "Standard-space mean and variance perturbation curves."
    _setup(threads, quiet)
    plan = _plan(config, overrides, seed, alpha, out)
    if plan.config.epli_mean_grid is None and plan.config.epli_variance_grid is None:
        raise ConfigError("epli_mean_grid", "no E-PLI grid configured")
    s = _sample(plan)
    emit_results(RunResults(plan, epli=_epli_curves(plan, s)))


def sobol(
    overrides: _OVERRIDES = None,
    config: str = None,
    seed: int = None,
    alpha: float = None,
    out: str = None,
    threads: int = None,
    quiet: store_true = False,
):
    "Pick-freeze and target Sobol indices of a built-in model."
    _setup(threads, quiet)
    plan = _plan(config, overrides, seed, alpha, out)
    if not plan.model.can_evaluate:
        raise ConfigError("model", "Sobol indices need a model that can be evaluated")
    cfg = plan.config
    result = sobol_indices(plan.model, plan.model.input_specs, cfg.N_base, cfg.seed, cfg.threshold_alpha)
    for j, name in enumerate(result.input_names):
        print(
            f"{name}: first order {result.first_order[j]:.4f}, total {result.total[j]:.4f}, "
            f"target {result.target_first_order[j]:.4f} / {result.target_total[j]:.4f}"
        )
    emit_results(RunResults(plan, sobol=result))


def demo(
    model: str,  # ishigami or flood
    overrides: _OVERRIDES = None,
    seed: int = None,
    out: str = None,
    threads: int = None,
    quiet: store_true = False,
):
    "Full OF-PLI pipeline on a built-in model, with E-PLI (ishigami) or Sobol indices (flood)."
    _setup(threads, quiet)
    if seed is None:
        raise ConfigError("seed", "a seed is required")
    started = time.perf_counter()
    plan = _plan(None, overrides, seed, None, out, base=demo_config(model, seed))
    s = _sample(plan)
    results = RunResults(plan, curves=_ofpli_curves(plan, s), started=started)
    if plan.config.epli_mean_grid is not None or plan.config.epli_variance_grid is not None:
        results.epli = _epli_curves(plan, s)
    if plan.config.model == "flood":
        cfg = plan.config
        results.sobol = sobol_indices(plan.model, plan.model.input_specs, cfg.N_base, cfg.seed, cfg.threshold_alpha)
    emit_results(results)

# %% ../../nbs/scripts/cli.ipynb 6
COMMANDS = {
    "fim": fim,
    "geodesic": geodesic,
    "sphere": sphere,
    "pli": pli,
    "ofpli": ofpli,
    "epli": epli,
    "sobol": sobol,
    "demo": demo,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    "Dispatch a subcommand; exit code 0 on success, 1 on invalid input, 2 on numerical failure."
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["--version"]:
        print(f"plijax {__version__}")
        return 0
    if not argv or argv[0] not in COMMANDS:
        print(f"usage: plijax {{{','.join(COMMANDS)}}} [options] | --version", file=sys.stderr)
        return 0 if argv[:1] in (["-h"], ["--help"]) else 1
    command = COMMANDS[argv[0]]
    parser = anno_parser(command, prog=f"plijax {argv[0]}")
    try:
        args = parser.parse_intermixed_args(argv[1:])
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    kwargs = {k: v for k, v in vars(args).items() if k not in ("pdb", "xtra")}
    try:
        command(**kwargs)
    except NumericalError as e:
        print(f"plijax {argv[0]}: numerical failure: {e}", file=sys.stderr)
        return 2
    except (PliError, OSError) as e:
        print(f"plijax {argv[0]}: {e}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
