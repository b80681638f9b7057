"""Monte Carlo designs from the nominal laws, and CSV ingestion of external samples."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/models/sample.ipynb.

# %% auto 0
__all__ = ['draw_inputs', 'generate_sample', 'save_sample', 'load_sample']

# %% ../../nbs/models/sample.ipynb 2
from pathlib import Path
from typing import Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd
from absl import logging

from ..distributions.families import DistributionSpec, sample
from ..estimation.iosample import IOSample
from ..utils.errors import SampleError, UnsupportedError
from ..utils.parallel import derive_seed
from .analytic import ModelSpec, evaluate

# %% ../../nbs/models/sample.ipynb 3
def draw_inputs(
    input_specs: Sequence[DistributionSpec],
    N: int,
    seed: int,
    overrides: Optional[Dict[int, object]] = None,  # column -> law replacing the nominal one
) -> np.ndarray:
    "`(N, d)` independent draws; column `j` is seeded by `(seed, j)`."
    overrides = overrides or {}
    columns = []
    for j, spec in enumerate(input_specs):
        law = overrides.get(j, spec)
        column_seed = derive_seed(seed, j)
        if isinstance(law, DistributionSpec):
            columns.append(sample(law, column_seed, N))
        else:
            columns.append(np.asarray(law.sample(column_seed, N), dtype=float))
    return np.stack(columns, axis=1) if columns else np.zeros((N, 0))


def generate_sample(
    model: ModelSpec,
    N: int,  # number of model runs
    seed: int,
) -> IOSample:
    "i.i.d. inputs from the nominal laws and the matching model outputs."
    if not model.can_evaluate:
        raise UnsupportedError(f"cannot generate runs of an external model; load {model.path} instead")
    inputs = draw_inputs(model.input_specs, N, seed)
    outputs = evaluate(model, inputs)
    return IOSample(inputs, outputs, model.input_specs, input_names=model.input_names)

# %% ../../nbs/models/sample.ipynb 4
def save_sample(s: IOSample, path: Union[str, Path]):
    "CSV with header `x1, ..., xd, y`, one row per model run."
    frame = pd.DataFrame(s.inputs, columns=[f"x{j + 1}" for j in range(s.d)])
    frame["y"] = s.outputs
    frame.to_csv(path, index=False)


def load_sample(
    path: Union[str, Path],
    input_specs: Sequence[DistributionSpec],
    input_names: Optional[Sequence[str]] = None,
) -> IOSample:
    "Read and validate a sample file; rows outside the supports are rejected by row number."
    d = len(input_specs)
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise SampleError(f"malformed sample file {path}: {e}") from e

    expected = [f"x{j + 1}" for j in range(d)] + ["y"]
    columns = [str(c).strip() for c in frame.columns]
    n_inputs = sum(c.startswith("x") for c in columns)
    if n_inputs != d:
        raise SampleError(f"{path} has {n_inputs} input columns but {d} input laws are configured")
    if columns != expected:
        raise SampleError(f"{path} header is {columns}, expected {expected}")

    values = frame.apply(pd.to_numeric, errors="coerce")
    bad = np.flatnonzero(values.isna().any(axis=1).to_numpy())
    if bad.size:
        raise SampleError(f"{path} has missing or non-numeric values", rows=bad.tolist())
    data = values.to_numpy(dtype=float)
    logging.info(f"Loaded {data.shape[0]} runs with {d} inputs from {path}")
    return IOSample(data[:, :d], data[:, d], tuple(input_specs), input_names=input_names)
