"""The fixed input/output Monte Carlo sample every estimator reweights."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/estimation/iosample.ipynb.

# %% auto 0
__all__ = ['IOSample']

# %% ../../nbs/estimation/iosample.ipynb 2
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..distributions.families import DistributionSpec
from ..utils.errors import SampleError

# %% ../../nbs/estimation/iosample.ipynb 3
@dataclass(frozen=True, eq=False)
class IOSample:
    "`N` input rows paired with `N` outputs; row `n` of `inputs` produced `outputs[n]`."

    inputs: np.ndarray  # (N, d)
    outputs: np.ndarray  # (N,)
    input_specs: Tuple[DistributionSpec, ...]
    rows: Optional[np.ndarray] = None  # original row ids, 0..N-1 for a fresh sample
    input_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        specs = tuple(self.input_specs)
        d = len(specs)
        if d == 0:
            raise SampleError("a sample needs at least one input")
        inputs = np.array(self.inputs, dtype=float)
        if inputs.size == 0:
            inputs = inputs.reshape(0, d)
        if inputs.ndim != 2 or inputs.shape[1] != d:
            raise SampleError(f"inputs of shape {inputs.shape} do not match {d} input laws")
        outputs = np.array(self.outputs, dtype=float).reshape(-1)
        if inputs.shape[0] != outputs.shape[0]:
            raise SampleError(f"{inputs.shape[0]} input rows for {outputs.shape[0]} outputs")
        rows = np.arange(outputs.shape[0]) if self.rows is None else np.array(self.rows, dtype=int)
        names = tuple(self.input_names) if self.input_names is not None else tuple(f"x{j + 1}" for j in range(d))
        if len(names) != d:
            raise SampleError(f"{len(names)} input names for {d} inputs")
        for j, spec in enumerate(specs):
            lo, hi = spec.support
            column = inputs[:, j]
            outside = np.flatnonzero(~((column >= lo) & (column <= hi)))
            if outside.size:
                raise SampleError(f"input {names[j]} leaves its support [{lo}, {hi}]", rows=outside.tolist())
        # read-only views keep the row pairing immutable
        for array in (inputs, outputs, rows):
            array.flags.writeable = False
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "input_specs", specs)
        object.__setattr__(self, "input_names", names)

    @property
    def N(self) -> int:
        return int(self.outputs.shape[0])

    @property
    def d(self) -> int:
        return len(self.input_specs)

    def take(self, idx: Sequence[int]) -> "IOSample":
        "Rows `idx` (repetitions allowed), inputs and outputs kept paired."
        idx = np.asarray(idx, dtype=int)
        return IOSample(self.inputs[idx], self.outputs[idx], self.input_specs, self.rows[idx], self.input_names)

    def index_of(self, name_or_index) -> int:
        "Input index from a 0-based index or an input name."
        if isinstance(name_or_index, (int, np.integer)):
            if not 0 <= name_or_index < self.d:
                raise SampleError(f"input index {name_or_index} out of range for d={self.d}")
            return int(name_or_index)
        if name_or_index not in self.input_names:
            raise SampleError(f"unknown input {name_or_index!r}, expected one of {list(self.input_names)}")
        return self.input_names.index(name_or_index)

    def equals(self, other: "IOSample") -> bool:
        return (
            self.input_specs == other.input_specs
            and np.array_equal(self.inputs, other.inputs)
            and np.array_equal(self.outputs, other.outputs)
        )
