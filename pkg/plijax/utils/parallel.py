"""Seed derivation, the thread pool used for independent work items, and progress bars."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/utils/parallel.ipynb.

# %% auto 0
__all__ = ['set_threads', 'get_threads', 'seed_sequence', 'derive_seed', 'derive_rng', 'parallel_map', 'set_progress', 'progress']

# %% ../../nbs/utils/parallel.ipynb 2
import os
from typing import Any, Callable, Iterable, List, Optional

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

# %% ../../nbs/utils/parallel.ipynb 3
_N_JOBS: Optional[int] = None


def set_threads(n_jobs: Optional[int] = None):
    "Size of the worker pool; `None` means every available core."
    global _N_JOBS
    if n_jobs is not None and n_jobs < 1:
        raise ValueError(f"threads must be a positive integer, got {n_jobs}")
    _N_JOBS = n_jobs


def get_threads() -> int:
    return _N_JOBS if _N_JOBS is not None else (os.cpu_count() or 1)

# %% ../../nbs/utils/parallel.ipynb 4
def seed_sequence(seed: int, *keys: int) -> np.random.SeedSequence:
    "Seed sequence keyed by `(seed, *keys)`; independent of scheduling order."
    if seed is None:
        raise ValueError("a seed is required")
    entropy = [int(seed)] + [int(k) for k in keys]
    if any(e < 0 for e in entropy):
        raise ValueError(f"seed and keys must be non-negative, got {entropy}")
    return np.random.SeedSequence(entropy)


def derive_seed(seed: int, *keys: int) -> int:
    return int(seed_sequence(seed, *keys).generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(seed_sequence(seed, *keys))

# %% ../../nbs/utils/parallel.ipynb 5
def parallel_map(
    fn: Callable[[Any], Any],
    items: Iterable[Any],
    n_jobs: Optional[int] = None,  # defaults to the size set with `set_threads`
) -> List[Any]:
    "Apply `fn` to every item on a thread pool, results in input order."
    items = list(items)
    n_jobs = get_threads() if n_jobs is None else n_jobs
    if n_jobs == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    return Parallel(n_jobs=n_jobs, prefer="threads")(delayed(fn)(item) for item in items)

# %% ../../nbs/utils/parallel.ipynb 6
_SHOW_PROGRESS = True


def set_progress(enabled: bool = True):
    global _SHOW_PROGRESS
    _SHOW_PROGRESS = enabled


def progress(iterable: Iterable[Any], desc: Optional[str] = None) -> tqdm:
    "Progress bar over `iterable`; a disabled bar when progress is switched off."
    return tqdm(iterable, desc=desc, leave=False, disable=not _SHOW_PROGRESS)
