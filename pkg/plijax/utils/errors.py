"""Exception hierarchy shared by the library and the command line."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/utils/errors.ipynb.

# %% auto 0
__all__ = ['PliError', 'DomainError', 'SampleError', 'NumericalError', 'SphereEmptyError', 'UnsupportedError',
           'UnsupportedFamilyError', 'ConfigError']

# %% ../../nbs/utils/errors.ipynb 2
from typing import Optional, Sequence

# %% ../../nbs/utils/errors.ipynb 3
class PliError(Exception):
    "Base class of every error raised by `plijax`."


class DomainError(PliError, ValueError):
    "An argument lies outside the domain where the quantity is defined."


class SampleError(DomainError):
    "A sample file or matrix is malformed or inconsistent with its input laws."

    def __init__(
        self,
        message: str,
        rows: Optional[Sequence[int]] = None,  # offending row indices (0-based data rows)
    ):
        self.rows = list(rows) if rows is not None else []
        if self.rows:
            shown = ", ".join(str(r) for r in self.rows[:20])
            more = f" (+{len(self.rows) - 20} more)" if len(self.rows) > 20 else ""
            message = f"{message}; offending rows: {shown}{more}"
        super().__init__(message)


class NumericalError(PliError, ArithmeticError):
    "A numerical procedure failed or did not reach its tolerance."

    def __init__(
        self,
        message: str,
        tolerance: Optional[float] = None,  # achieved tolerance, when relevant
        row: Optional[int] = None,  # offending sample row, when relevant
    ):
        self.tolerance = tolerance
        self.row = row
        if tolerance is not None:
            message = f"{message} (achieved tolerance {tolerance:.3e})"
        if row is not None:
            message = f"{message} (row {row})"
        super().__init__(message)


class SphereEmptyError(NumericalError):
    "Every geodesic of a Fisher sphere left the parameter domain or failed."


class UnsupportedError(PliError, TypeError):
    "The operation is not available for this kind of object."


class UnsupportedFamilyError(UnsupportedError):
    "The distribution family has no structure for this operation."


class ConfigError(PliError, ValueError):
    "Invalid run configuration; `field` names the offending entry."

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
