"""Exception types shared across the package.

Each data-facing error also subclasses the closest builtin so callers that only know `ValueError` still catch it.
The CLI maps `DataError` subclasses to exit status 3 and `InvariantViolationError` to 4.
"""

from __future__ import annotations


class LindecError(Exception):
    pass


class DataError(LindecError):
    """Base for failures caused by the inputs rather than by the code."""


class ArtifactError(DataError):
    """A dumped model or evaluation partition is missing or unreadable."""


class DegenerateVarianceError(DataError, ValueError):
    """R² is undefined because the reference vector has (near) zero population variance."""

    def __init__(self, message: str, statistic: str | None = None):
        super().__init__(message)
        self.statistic = statistic


class EmptyDataError(DataError, ValueError):
    pass


class InvariantViolationError(LindecError, RuntimeError):
    pass


class ParameterError(DataError, ValueError):
    pass


class ParseError(DataError, ValueError):
    def __init__(self, message: str, column: str | None = None, row: int | None = None):
        super().__init__(message)
        self.column = column
        self.row = row


class SchemaError(DataError, ValueError):
    pass


class ShapeError(DataError, ValueError):
    pass
