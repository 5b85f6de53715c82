"""Exception hierarchy for the package."""

from __future__ import annotations


class BoolDiffError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BoolDiffError):
    """An argument lies outside the domain an operation is defined on."""


class DimensionError(DomainError):
    """Operands disagree on the ground set [n] or on matrix shape."""


class CapacityError(BoolDiffError):
    """The requested computation exceeds a configured size cap."""


class ParseError(BoolDiffError):
    """Malformed text input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
