"""Exception types shared across the package."""

from __future__ import annotations


class FinringError(Exception):
    """Base class for package errors."""


class RingBuildError(FinringError):
    """A ring or module construction received invalid arguments."""


class SpecError(FinringError):
    """A ring-spec file failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class BoundExceededError(FinringError):
    """An enumeration exceeded its configured search bound."""


class ConsistencyError(FinringError):
    """Two independently computed facts disagree; indicates an internal bug."""
