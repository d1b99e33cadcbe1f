from __future__ import annotations


class MeanBoundsError(Exception):
    """Base class of every error raised by the package."""


class DomainError(MeanBoundsError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class NotCoveredError(MeanBoundsError):
    """Raised when a bound is requested for parameters no result covers."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"not covered: {reason}")
        self.reason = reason


class SearchNotConvergedError(MeanBoundsError, RuntimeError):
    """Raised by a strict extremum search that exhausted its iterations."""
