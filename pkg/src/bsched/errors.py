"""Exception types shared across the package."""

from __future__ import annotations


class SchedulingError(Exception):
    """Base class for every error raised by this library.

    ``field`` optionally names the offending input location (a dotted/indexed
    path such as ``"jobs[2]"``) so callers can point users at the bad value.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class ValidationError(SchedulingError):
    """An input violates a documented precondition or invariant."""


class LimitExceededError(SchedulingError):
    """The instance is too large for the requested exhaustive computation."""


class InternalError(SchedulingError):
    """An internal consistency check failed; this signals a bug, not bad input."""
