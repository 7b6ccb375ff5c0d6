"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ResolveKitError(Exception):
    """Base class for all library errors."""


class InvalidParameters(ResolveKitError, ValueError):
    pass


class HypothesisViolated(ResolveKitError, ValueError):
    """A criterion was requested outside the range where it is valid."""


class PreconditionError(ResolveKitError, ValueError):
    pass


class ConstructionError(ResolveKitError, RuntimeError):
    """A construction produced an output that failed re-verification."""


class UnsupportedK(ResolveKitError, ValueError):
    pass


class BudgetExhausted(ResolveKitError, RuntimeError):
    """A search ran out of nodes before reaching a definitive answer.

    ``lower`` and ``upper`` carry the best interval known when the search
    stopped (``upper`` may be ``None`` if no witness was found).
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class CapacityError(ResolveKitError, RuntimeError):
    """A group or enumeration exceeded its configured cap."""
