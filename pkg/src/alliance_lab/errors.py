"""Exception hierarchy shared by the library and the CLI exit-code mapping."""

from __future__ import annotations


class AllianceLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(AllianceLabError, ValueError):
    """Malformed or out-of-contract input (CLI exit code 1)."""


class BudgetExceeded(AllianceLabError):
    """A search hit its node or wall-clock budget.

    ``lo`` and ``hi`` bracket the optimum that was being computed; ``hi`` may be
    None when no feasible solution was seen before the abort.
    """

    def __init__(self, message: str, lo: int | None = None, hi: int | None = None,
                 nodes: int = 0):
        super().__init__(message)
        self.lo = lo
        self.hi = hi
        self.nodes = nodes


class ConvergenceError(AllianceLabError):
    """Power iteration did not reach the residual tolerance."""

    def __init__(self, message: str, estimate: float, residual: float):
        super().__init__(message)
        self.estimate = estimate
        self.residual = residual


class InconsistencyError(AllianceLabError):
    """An internal cross-check failed; always indicates a bug (exit code 3)."""
