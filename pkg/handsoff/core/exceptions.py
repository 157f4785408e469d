"""Errors raised by the hands-off control toolkit.

Every error derives from HandsOffError so that callers (most notably the
command-line interface) can map failures to exit codes in one place.
"""

from typing import Optional


class HandsOffError(Exception):
    """Base class for all toolkit errors."""


class BadInputError(HandsOffError, ValueError):
    """Raised for malformed user input (flags, files, vectors)."""


class AssumptionError(HandsOffError, ValueError):
    def __init__(self, condition: str, message: Optional[str] = None) -> None:
        """Raised when a plant violates controllability or nonsingularity.

        Args:
            condition: Which condition failed, either "controllable" or
              "nonsingular".
            message: Optional human readable message.
        """
        self.condition = condition
        super().__init__(
            message or f"Plant violates the {condition} assumption."
        )


class InfeasibleError(HandsOffError):
    def __init__(self, phase_one_residual: float, message: str = "") -> None:
        """Raised when no admissible control exists on the grid.

        Args:
            phase_one_residual: Optimal phase-1 infeasibility. Small values
              mean the initial state is barely outside the reachable set.
            message: Optional human readable message.
        """
        self.phase_one_residual = phase_one_residual
        super().__init__(
            message
            or "Initial state is outside the discretized reachable set "
            f"(phase-1 residual {phase_one_residual:.3e})."
        )


class OutOfReachError(HandsOffError, ValueError):
    def __init__(self, xi: float, bound: float) -> None:
        """Raised by the closed-form oracle for |xi| beyond the reach bound.

        Args:
            xi: Requested initial state.
            bound: Half-width x1 of the reachable interval.
        """
        self.xi = xi
        self.bound = bound
        super().__init__(
            f"Initial state {xi!r} is outside the reachable interval "
            f"[{-bound!r}, {bound!r}]."
        )


class NumericFailureError(HandsOffError, ArithmeticError):
    """Raised when a computation loses numerical meaning.

    Typical causes are overflow in the matrix exponential, vanishing pivots
    and exhausted iteration budgets in the simplex method.
    """
