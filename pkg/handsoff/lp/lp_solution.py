"""Interface representing the outcome of a linear program."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class LpStatus(Enum):
    """Represents the termination status of the simplex method."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    NUMERIC_FAILURE = "numeric_failure"


@dataclass(frozen=True, eq=False)
class LpSolution:
    """Represents a solution of min c'x s.t. G x = rhs, lo <= x <= hi.

    Attributes:
        status: Termination status.
        x: Variable vector (structural variables only).
        objective: c'x recomputed from x.
        iterations: Total number of simplex iterations, bound flips included.
        phase_one_residual: Optimal phase-1 infeasibility (sum of
          artificials).
        residual: Max-norm of G x - rhs.
        basis: Indices of the basic variables at termination (artificials
          are numbered after the structural variables).
        message: Optional diagnostic message.
    """

    status: LpStatus
    x: np.ndarray
    objective: float
    iterations: int
    phase_one_residual: float = 0.0
    residual: float = 0.0
    basis: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))
    message: str = ""

    @property
    def is_optimal(self) -> bool:
        """Returns True if the status is OPTIMAL."""
        return self.status is LpStatus.OPTIMAL

    def interior_count(self, lower: np.ndarray, upper: np.ndarray) -> int:
        """Counts variables strictly between their bounds.

        Args:
            lower: Lower bounds.
            upper: Upper bounds.

        Returns:
            Number of variables with lo + 1e-9 < x < hi - 1e-9.
        """
        interior = (self.x > lower + 1e-9) & (self.x < upper - 1e-9)
        return int(np.count_nonzero(interior))
