"""Tolerances of the bounded-variable simplex method.

All numeric thresholds used by the LP layer live in this single record so that
they can be tuned (and reported) in one place.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class LpTolerances:
    """Numeric thresholds of the simplex method.

    Attributes:
        feasibility: Relative phase-1 optimum (and constraint residual) below
          which a problem counts as feasible; scaled by 1 + max |rhs|.
        bound: Allowed violation of variable bounds in a returned solution.
        pivot: Smallest pivot magnitude accepted in the ratio test.
        optimality: Reduced-cost threshold for pricing, scaled by
          1 + max |c|.
        degenerate_step: Step length at or below which a pivot counts as
          degenerate.
        bland_factor: Bland's rule is engaged after
          bland_factor * (rows + columns) degenerate pivots.
        refactor_interval: Number of iterations between recomputations of the
          basis inverse from scratch.
        max_iterations: Iteration cap per phase; 0 selects
          50 * (rows + columns) + 1000.
    """

    feasibility: float = 1e-8
    bound: float = 1e-9
    pivot: float = 1e-11
    optimality: float = 1e-9
    degenerate_step: float = 1e-12
    bland_factor: int = 5
    refactor_interval: int = 100
    max_iterations: int = 0

    def __post_init__(self) -> None:
        for name in ("feasibility", "bound", "pivot", "optimality"):
            if getattr(self, name) <= 0:
                raise ValueError(f"Tolerance '{name}' must be positive.")
        if self.refactor_interval < 1:
            raise ValueError("refactor_interval must be at least 1.")
        if self.bland_factor < 0 or self.max_iterations < 0:
            raise ValueError(
                "bland_factor and max_iterations must be non-negative."
            )

    def iteration_cap(self, rows: int, columns: int) -> int:
        """Returns the iteration cap for a problem of the given size.

        Args:
            rows: Number of equality constraints.
            columns: Number of variables, artificials included.

        Returns:
            Maximum number of iterations per phase.
        """
        if self.max_iterations:
            return self.max_iterations
        return 50 * (rows + columns) + 1000
