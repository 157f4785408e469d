"""Module level init for the linear programming layer."""
from handsoff.lp.bounded_simplex import BoundedSimplex, solve_lp
from handsoff.lp.lp_solution import LpSolution, LpStatus
from handsoff.lp.tolerances import LpTolerances

__all__ = [
    "BoundedSimplex",
    "LpSolution",
    "LpStatus",
    "LpTolerances",
    "solve_lp",
]
