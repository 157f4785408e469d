"""Module level init for the hands-off solver."""
from handsoff.solver.hands_off_solver import (
    HandsOffSolver,
    classify_cells,
    feasible_with_budget,
    shared_solver,
    simulate_terminal_state,
    solve_hands_off,
    value,
    verify_terminal,
)
from handsoff.solver.solve_report import CellKind, SolveReport

__all__ = [
    "CellKind",
    "HandsOffSolver",
    "SolveReport",
    "classify_cells",
    "feasible_with_budget",
    "shared_solver",
    "simulate_terminal_state",
    "solve_hands_off",
    "value",
    "verify_terminal",
]
