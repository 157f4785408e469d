"""Maximum hands-off control of a single-input LTI plant.

The L0-optimal control problem is solved through its L1 counterpart: under
controllability and nonsingularity of A the two value functions coincide and
the L1-optimal control is bang-off-bang. The L1 problem on a zero-order-hold
grid is a linear program (see handsoff.transcription), solved with the
bounded-variable simplex method. Its basic optimal solutions have at most n
cells strictly between the values {-1, 0, +1}.
"""

import logging
import threading
from typing import Dict, Optional, Tuple

import numpy as np

from handsoff.core.config import SolverConfig
from handsoff.core.control_signal import (
    ControlSignal,
    ZeroTolerance,
    l0_norm,
    l1_norm,
    linf_norm,
)
from handsoff.core.exceptions import InfeasibleError, NumericFailureError
from handsoff.core.lti_system import LtiSystem
from handsoff.lp.bounded_simplex import BoundedSimplex
from handsoff.lp.lp_solution import LpSolution, LpStatus
from handsoff.matfun.assumption import validate_assumption
from handsoff.matfun.propagation import zoh_matrices
from handsoff.solver.solve_report import CellKind, SolveReport
from handsoff.transcription.transcribed_problem import (
    TranscribedProblem,
    transcribe,
)

logger = logging.getLogger(__name__)


def classify_cells(
    u: ControlSignal, eps_zero: float = 1e-6, one_tolerance: float = 1e-6
) -> np.ndarray:
    """Classifies every cell value of a control.

    Args:
        u: Control signal.
        eps_zero: Values with |u_k| <= eps_zero are ZERO.
        one_tolerance: Values with |u_k| >= 1 - one_tolerance are saturated.

    Returns:
        Object array of CellKind, one per cell.
    """
    kinds = np.full(u.grid.N, CellKind.FRACTIONAL, dtype=object)
    magnitude = np.abs(u.values)
    kinds[magnitude <= eps_zero] = CellKind.ZERO
    saturated = magnitude >= 1.0 - one_tolerance
    kinds[saturated & (u.values > 0)] = CellKind.PLUS_ONE
    kinds[saturated & (u.values < 0)] = CellKind.MINUS_ONE
    return kinds


def simulate_terminal_state(
    sys: LtiSystem, xi: np.ndarray, u: ControlSignal
) -> np.ndarray:
    """Propagates x' = Ax + Bu from xi with exact per-cell steps.

    Args:
        sys: The plant.
        xi: Initial state.
        u: Zero-order-hold control.

    Returns:
        The state x(T).
    """
    propagator, input_step = zoh_matrices(sys, u.grid.h)
    state = np.array(xi, dtype=float).reshape(-1)
    for value in u.values:
        state = propagator @ state + input_step * value
    return state


class HandsOffSolver:
    def __init__(
        self,
        sys: LtiSystem,
        N: Optional[int] = None,
        config: Optional[SolverConfig] = None,
    ) -> None:
        """Solver for one plant on one grid.

        The constraint matrix G depends only on the plant and the grid, so it
        is assembled once and shared by all initial states. Instances hold no
        other state and may be used from several threads.

        Args:
            sys: The plant; validated here if not yet validated.
            N: Number of cells. Defaults to config.default_cells.
            config: Solver configuration. Defaults to SolverConfig().

        Raises:
            AssumptionError: if the plant violates the assumption.
            BadInputError: if N is not an integer of at least max(n, 2).
        """
        self._config = config or SolverConfig()
        self._system = sys if sys.validated else validate_assumption(sys)
        cells = self._config.default_cells if N is None else N
        self._problem = transcribe(
            self._system, np.zeros(self._system.n), cells
        )
        self._cells = self._problem.grid.N
        self._simplex = BoundedSimplex(self._config.lp)
        self._zero = ZeroTolerance(self._config.eps_zero)
        logger.info(
            f"Transcribed plant (n={self._system.n}, T={self._system.T}) on "
            f"{self._cells} cells"
        )

    @property
    def system(self) -> LtiSystem:
        """Returns the validated plant."""
        return self._system

    @property
    def N(self) -> int:
        """Returns the number of cells."""
        return self._cells

    @property
    def config(self) -> SolverConfig:
        """Returns the configuration."""
        return self._config

    @property
    def problem(self) -> TranscribedProblem:
        """Returns the transcribed problem for xi = 0."""
        return self._problem

    def solve(self, xi: np.ndarray) -> SolveReport:
        """Computes the maximum hands-off control for an initial state.

        Args:
            xi: Initial state.

        Raises:
            InfeasibleError: if xi is outside the discretized reachable set.
            NumericFailureError: if the simplex method fails numerically.

        Returns:
            The solve report.
        """
        problem = self._problem.with_rhs(xi)
        costs, matrix, rhs, lower, upper = problem.budget_system(None)
        solution = self._simplex.solve(costs, matrix, rhs, lower, upper)
        self._raise_for_status(solution)
        self._check_split(problem, solution)

        control = problem.control_from_split(solution.x)
        kinds = classify_cells(
            control, self._config.eps_zero, self._config.one_tolerance
        )
        fractional = int(np.sum(kinds == CellKind.FRACTIONAL))
        xi = -problem.rhs
        report = SolveReport(
            xi=xi,
            control=control,
            value=solution.objective,
            l1=l1_norm(control),
            l0=l0_norm(control, self._zero),
            linf=linf_norm(control),
            terminal_residual=simulate_terminal_state(
                self._system, xi, control
            ),
            status=solution.status,
            bang_off_bang_fraction=1.0 - fractional / control.grid.N,
            fractional_cells=fractional,
            iterations=solution.iterations,
        )
        logger.debug(
            f"Solved xi={xi.tolist()}: V={report.value:.6g}, "
            f"{solution.iterations} iterations, {fractional} fractional cells"
        )
        return report

    def value(self, xi: np.ndarray) -> float:
        """Returns V(xi).

        Args:
            xi: Initial state.

        Raises:
            InfeasibleError: if xi is outside the discretized reachable set.

        Returns:
            The value function at xi.
        """
        return self.solve(xi).value

    def feasible_with_budget(
        self, xi: np.ndarray, alpha: Optional[float] = None
    ) -> bool:
        """Decides membership of xi in R_alpha (or in R without a budget).

        Only phase 1 of the simplex method is run.

        Args:
            xi: Initial state.
            alpha: L1 budget (>= 0), or None for plain reachability.

        Raises:
            ValueError: if alpha is negative.
            NumericFailureError: if the simplex method fails numerically.

        Returns:
            True if an admissible control with L1 cost <= alpha exists.
        """
        if alpha is not None and alpha < 0:
            raise ValueError(f"Budget must be non-negative, got {alpha!r}.")
        problem = self._problem.with_rhs(xi)
        solution = self._simplex.solve(
            *problem.budget_system(alpha), phase_one_only=True
        )
        if solution.status is LpStatus.INFEASIBLE:
            return False
        if solution.status is not LpStatus.OPTIMAL:
            raise NumericFailureError(solution.message)
        return True

    def verify_terminal(self, report: SolveReport) -> np.ndarray:
        """Re-simulates a report's control and returns x(T).

        Args:
            report: A solve report for this plant.

        Returns:
            The terminal state, expected to be close to zero.
        """
        return simulate_terminal_state(self._system, report.xi, report.control)

    def terminal_tolerance(self, xi: np.ndarray) -> float:
        """Returns the accepted max-norm of x(T) for an initial state."""
        return self._config.terminal_tolerance * (
            1.0 + float(np.max(np.abs(xi)))
        )

    def _raise_for_status(self, solution: LpSolution) -> None:
        """Converts a non-optimal LP status into an exception."""
        if solution.status is LpStatus.INFEASIBLE:
            raise InfeasibleError(solution.phase_one_residual)
        if solution.status is not LpStatus.OPTIMAL:
            raise NumericFailureError(
                solution.message or f"LP terminated with {solution.status}"
            )

    def _check_split(
        self, problem: TranscribedProblem, solution: LpSolution
    ) -> None:
        """Asserts that no cell has both split parts positive."""
        p = solution.x[: problem.N]
        q = solution.x[problem.N : 2 * problem.N]
        overlap = float(np.max(np.minimum(p, q)))
        if overlap > self._config.lp.bound:
            raise NumericFailureError(
                f"Split variables overlap by {overlap:.3e} at an optimum."
            )


_SOLVERS: Dict[Tuple[LtiSystem, int], HandsOffSolver] = {}
_SOLVERS_LOCK = threading.Lock()


def shared_solver(sys: LtiSystem, N: int) -> HandsOffSolver:
    """Returns the solver of the last plant and grid seen, rebuilt on change."""
    key = (sys, int(N))
    with _SOLVERS_LOCK:
        solver = _SOLVERS.get(key)
        if solver is None:
            solver = HandsOffSolver(sys, N)
            _SOLVERS.clear()
            _SOLVERS[key] = solver
    return solver


def solve_hands_off(sys: LtiSystem, xi: np.ndarray, N: int) -> SolveReport:
    """Computes the maximum hands-off control (convenience wrapper).

    Args:
        sys: The plant.
        xi: Initial state.
        N: Number of cells.

    Returns:
        The solve report.
    """
    return HandsOffSolver(sys, N).solve(xi)


def value(sys: LtiSystem, xi: np.ndarray, N: int) -> float:
    """Returns V(xi) (convenience wrapper).

    Args:
        sys: The plant.
        xi: Initial state.
        N: Number of cells.

    Returns:
        The value function at xi.
    """
    return shared_solver(sys, N).value(xi)


def feasible_with_budget(
    sys: LtiSystem, xi: np.ndarray, N: int, alpha: Optional[float] = None
) -> bool:
    """Decides xi in R_alpha (convenience wrapper).

    Args:
        sys: The plant.
        xi: Initial state.
        N: Number of cells.
        alpha: L1 budget, or None for plain reachability.

    Returns:
        True if xi can be steered to the origin within the budget.
    """
    return shared_solver(sys, N).feasible_with_budget(xi, alpha)


def verify_terminal(sys: LtiSystem, report: SolveReport) -> np.ndarray:
    """Re-simulates a report's control from its initial state.

    Args:
        sys: The plant.
        report: The solve report.

    Returns:
        The terminal state x(T).
    """
    return simulate_terminal_state(sys, report.xi, report.control)
