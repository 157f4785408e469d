"""Bounded-variable primal simplex method.

Solves min c'x s.t. G x = rhs, lo <= x <= hi with dense linear algebra. The
method works on a revised tableau: the inverse of the (small) basis matrix is
kept explicitly, updated by elementary row operations after each pivot and
recomputed from scratch every `refactor_interval` iterations.

Nonbasic variables sit at one of their bounds. An entering variable either
moves all the way to its opposite bound (a bound flip, no basis change) or is
stopped by a basic variable reaching a bound, which then leaves the basis.

Phase 1 starts from all structural variables at a bound and one artificial
variable per row, and minimizes the sum of artificials. Phase 2 fixes the
artificials at zero and minimizes the true cost. Pricing follows Dantzig's
rule until the number of degenerate pivots exceeds
bland_factor * (rows + columns); from then on Bland's smallest-index rule is
used, which rules out cycling.
"""

import logging
from typing import Optional

import numpy as np

from handsoff.lp.lp_solution import LpSolution, LpStatus
from handsoff.lp.tolerances import LpTolerances

logger = logging.getLogger(__name__)


class _Tableau:
    def __init__(
        self,
        matrix: np.ndarray,
        rhs: np.ndarray,
        lower: np.ndarray,
        upper: np.ndarray,
        tolerances: LpTolerances,
    ) -> None:
        """Mutable simplex state shared by both phases.

        Args:
            matrix: Structural constraint matrix (m x n).
            rhs: Right-hand side.
            lower: Structural lower bounds.
            upper: Structural upper bounds.
            tolerances: Numeric thresholds.
        """
        self.tol = tolerances
        self.m, self.n_structural = matrix.shape
        self.rhs = rhs

        start = np.where(np.isfinite(lower), lower, upper)
        residual = rhs - matrix @ start
        signs = np.where(residual >= 0, 1.0, -1.0)

        self.matrix = np.hstack([matrix, np.diag(signs)])
        self.lower = np.concatenate([lower, np.zeros(self.m)])
        self.upper = np.concatenate([upper, np.full(self.m, np.inf)])
        self.x = np.concatenate([start, np.abs(residual)])
        self.at_upper = np.concatenate(
            [~np.isfinite(lower), np.zeros(self.m, dtype=bool)]
        )
        self.basis = np.arange(self.n_structural, self.n_structural + self.m)
        self.is_basic = np.zeros(self.n_structural + self.m, dtype=bool)
        self.is_basic[self.basis] = True
        self.basis_inverse = np.diag(signs)

        self.iterations = 0
        self.degenerate_pivots = 0
        self.use_bland = False
        self._since_refactor = 0
        self._bland_trigger = tolerances.bland_factor * (
            self.m + self.n_structural
        )

    @property
    def n_total(self) -> int:
        """Returns the number of variables including artificials."""
        return self.matrix.shape[1]

    def refactor(self) -> None:
        """Recomputes the basis inverse and the basic values from scratch.

        Raises:
            np.linalg.LinAlgError: if the basis matrix is singular.
        """
        basis_matrix = self.matrix[:, self.basis]
        self.basis_inverse = np.linalg.inv(basis_matrix)
        nonbasic_x = np.where(self.is_basic, 0.0, self.x)
        self.x[self.basis] = self.basis_inverse @ (
            self.rhs - self.matrix @ nonbasic_x
        )
        self._since_refactor = 0

    def fix_artificials(self) -> None:
        """Pins every artificial variable to zero for phase 2."""
        artificial = slice(self.n_structural, self.n_total)
        self.upper[artificial] = 0.0
        nonbasic = ~self.is_basic[artificial]
        self.x[artificial][nonbasic] = 0.0
        self.at_upper[artificial] = False

    def run(self, costs: np.ndarray) -> LpStatus:
        """Iterates the simplex method for the given costs.

        Args:
            costs: Cost vector over all variables (artificials included).

        Returns:
            OPTIMAL, UNBOUNDED or NUMERIC_FAILURE.
        """
        cap = self.tol.iteration_cap(self.m, self.n_total)
        optimality = self.tol.optimality * (1.0 + float(np.max(np.abs(costs))))
        movable = self.upper > self.lower
        phase_iterations = 0

        while True:
            if phase_iterations >= cap:
                logger.warning(f"Simplex iteration cap {cap} reached")
                return LpStatus.NUMERIC_FAILURE
            if self._since_refactor >= self.tol.refactor_interval:
                try:
                    self.refactor()
                except np.linalg.LinAlgError:
                    return LpStatus.NUMERIC_FAILURE

            duals = costs[self.basis] @ self.basis_inverse
            reduced = costs - duals @ self.matrix
            candidates = ~self.is_basic & movable
            can_increase = candidates & ~self.at_upper & (reduced < -optimality)
            can_decrease = candidates & self.at_upper & (reduced > optimality)
            eligible = can_increase | can_decrease
            if not eligible.any():
                return LpStatus.OPTIMAL

            if self.use_bland:
                entering = int(np.flatnonzero(eligible)[0])
            else:
                entering = int(
                    np.argmax(np.where(eligible, np.abs(reduced), -1.0))
                )
            direction = 1.0 if can_increase[entering] else -1.0

            column = self.basis_inverse @ self.matrix[:, entering]
            # Basic variables move by -step * rate.
            rate = direction * column
            basic_x = self.x[self.basis]
            ratios = np.full(self.m, np.inf)
            falling = rate > self.tol.pivot
            rising = rate < -self.tol.pivot
            ratios[falling] = (
                basic_x[falling] - self.lower[self.basis][falling]
            ) / rate[falling]
            ratios[rising] = (
                self.upper[self.basis][rising] - basic_x[rising]
            ) / -rate[rising]
            ratios = np.maximum(ratios, 0.0)

            row_step = float(np.min(ratios)) if self.m else np.inf
            flip_step = float(self.upper[entering] - self.lower[entering])
            step = min(row_step, flip_step)
            if not np.isfinite(step):
                return LpStatus.UNBOUNDED

            if step <= self.tol.degenerate_step:
                self.degenerate_pivots += 1
                if (
                    not self.use_bland
                    and self.degenerate_pivots >= self._bland_trigger
                ):
                    logger.debug(
                        f"Engaging Bland's rule after "
                        f"{self.degenerate_pivots} degenerate pivots"
                    )
                    self.use_bland = True

            self.x[self.basis] = basic_x - step * rate
            if flip_step <= row_step:
                if direction > 0:
                    self.x[entering] = self.upper[entering]
                else:
                    self.x[entering] = self.lower[entering]
                self.at_upper[entering] = direction > 0
            else:
                leaving_row = self._leaving_row(ratios, row_step, rate)
                pivot = column[leaving_row]
                if abs(pivot) < self.tol.pivot:
                    return LpStatus.NUMERIC_FAILURE
                leaving = int(self.basis[leaving_row])
                if rate[leaving_row] > 0:
                    self.x[leaving] = self.lower[leaving]
                    self.at_upper[leaving] = False
                else:
                    self.x[leaving] = self.upper[leaving]
                    self.at_upper[leaving] = True
                self.x[entering] += direction * step

                pivot_row = self.basis_inverse[leaving_row] / pivot
                self.basis_inverse -= np.outer(column, pivot_row)
                self.basis_inverse[leaving_row] = pivot_row
                self.basis[leaving_row] = entering
                self.is_basic[leaving] = False
                self.is_basic[entering] = True
                self.at_upper[entering] = False

            self.iterations += 1
            phase_iterations += 1
            self._since_refactor += 1

    def _leaving_row(
        self, ratios: np.ndarray, row_step: float, rate: np.ndarray
    ) -> int:
        """Chooses the leaving row among the rows attaining the min ratio.

        Under Bland's rule the basic variable with the smallest index leaves;
        otherwise the row with the largest pivot magnitude.
        """
        tied = np.flatnonzero(ratios <= row_step + self.tol.degenerate_step)
        if self.use_bland:
            return int(tied[np.argmin(self.basis[tied])])
        return int(tied[np.argmax(np.abs(rate[tied]))])


class BoundedSimplex:
    def __init__(self, tolerances: Optional[LpTolerances] = None) -> None:
        """Bounded-variable two-phase primal simplex solver.

        A solver instance holds only configuration; every call to solve works
        on fresh state, so instances may be shared across threads.

        Args:
            tolerances: Numeric thresholds. Defaults to LpTolerances().
        """
        self._tolerances = tolerances or LpTolerances()

    @property
    def tolerances(self) -> LpTolerances:
        """Returns the numeric thresholds."""
        return self._tolerances

    def solve(
        self,
        costs: np.ndarray,
        matrix: np.ndarray,
        rhs: np.ndarray,
        lower: np.ndarray,
        upper: np.ndarray,
        phase_one_only: bool = False,
    ) -> LpSolution:
        """Solves min c'x s.t. G x = rhs, lower <= x <= upper.

        Args:
            costs: Cost vector c.
            matrix: Constraint matrix G (m x n).
            rhs: Right-hand side (m-vector).
            lower: Lower bounds; may be -inf only where upper is finite.
            upper: Upper bounds; may be +inf.
            phase_one_only: Stop after phase 1 (feasibility check).

        Raises:
            ValueError: if the data is malformed.

        Returns:
            The solution. With phase_one_only, OPTIMAL means feasible and x is
            a feasible basic point.
        """
        costs = np.asarray(costs, dtype=float).reshape(-1)
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        rhs = np.atleast_1d(np.asarray(rhs, dtype=float))
        lower = np.asarray(lower, dtype=float).reshape(-1)
        upper = np.asarray(upper, dtype=float).reshape(-1)
        self._check_data(costs, matrix, rhs, lower, upper)

        tol = self._tolerances
        n_structural = matrix.shape[1]
        feasibility = tol.feasibility * (1.0 + float(np.max(np.abs(rhs))))
        tableau = _Tableau(matrix, rhs, lower, upper, tol)

        phase_one_costs = np.concatenate(
            [np.zeros(n_structural), np.ones(tableau.m)]
        )
        status = tableau.run(phase_one_costs)
        if status is not LpStatus.OPTIMAL:
            return self._result(tableau, costs, status, np.inf)
        try:
            tableau.refactor()
        except np.linalg.LinAlgError:
            return self._result(
                tableau, costs, LpStatus.NUMERIC_FAILURE, np.inf
            )
        phase_one_residual = float(
            np.sum(np.abs(tableau.x[n_structural:]))
        )
        logger.debug(
            f"Phase 1 finished after {tableau.iterations} iterations, "
            f"residual {phase_one_residual:.3e}"
        )
        if phase_one_residual > feasibility:
            return self._result(
                tableau, costs, LpStatus.INFEASIBLE, phase_one_residual
            )
        if phase_one_only:
            return self._result(
                tableau, costs, LpStatus.OPTIMAL, phase_one_residual
            )

        tableau.fix_artificials()
        phase_two_costs = np.concatenate([costs, np.zeros(tableau.m)])
        status = tableau.run(phase_two_costs)
        if status is LpStatus.OPTIMAL:
            try:
                tableau.refactor()
            except np.linalg.LinAlgError:
                status = LpStatus.NUMERIC_FAILURE
        return self._result(tableau, costs, status, phase_one_residual)

    def _result(
        self,
        tableau: _Tableau,
        costs: np.ndarray,
        status: LpStatus,
        phase_one_residual: float,
    ) -> LpSolution:
        """Packs the tableau state into an LpSolution and checks it."""
        tol = self._tolerances
        n_structural = tableau.n_structural
        lower = tableau.lower[:n_structural]
        upper = tableau.upper[:n_structural]
        x = tableau.x[:n_structural].copy()
        message = ""

        if status is LpStatus.OPTIMAL:
            violation = float(
                np.max(
                    np.concatenate(
                        [lower - x, x - upper, [0.0]]
                    )
                )
            )
            if violation > tol.bound:
                status = LpStatus.NUMERIC_FAILURE
                message = f"Bound violation {violation:.3e}"
            else:
                x = np.clip(x, lower, upper)

        structural = tableau.matrix[:, :n_structural]
        residual = (
            float(np.max(np.abs(structural @ x - tableau.rhs)))
            if tableau.m
            else 0.0
        )
        scale = 1.0 + float(np.max(np.abs(tableau.rhs))) if tableau.m else 1.0
        if status is LpStatus.OPTIMAL and residual > tol.feasibility * scale:
            status = LpStatus.NUMERIC_FAILURE
            message = f"Constraint residual {residual:.3e}"

        if status is LpStatus.NUMERIC_FAILURE and not message:
            message = "Numeric failure in the simplex iterations"
        elif status is LpStatus.INFEASIBLE:
            message = f"Phase-1 optimum {phase_one_residual:.3e}"
        return LpSolution(
            status=status,
            x=x,
            objective=float(costs @ x),
            iterations=tableau.iterations,
            phase_one_residual=phase_one_residual,
            residual=residual,
            basis=tableau.basis.copy(),
            message=message,
        )

    @staticmethod
    def _check_data(
        costs: np.ndarray,
        matrix: np.ndarray,
        rhs: np.ndarray,
        lower: np.ndarray,
        upper: np.ndarray,
    ) -> None:
        """Validates shapes, finiteness and bound ordering.

        Raises:
            ValueError: if the data is malformed.
        """
        m, n = matrix.shape
        if costs.shape != (n,) or lower.shape != (n,) or upper.shape != (n,):
            raise ValueError(
                "Costs and bounds must have one entry per column of G."
            )
        if rhs.shape != (m,):
            raise ValueError("Right-hand side must have one entry per row.")
        if not (
            np.all(np.isfinite(costs))
            and np.all(np.isfinite(matrix))
            and np.all(np.isfinite(rhs))
        ):
            raise ValueError("LP data must be finite.")
        if np.any(lower > upper):
            raise ValueError("Every lower bound must not exceed its upper.")
        if np.any(~np.isfinite(lower) & ~np.isfinite(upper)):
            raise ValueError("Free variables are not supported.")


def solve_lp(
    c: np.ndarray,
    G: np.ndarray,
    rhs: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    tolerances: Optional[LpTolerances] = None,
    phase_one_only: bool = False,
) -> LpSolution:
    """Solves min c'x s.t. G x = rhs, lower <= x <= upper.

    Args:
        c: Cost vector.
        G: Constraint matrix.
        rhs: Right-hand side.
        lower: Per-variable lower bounds.
        upper: Per-variable upper bounds.
        tolerances: Numeric thresholds. Defaults to LpTolerances().
        phase_one_only: Only decide feasibility.

    Returns:
        The LP solution.
    """
    return BoundedSimplex(tolerances).solve(
        c, G, rhs, lower, upper, phase_one_only=phase_one_only
    )
