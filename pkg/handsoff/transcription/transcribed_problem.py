"""Finite-dimensional image of the admissible set as bounded-variable LP data.

For a piecewise-constant control the admissible set becomes

    {u : G u = -xi, -1 <= u_k <= 1},

where column k of G is g_k (see handsoff.matfun.propagation). The L1 cost
h * sum_k |u_k| is linearized by the split u_k = p_k - q_k with
p_k, q_k in [0, 1] and cost h * (p_k + q_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from handsoff.core.control_signal import ControlSignal
from handsoff.core.exceptions import BadInputError
from handsoff.core.grid import Grid
from handsoff.core.lti_system import LtiSystem
from handsoff.matfun.propagation import input_columns


@dataclass(frozen=True, eq=False)
class TranscribedProblem:
    """Represents the transcribed constraint data.

    Attributes:
        grid: The time grid.
        G: Constraint matrix of shape (n, N).
        rhs: Right-hand side -xi.
        lower: Lower bounds of u (all -1).
        upper: Upper bounds of u (all +1).
    """

    grid: Grid
    G: np.ndarray
    rhs: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    @property
    def h(self) -> float:
        """Returns the cell width."""
        return self.grid.h

    @property
    def n(self) -> int:
        """Returns the number of constraint rows."""
        return self.G.shape[0]

    @property
    def N(self) -> int:
        """Returns the number of cells."""
        return self.G.shape[1]

    def with_rhs(self, xi: np.ndarray) -> TranscribedProblem:
        """Returns the same problem for another initial state.

        Args:
            xi: Initial state.

        Returns:
            Problem sharing G and bounds, with right-hand side -xi.
        """
        return TranscribedProblem(
            self.grid, self.G, _rhs_for(xi, self.n), self.lower, self.upper
        )

    def split_costs(self) -> np.ndarray:
        """Returns the LP cost vector h * 1 over the variables (p, q)."""
        return np.full(2 * self.N, self.h)

    def split_matrix(self) -> np.ndarray:
        """Returns the LP constraint matrix [G, -G] over (p, q)."""
        return np.hstack([self.G, -self.G])

    def split_bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns the bounds [0, 1] of every split variable."""
        return np.zeros(2 * self.N), np.ones(2 * self.N)

    def budget_system(
        self, alpha: Optional[float]
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Returns the split LP, optionally augmented with an L1 budget row.

        The budget row is h * sum_k (p_k + q_k) + s = alpha with a slack
        s >= 0.

        Args:
            alpha: L1 budget, or None for no budget row.

        Returns:
            Tuple (costs, matrix, rhs, lower, upper).
        """
        costs = self.split_costs()
        matrix = self.split_matrix()
        lower, upper = self.split_bounds()
        rhs = self.rhs.copy()
        if alpha is None:
            return costs, matrix, rhs, lower, upper

        budget_row = np.concatenate([np.full(2 * self.N, self.h), [1.0]])
        matrix = np.vstack(
            [np.hstack([matrix, np.zeros((self.n, 1))]), budget_row]
        )
        return (
            np.concatenate([costs, [0.0]]),
            matrix,
            np.concatenate([rhs, [float(alpha)]]),
            np.concatenate([lower, [0.0]]),
            np.concatenate([upper, [np.inf]]),
        )

    def control_from_split(self, x: np.ndarray) -> ControlSignal:
        """Reconstructs u_k = p_k - q_k from split variables.

        Args:
            x: LP variables; the first 2N entries are (p, q).

        Returns:
            The control signal.
        """
        p = x[: self.N]
        q = x[self.N : 2 * self.N]
        return ControlSignal(self.grid, p - q)

    def residual(self, u: ControlSignal) -> np.ndarray:
        """Returns G u - rhs for a control on this grid."""
        return self.G @ u.values - self.rhs


def _rhs_for(xi: np.ndarray, n: int) -> np.ndarray:
    """Returns -xi as a float vector after checking its shape."""
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    if xi.shape != (n,):
        raise BadInputError(
            f"Initial state must have {n} entries, got shape {xi.shape}."
        )
    if not np.all(np.isfinite(xi)):
        raise BadInputError("Initial state must be finite.")
    return -xi


def transcribe(sys: LtiSystem, xi: np.ndarray, N: int) -> TranscribedProblem:
    """Builds the transcribed problem for an initial state.

    Args:
        sys: A validated plant.
        xi: Initial state (n-vector).
        N: Number of cells, at least max(n, 2).

    Raises:
        ValueError: if the plant has not been validated.
        BadInputError: if N is too small or xi is malformed.

    Returns:
        The transcribed problem.
    """
    if not sys.validated:
        raise ValueError(
            "The plant must be validated before transcription; call "
            "validate_assumption first."
        )
    if int(N) != N or N < max(sys.n, 2):
        raise BadInputError(
            f"Cell count must be an integer >= {max(sys.n, 2)}, got {N!r}."
        )
    grid = Grid(sys.T, int(N))
    rhs = _rhs_for(xi, sys.n)
    G = input_columns(sys, grid)
    G.flags.writeable = False
    return TranscribedProblem(
        grid=grid,
        G=G,
        rhs=rhs,
        lower=-np.ones(grid.N),
        upper=np.ones(grid.N),
    )
