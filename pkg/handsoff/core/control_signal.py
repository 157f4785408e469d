"""Piecewise-constant control signals and their L0, L1 and Linf norms.

A control takes the constant value u_k on cell k of a uniform grid (zero-order
hold). The norms are exact for such signals:

    ||u||_1 = h * sum_k |u_k|,  ||u||_inf = max_k |u_k|,
    ||u||_0 = h * #{k : |u_k| > eps_zero}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from handsoff.core.grid import Grid


@dataclass(frozen=True)
class ZeroTolerance:
    """Threshold below which a control value counts as zero.

    Attributes:
        eps_zero: Threshold in (0, 0.5).
    """

    eps_zero: float = 1e-6

    def __post_init__(self) -> None:
        if not 0 < self.eps_zero < 0.5:
            raise ValueError(
                f"eps_zero must lie in (0, 0.5), got {self.eps_zero!r}."
            )


@dataclass(frozen=True, eq=False)
class ControlSignal:
    """Represents a piecewise-constant control on a grid.

    Attributes:
        grid: The grid.
        values: The N cell values u_0, ..., u_{N-1}.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float).reshape(-1)
        if values.shape[0] != self.grid.N:
            raise ValueError(
                f"Expected {self.grid.N} cell values, got {values.shape[0]}."
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("Control values must be finite.")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: Grid) -> ControlSignal:
        """Returns the zero control on the grid."""
        return cls(grid, np.zeros(grid.N))

    def negated(self) -> ControlSignal:
        """Returns the control -u."""
        return ControlSignal(self.grid, -self.values)

    def is_admissible(self, feasibility_tolerance: float = 1e-9) -> bool:
        """Checks the magnitude constraint ||u||_inf <= 1.

        Args:
            feasibility_tolerance: Allowed excess over 1.

        Returns:
            True if every cell value lies in [-1 - tol, 1 + tol].
        """
        return linf_norm(self) <= 1.0 + feasibility_tolerance

    def l1_norm(self) -> float:
        """Returns the L1 norm."""
        return l1_norm(self)

    def linf_norm(self) -> float:
        """Returns the Linf norm."""
        return linf_norm(self)

    def l0_norm(self, tol: Optional[ZeroTolerance] = None) -> float:
        """Returns the L0 norm (measure of the numerical support)."""
        return l0_norm(self, tol)


def l1_norm(u: ControlSignal) -> float:
    """Computes ||u||_1 = h * sum_k |u_k|.

    Args:
        u: Control signal.

    Returns:
        The L1 norm.
    """
    return float(u.grid.h * np.sum(np.abs(u.values)))


def linf_norm(u: ControlSignal) -> float:
    """Computes ||u||_inf = max_k |u_k|.

    Args:
        u: Control signal.

    Returns:
        The Linf norm.
    """
    return float(np.max(np.abs(u.values)))


def l0_norm(
    u: ControlSignal, tol: Optional[Union[ZeroTolerance, float]] = None
) -> float:
    """Computes the length of the numerical support of u.

    Args:
        u: Control signal.
        tol: Zero tolerance (or a bare eps_zero). Defaults to
          ZeroTolerance().

    Returns:
        h times the number of cells with |u_k| > eps_zero.
    """
    if tol is None:
        tol = ZeroTolerance()
    elif not isinstance(tol, ZeroTolerance):
        tol = ZeroTolerance(float(tol))
    active = int(np.count_nonzero(np.abs(u.values) > tol.eps_zero))
    return float(u.grid.h * active)


def control_from_values(
    T: float, values: Sequence[float]
) -> ControlSignal:
    """Creates a control on the uniform grid implied by its values.

    Args:
        T: Horizon length.
        values: Cell values; their count defines N.

    Returns:
        The control signal.
    """
    values = list(values)
    return ControlSignal(Grid(T, len(values)), np.array(values, dtype=float))
