"""Interface representing a solved maximum hands-off control problem."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

import numpy as np

from handsoff.core.control_signal import ControlSignal
from handsoff.lp.lp_solution import LpStatus


class CellKind(Enum):
    """Represents the classification of a control cell value."""

    ZERO = 0
    PLUS_ONE = 1
    MINUS_ONE = -1
    FRACTIONAL = 2


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Represents the optimal control for one initial state.

    Attributes:
        xi: Initial state.
        control: The L1-optimal (hence maximum hands-off) control.
        value: V(xi), taken from the L1 objective of the LP.
        l1: L1 norm of the control.
        l0: L0 norm of the control (numerical support length).
        linf: Linf norm of the control.
        terminal_residual: x(T) after re-simulating the control from xi.
        status: LP status (OPTIMAL for every returned report).
        bang_off_bang_fraction: Share of cells with value in {-1, 0, +1}.
        fractional_cells: Number of cells strictly between the bands.
        iterations: Simplex iterations.
    """

    xi: np.ndarray
    control: ControlSignal
    value: float
    l1: float
    l0: float
    linf: float
    terminal_residual: np.ndarray
    status: LpStatus
    bang_off_bang_fraction: float
    fractional_cells: int
    iterations: int = 0

    @property
    def grid_cells(self) -> int:
        """Returns the number of cells N."""
        return self.control.grid.N

    def to_dict(self) -> Dict[str, Any]:
        """Returns the report in the solution-file layout.

        Returns:
            Dictionary with status, value, norms, bang-off-bang fraction,
            terminal residual, grid and cell values.
        """
        return {
            "status": self.status.value,
            "value": self.value,
            "l1": self.l1,
            "l0": self.l0,
            "linf": self.linf,
            "bang_off_bang_fraction": self.bang_off_bang_fraction,
            "fractional_cells": self.fractional_cells,
            "terminal_residual": [float(v) for v in self.terminal_residual],
            "xi": [float(v) for v in self.xi],
            "grid": {"T": self.control.grid.T, "N": self.control.grid.N},
            "u": [float(v) for v in self.control.values],
        }
