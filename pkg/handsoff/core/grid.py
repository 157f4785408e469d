"""Uniform time grid partitioning the horizon [0, T] into N cells."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Represents a uniform grid with N cells of width h = T / N.

    Attributes:
        T: Horizon length (> 0).
        N: Number of cells (>= 1).
    """

    T: float
    N: int

    def __post_init__(self) -> None:
        if not np.isfinite(self.T) or self.T <= 0:
            raise ValueError(f"Horizon must be positive, got {self.T!r}.")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"Cell count must be >= 1, got {self.N!r}.")
        object.__setattr__(self, "T", float(self.T))
        object.__setattr__(self, "N", int(self.N))

    @property
    def h(self) -> float:
        """Returns the cell width."""
        return self.T / self.N

    @property
    def times(self) -> np.ndarray:
        """Returns the N + 1 grid points t_k = k h; the last one is T."""
        times = np.arange(self.N + 1, dtype=float) * self.h
        times[-1] = self.T
        return times

    def cell_start(self, k: int) -> float:
        """Returns t_k, the left end of cell k.

        Args:
            k: Cell index in [0, N).

        Raises:
            IndexError: if the index is outside the grid.

        Returns:
            Start time of the cell.
        """
        if not 0 <= k < self.N:
            raise IndexError(f"Cell index {k} outside [0, {self.N}).")
        return k * self.h
