"""Exact zero-order-hold integrals of the plant.

For a piecewise-constant control the constraint integral of the admissible
set, int_0^T e^{-As} B u(s) ds, splits into per-cell columns

    g_k = int_{t_k}^{t_{k+1}} e^{-As} B ds = e^{-A t_k} int_0^h e^{-As} B ds,

and the inner integral is the top-right block of the exponential of the
augmented matrix [[-A, B], [0, 0]] scaled by h. No quadrature is involved.
"""

from typing import Tuple

import numpy as np

from handsoff.core.grid import Grid
from handsoff.core.lti_system import LtiSystem
from handsoff.matfun.expm import expm


def _augmented_integral(
    state_matrix: np.ndarray, input_vector: np.ndarray, duration: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Returns (e^{F d}, int_0^d e^{Fs} ds b) for F = state_matrix.

    Args:
        state_matrix: Matrix F of shape (n, n).
        input_vector: Vector b of shape (n,).
        duration: Integration length d.

    Returns:
        The propagator and the input integral.
    """
    n = state_matrix.shape[0]
    augmented = np.zeros((n + 1, n + 1))
    augmented[:n, :n] = state_matrix
    augmented[:n, n] = input_vector
    exponential = expm(augmented, duration).matrix
    return exponential[:n, :n], exponential[:n, n]


def cell_input_column(sys: LtiSystem, grid: Grid, k: int) -> np.ndarray:
    """Computes g_k = int_{t_k}^{t_{k+1}} e^{-As} B ds.

    Args:
        sys: The plant.
        grid: The grid.
        k: Cell index in [0, N).

    Returns:
        The n-vector g_k.
    """
    t_k = grid.cell_start(k)
    _, cell_integral = _augmented_integral(-sys.A, sys.B, grid.h)
    return expm(-sys.A, t_k).matrix @ cell_integral


def input_columns(sys: LtiSystem, grid: Grid) -> np.ndarray:
    """Computes all columns g_0, ..., g_{N-1} as an n x N matrix.

    Each column is formed as e^{-A t_k} times the cell integral, exactly as
    cell_input_column does, so that both agree to the last bit.

    Args:
        sys: The plant.
        grid: The grid.

    Returns:
        Matrix whose k-th column is g_k.
    """
    _, cell_integral = _augmented_integral(-sys.A, sys.B, grid.h)
    columns = np.empty((sys.n, grid.N))
    for k in range(grid.N):
        columns[:, k] = expm(-sys.A, grid.cell_start(k)).matrix @ cell_integral
    return columns


def input_integral(sys: LtiSystem) -> np.ndarray:
    """Computes int_0^T e^{-As} B ds with a single augmented exponential.

    Args:
        sys: The plant.

    Returns:
        The n-vector integral over the whole horizon.
    """
    _, integral = _augmented_integral(-sys.A, sys.B, sys.T)
    return integral


def zoh_matrices(sys: LtiSystem, h: float) -> Tuple[np.ndarray, np.ndarray]:
    """Returns the exact one-cell propagation pair of the plant.

    Args:
        sys: The plant.
        h: Cell width.

    Returns:
        (e^{Ah}, int_0^h e^{As} ds B), so that
        x_{k+1} = e^{Ah} x_k + (int_0^h e^{As} ds B) u_k.
    """
    return _augmented_integral(sys.A, sys.B, h)
