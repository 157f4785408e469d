"""Validation of the plant assumption: (A, B) controllable, A nonsingular."""

import logging

import numpy as np
import scipy.linalg

from handsoff.core.exceptions import AssumptionError
from handsoff.core.lti_system import LtiSystem

logger = logging.getLogger(__name__)

# Relative rank threshold, scaled by the largest column norm.
_RANK_TOLERANCE = 1e-10
# Relative determinant threshold, scaled by ||A||^n.
_DET_TOLERANCE = 1e-12


def controllability_matrix(sys: LtiSystem) -> np.ndarray:
    """Returns [B, AB, ..., A^{n-1} B] as an n x n matrix.

    Args:
        sys: The plant.

    Returns:
        The controllability matrix.
    """
    columns = [sys.B]
    for _ in range(1, sys.n):
        columns.append(sys.A @ columns[-1])
    return np.column_stack(columns)


def controllability_rank(sys: LtiSystem) -> int:
    """Computes the numerical rank of the controllability matrix.

    The rank is read off a column-pivoted QR decomposition, counting diagonal
    entries of R above 1e-10 times the largest column norm.

    Args:
        sys: The plant.

    Returns:
        The rank.
    """
    matrix = controllability_matrix(sys)
    scale = float(np.max(np.linalg.norm(matrix, axis=0)))
    if scale == 0.0:
        return 0
    r_factor = scipy.linalg.qr(matrix, mode="r", pivoting=True)[0]
    diagonal = np.abs(np.diag(r_factor))
    return int(np.count_nonzero(diagonal > _RANK_TOLERANCE * scale))


def is_nonsingular(sys: LtiSystem) -> bool:
    """Checks |det A| > 1e-12 * ||A||^n (spectral norm).

    Args:
        sys: The plant.

    Returns:
        True if A is numerically nonsingular.
    """
    norm = float(np.linalg.norm(sys.A, 2))
    determinant = abs(float(np.linalg.det(sys.A)))
    return determinant > _DET_TOLERANCE * norm**sys.n


def validate_assumption(sys: LtiSystem) -> LtiSystem:
    """Validates controllability of (A, B) and nonsingularity of A.

    Args:
        sys: The plant.

    Raises:
        AssumptionError: naming the first condition that fails.

    Returns:
        A copy of the system tagged as validated.
    """
    rank = controllability_rank(sys)
    if rank < sys.n:
        raise AssumptionError(
            "controllable",
            f"(A, B) is not controllable: controllability rank {rank} < "
            f"{sys.n}.",
        )
    if not is_nonsingular(sys):
        raise AssumptionError(
            "nonsingular", "A is singular (|det A| below threshold)."
        )
    logger.debug(f"Validated plant with n={sys.n}, T={sys.T}")
    return sys.with_validated()
