"""Matrix exponential by scaling and squaring with Pade approximants.

Implements the degree-selection scheme of Higham (2005): the smallest Pade
degree m in {3, 5, 7, 9, 13} whose theta_m bounds the 1-norm of the argument
is used directly; larger arguments are scaled by 2^-s into the degree-13
range and the approximant is squared s times.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from handsoff.core.exceptions import NumericFailureError

# Coefficients of the degree-13 approximant; lower degrees are listed below.
_PADE_13 = (
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
)
_PADE_LOW: Dict[int, Tuple[float, ...]] = {
    3: (120.0, 60.0, 12.0, 1.0),
    5: (30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0),
    7: (
        17297280.0,
        8648640.0,
        1995840.0,
        277200.0,
        25200.0,
        1512.0,
        56.0,
        1.0,
    ),
    9: (
        17643225600.0,
        8821612800.0,
        2075673600.0,
        302702400.0,
        30270240.0,
        2162160.0,
        110880.0,
        3960.0,
        90.0,
        1.0,
    ),
}

# Largest 1-norm for which the degree-m approximant is accurate to unit
# roundoff in double precision.
_THETA = {
    3: 1.495585217958292e-2,
    5: 2.539398330063230e-1,
    7: 9.504178996162932e-1,
    9: 2.097847961257068e0,
    13: 5.371920351148152e0,
}


@dataclass(frozen=True, eq=False)
class ExpmResult:
    """Result of a matrix exponential.

    Attributes:
        matrix: The propagator e^{At}, shape (n, n).
        squarings: Number of squarings applied after the Pade step.
        degree: Degree of the Pade approximant used.
    """

    matrix: np.ndarray
    squarings: int = 0
    degree: int = 13


def _pade_low(
    a: np.ndarray, identity: np.ndarray, degree: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Returns the odd (U) and even (V) parts of a low-degree approximant."""
    coefficients = _PADE_LOW[degree]
    a2 = a @ a
    powers = [identity, a2]
    for _ in range(2, (degree + 1) // 2):
        powers.append(powers[-1] @ a2)
    odd = sum(
        coefficients[2 * i + 1] * powers[i] for i in range(len(powers))
    )
    even = sum(coefficients[2 * i] * powers[i] for i in range(len(powers)))
    return a @ odd, even


def _pade_13(
    a: np.ndarray, identity: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Returns the odd (U) and even (V) parts of the degree-13 approximant."""
    c = _PADE_13
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a2 @ a4
    odd = a @ (
        a6 @ (c[13] * a6 + c[11] * a4 + c[9] * a2)
        + c[7] * a6
        + c[5] * a4
        + c[3] * a2
        + c[1] * identity
    )
    even = (
        a6 @ (c[12] * a6 + c[10] * a4 + c[8] * a2)
        + c[6] * a6
        + c[4] * a4
        + c[2] * a2
        + c[0] * identity
    )
    return odd, even


_APPROXIMANTS: Dict[
    int, Callable[[np.ndarray, np.ndarray], Tuple[np.ndarray, np.ndarray]]
] = {
    degree: (lambda a, i, d=degree: _pade_low(a, i, d)) for degree in _PADE_LOW
}
_APPROXIMANTS[13] = _pade_13


def expm(A: np.ndarray, t: float = 1.0) -> ExpmResult:
    """Computes e^{At}.

    Args:
        A: Square matrix with finite entries.
        t: Time scaling. Defaults to 1.

    Raises:
        ValueError: if A is not square.
        NumericFailureError: if the data is not finite or the result
          overflows.

    Returns:
        The propagator and the degree/squaring count used.
    """
    a = np.atleast_2d(np.asarray(A, dtype=float)) * float(t)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Matrix must be square, got shape {a.shape}.")
    if not np.all(np.isfinite(a)):
        raise NumericFailureError("Matrix exponential of non-finite data.")

    identity = np.eye(a.shape[0])
    norm = float(np.max(np.sum(np.abs(a), axis=0))) if a.size else 0.0
    if norm == 0.0:
        return ExpmResult(identity, squarings=0, degree=0)

    squarings = 0
    for degree in (3, 5, 7, 9):
        if norm <= _THETA[degree]:
            break
    else:
        degree = 13
        if norm > _THETA[13]:
            squarings = int(np.ceil(np.log2(norm / _THETA[13])))
            a = a / 2.0**squarings

    with np.errstate(over="ignore", invalid="ignore"):
        odd, even = _APPROXIMANTS[degree](a, identity)
        try:
            result = np.linalg.solve(even - odd, even + odd)
        except np.linalg.LinAlgError as error:
            raise NumericFailureError(
                f"Singular Pade denominator: {error}"
            ) from error
        for _ in range(squarings):
            result = result @ result

    if not np.all(np.isfinite(result)):
        raise NumericFailureError(
            f"Matrix exponential overflowed (1-norm of At is {norm:.3e})."
        )
    return ExpmResult(result, squarings=squarings, degree=degree)
