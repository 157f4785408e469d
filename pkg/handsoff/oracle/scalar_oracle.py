"""Closed-form maximum hands-off control of a stable scalar plant.

For x' = a x + b u with a < 0 and b != 0 everything is explicit:

    R = [-x1, x1],        x1 = -|b| / a * (e^{-aT} - 1),
    tau(xi) = -1/a * ln(e^{-aT} + a |xi / b|),
    V(xi) = T - tau(xi),
    u(t) = 0 on [0, tau), -sgn(b) sgn(xi) on [tau, T].

These serve as ground truth for the discretized solver.
"""

import math
from dataclasses import dataclass

import numpy as np

from handsoff.core.control_signal import ControlSignal
from handsoff.core.exceptions import BadInputError, OutOfReachError
from handsoff.core.grid import Grid
from handsoff.core.lti_system import LtiSystem


@dataclass(frozen=True)
class Scalar1dSystem:
    """Represents the scalar plant x' = a x + b u on [0, T].

    Attributes:
        a: Strictly negative pole.
        b: Non-zero input gain.
        T: Horizon length (> 0).
    """

    a: float
    b: float
    T: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "T"):
            if not math.isfinite(getattr(self, name)):
                raise BadInputError(f"Parameter {name} must be finite.")
        if self.a >= 0:
            raise BadInputError(f"The pole a must be negative, got {self.a}.")
        if self.b == 0:
            raise BadInputError("The input gain b must be non-zero.")
        if self.T <= 0:
            raise BadInputError(f"Horizon must be positive, got {self.T}.")

    @classmethod
    def from_lti_system(cls, sys: LtiSystem) -> "Scalar1dSystem":
        """Creates the scalar plant from a one-dimensional LtiSystem.

        Args:
            sys: The plant.

        Raises:
            BadInputError: if the plant is not scalar with a < 0.

        Returns:
            The scalar plant.
        """
        if sys.n != 1:
            raise BadInputError(
                f"The closed form needs a scalar plant, got n={sys.n}."
            )
        return cls(float(sys.A[0, 0]), float(sys.B[0]), sys.T)

    def to_lti_system(self) -> LtiSystem:
        """Returns the plant as a one-dimensional LtiSystem."""
        return LtiSystem(A=[[self.a]], B=[self.b], T=self.T)


def reachable_interval(s: Scalar1dSystem) -> float:
    """Returns the half-width x1 of the reachable set R = [-x1, x1]."""
    return -abs(s.b) / s.a * math.expm1(-s.a * s.T)


def _check_reach(s: Scalar1dSystem, xi: float) -> float:
    """Returns the reach bound after rejecting |xi| > x1."""
    bound = reachable_interval(s)
    if not math.isfinite(xi) or abs(xi) > bound:
        raise OutOfReachError(xi, bound)
    return bound


def switching_time(s: Scalar1dSystem, xi: float) -> float:
    """Computes the time tau at which the optimal control switches on.

    Args:
        s: The plant.
        xi: Initial state with |xi| <= x1.

    Raises:
        OutOfReachError: if |xi| > x1.

    Returns:
        tau in [0, T]; T for xi = 0 and 0 at the boundary of R.
    """
    _check_reach(s, xi)
    # The argument is at least 1 inside R; clamp roundoff at the boundary.
    argument = max(math.exp(-s.a * s.T) + s.a * abs(xi / s.b), 1.0)
    return min(-math.log(argument) / s.a, s.T)


def oracle_value(s: Scalar1dSystem, xi: float) -> float:
    """Computes V(xi) = T - tau(xi).

    Args:
        s: The plant.
        xi: Initial state with |xi| <= x1.

    Raises:
        OutOfReachError: if |xi| > x1.

    Returns:
        The value function at xi.
    """
    return s.T - switching_time(s, xi)


def oracle_control(s: Scalar1dSystem, xi: float, grid: Grid) -> ControlSignal:
    """Samples the closed-form optimal control onto a grid.

    Cells before tau are 0 and cells after it are -sgn(b) sgn(xi). The cell
    containing tau takes the value of the part it overlaps more; a tie goes
    to the later part.

    Args:
        s: The plant.
        xi: Initial state with |xi| <= x1.
        grid: Grid over [0, T].

    Raises:
        OutOfReachError: if |xi| > x1.
        ValueError: if the grid horizon differs from the plant horizon.

    Returns:
        The sampled control.
    """
    if not math.isclose(grid.T, s.T, rel_tol=1e-12):
        raise ValueError(
            f"Grid horizon {grid.T} differs from plant horizon {s.T}."
        )
    tau = switching_time(s, xi)
    level = -np.sign(s.b) * np.sign(xi)
    starts = grid.times[:-1]
    ends = grid.times[1:]
    before = np.clip(tau - starts, 0.0, grid.h)
    after = np.clip(ends - tau, 0.0, grid.h)
    values = np.where(after >= before, level, 0.0)
    return ControlSignal(grid, values)


def lipschitz_bound(s: Scalar1dSystem, radius: float) -> float:
    """Bounds |dV/dxi| on [-radius, radius].

    The derivative 1 / (|b| e^{-aT} + a |xi|) grows with |xi|, so the bound
    is its value at the ends of the interval.

    Args:
        s: The plant.
        radius: Half-width of the interval, at most x1.

    Raises:
        ValueError: if radius is negative.
        OutOfReachError: if radius > x1.

    Returns:
        The Lipschitz constant of V on the interval.
    """
    if radius < 0:
        raise ValueError(f"Radius must be non-negative, got {radius}.")
    bound = reachable_interval(s)
    denominator = abs(s.b) * math.exp(-s.a * s.T) + s.a * radius
    if radius > bound or denominator <= 0:
        raise OutOfReachError(radius, bound)
    return 1.0 / denominator
