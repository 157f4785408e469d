"""Boundary probing of the reachable set and its budget-limited subsets.

R_alpha (states steerable to the origin with L1 cost at most alpha) is convex,
compact and contains the origin, so along a ray r d the membership test is
monotone in r and its boundary can be bracketed by bisection.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.core.exceptions import BadInputError, NumericFailureError
from handsoff.core.lti_system import LtiSystem
from handsoff.solver.hands_off_solver import HandsOffSolver, shared_solver

logger = logging.getLogger(__name__)

_UNIT_TOLERANCE = 1e-9
_MAX_RADIUS = 1e15

RadiusKey = Tuple[Tuple[float, ...], Optional[float]]


@dataclass(frozen=True)
class RaySample:
    """Represents the boundary point of R (or R_alpha) along a direction.

    Attributes:
        direction: Unit direction d.
        radius: Largest feasible r found, so that r d is on the boundary.
        alpha: Budget, or None for the reachable set itself.
    """

    direction: np.ndarray
    radius: float
    alpha: Optional[float] = None

    @property
    def boundary_point(self) -> np.ndarray:
        """Returns r d."""
        return self.radius * self.direction


def _unit_direction(d: np.ndarray, n: int) -> np.ndarray:
    """Returns d as a float vector after checking its shape and norm."""
    d = np.atleast_1d(np.asarray(d, dtype=float))
    if d.shape != (n,):
        raise BadInputError(f"Direction must have {n} entries, got {d.shape}.")
    if abs(np.linalg.norm(d) - 1.0) > _UNIT_TOLERANCE:
        raise BadInputError(
            f"Direction must have unit norm, got {np.linalg.norm(d)!r}."
        )
    return d


def bisect_radius(
    solver: HandsOffSolver, d: np.ndarray, alpha: Optional[float] = None
) -> float:
    """Finds the boundary radius along d by bisection.

    The bracket is grown by doubling from 1 and then halved until its width
    is at most bisection_width * (1 + r). Both stages share the iteration
    cap of the configuration.

    Args:
        solver: Solver of the plant and grid.
        d: Unit direction.
        alpha: L1 budget, or None for the reachable set.

    Raises:
        BadInputError: if d is not a unit vector of the right size.
        NumericFailureError: if no infeasible radius can be found.

    Returns:
        The largest radius found feasible.
    """
    d = _unit_direction(d, solver.system.n)
    config = solver.config
    iterations = 0
    low, high = 0.0, 1.0
    while solver.feasible_with_budget(high * d, alpha):
        low, high = high, 2.0 * high
        iterations += 1
        if high > _MAX_RADIUS:
            raise NumericFailureError(
                f"Reachable set appears unbounded along {d.tolist()}."
            )
    while (
        high - low > config.bisection_width * (1.0 + low)
        and iterations < config.bisection_iterations
    ):
        middle = 0.5 * (low + high)
        if solver.feasible_with_budget(middle * d, alpha):
            low = middle
        else:
            high = middle
        iterations += 1
    logger.debug(
        f"Boundary radius {low:.9g} along {d.tolist()} (alpha={alpha}) "
        f"after {iterations} iterations"
    )
    return low


def boundary_radius(
    sys: LtiSystem, d: np.ndarray, N: int, alpha: Optional[float] = None
) -> float:
    """Finds r* such that r* d lies on the boundary of R (or R_alpha).

    Args:
        sys: The plant.
        d: Unit direction.
        N: Number of cells.
        alpha: L1 budget, or None for the reachable set.

    Returns:
        The boundary radius.
    """
    return bisect_radius(shared_solver(sys, N), d, alpha)


def random_directions(
    rng: np.random.Generator, n: int, count: int
) -> np.ndarray:
    """Draws unit directions uniformly from the sphere.

    Args:
        rng: Random generator.
        n: Dimension.
        count: Number of directions.

    Returns:
        Array of shape (count, n) with unit rows; +-1 entries when n = 1.
    """
    directions = rng.standard_normal((count, n))
    norms = np.linalg.norm(directions, axis=1)
    while np.any(norms == 0):
        zero = norms == 0
        directions[zero] = rng.standard_normal((int(zero.sum()), n))
        norms = np.linalg.norm(directions, axis=1)
    return directions / norms[:, None]


class RayProbe:
    def __init__(self, solver: HandsOffSolver, threads: int = 1) -> None:
        """Boundary radii along directions, cached per (direction, budget).

        Args:
            solver: Solver of the plant and grid.
            threads: Worker threads for batches of directions.
        """
        self._solver = solver
        self._threads = threads
        self._radii: Dict[RadiusKey, float] = {}
        self._lock = threading.Lock()

    @property
    def solver(self) -> HandsOffSolver:
        """Returns the solver."""
        return self._solver

    def radius(self, d: np.ndarray, alpha: Optional[float] = None) -> float:
        """Returns the boundary radius along d.

        Args:
            d: Unit direction.
            alpha: L1 budget, or None for the reachable set.

        Returns:
            The boundary radius.
        """
        key = (tuple(np.asarray(d, dtype=float).tolist()), alpha)
        with self._lock:
            if key in self._radii:
                return self._radii[key]
        radius = bisect_radius(self._solver, d, alpha)
        with self._lock:
            self._radii[key] = radius
        return radius

    def sample(self, d: np.ndarray, alpha: Optional[float] = None) -> RaySample:
        """Returns the boundary sample along d."""
        d = np.asarray(d, dtype=float)
        return RaySample(d, self.radius(d, alpha), alpha)

    def radii(
        self, directions: np.ndarray, alpha: Optional[float] = None
    ) -> np.ndarray:
        """Returns the boundary radii along each row of directions."""
        return np.array(
            run_parallel(
                lambda d: self.radius(d, alpha), list(directions), self._threads
            )
        )

    def interior_points(
        self, rng: np.random.Generator, count: int, max_factor: float = 0.95
    ) -> Tuple[np.ndarray, np.ndarray]:
        """Draws points strictly inside R.

        Each point is f r*(d) d with a random unit direction d and a factor
        f drawn uniformly from [0, max_factor).

        Args:
            rng: Random generator.
            count: Number of points.
            max_factor: Upper end of the scaling factor.

        Returns:
            Points of shape (count, n) and the boundary radii of their
            directions.
        """
        directions = random_directions(rng, self._solver.system.n, count)
        factors = rng.uniform(0.0, max_factor, count)
        radii = self.radii(directions)
        return (factors * radii)[:, None] * directions, radii
