"""Value function along a line segment of the state space."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.solver.hands_off_solver import HandsOffSolver

logger = logging.getLogger(__name__)

STATUS_OPTIMAL = "optimal"
STATUS_INFEASIBLE = "infeasible"


@dataclass(frozen=True, eq=False)
class SweepLine:
    """Represents the points origin + s * direction for s in a range.

    Attributes:
        origin: Point at s = 0.
        direction: Direction vector (need not be a unit vector).
        s_min: Start of the parameter range.
        s_max: End of the parameter range.
        points: Number of evenly spaced samples (>= 2).
    """

    origin: np.ndarray
    direction: np.ndarray
    s_min: float
    s_max: float
    points: int

    def __post_init__(self) -> None:
        origin = np.atleast_1d(np.asarray(self.origin, dtype=float))
        direction = np.atleast_1d(np.asarray(self.direction, dtype=float))
        if origin.shape != direction.shape or origin.ndim != 1:
            raise BadInputError(
                f"Origin {origin.shape} and direction {direction.shape} "
                "must be vectors of equal length."
            )
        if not (np.all(np.isfinite(origin)) and np.all(np.isfinite(direction))):
            raise BadInputError("Sweep line must be finite.")
        if int(self.points) != self.points or self.points < 2:
            raise BadInputError(
                f"A sweep needs at least 2 points, got {self.points!r}."
            )
        object.__setattr__(self, "origin", origin)
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "points", int(self.points))

    @classmethod
    def between(
        cls, start: np.ndarray, stop: np.ndarray, points: int
    ) -> "SweepLine":
        """Creates the segment from start (s = 0) to stop (s = 1)."""
        start = np.atleast_1d(np.asarray(start, dtype=float))
        stop = np.atleast_1d(np.asarray(stop, dtype=float))
        if start.shape != stop.shape:
            raise BadInputError(
                f"Endpoints differ in shape: {start.shape} vs {stop.shape}."
            )
        return cls(start, stop - start, 0.0, 1.0, points)

    def samples(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns the parameters s and the states, one row per sample."""
        s = np.linspace(self.s_min, self.s_max, self.points)
        return s, self.origin + s[:, None] * self.direction


@dataclass(frozen=True, eq=False)
class SweepRow:
    """Represents one sample of a sweep.

    Attributes:
        s: Line parameter.
        xi: Initial state.
        value: V(xi), or None if infeasible.
        status: "optimal" or "infeasible".
    """

    s: float
    xi: np.ndarray
    value: Optional[float]
    status: str


def sweep_value(
    solver: HandsOffSolver, line: SweepLine, threads: int = 1
) -> List[SweepRow]:
    """Evaluates V along a line; infeasible samples are marked, not raised.

    Args:
        solver: Solver of the plant and grid.
        line: The sampled line.
        threads: Worker threads.

    Raises:
        BadInputError: if the line dimension differs from the plant's.

    Returns:
        One row per sample, in order of s.
    """
    if line.origin.shape != (solver.system.n,):
        raise BadInputError(
            f"Sweep line has dimension {line.origin.shape[0]}, plant has "
            f"{solver.system.n}."
        )
    s, states = line.samples()
    logger.info(f"Sweeping V over {line.points} points")

    def evaluate(i: int) -> SweepRow:
        try:
            return SweepRow(
                float(s[i]), states[i], solver.value(states[i]), STATUS_OPTIMAL
            )
        except InfeasibleError:
            return SweepRow(float(s[i]), states[i], None, STATUS_INFEASIBLE)

    return run_parallel(evaluate, list(range(line.points)), threads)
