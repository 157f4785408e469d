"""Level-set identity of the value function.

For 0 <= alpha the budget-limited reachable set R_alpha equals the sublevel
set {V <= alpha}; its boundary inside R is {V = alpha} and its interior is
{V < alpha}. The suite probes these statements along random rays.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.analysis.property_report import PropertyFailure, PropertyReport
from handsoff.analysis.ray_probe import RayProbe, random_directions
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.solver.hands_off_solver import HandsOffSolver

logger = logging.getLogger(__name__)

_INTERIOR_FACTOR = 0.9
_EXTERIOR_FACTOR = 1.05


def default_alphas(T: float) -> List[float]:
    """Returns the default budgets 0.05T, 0.1T, 0.2T, 0.4T and T."""
    return [0.05 * T, 0.1 * T, 0.2 * T, 0.4 * T, T]


def _value_or_none(solver: HandsOffSolver, xi: np.ndarray) -> Optional[float]:
    """Returns V(xi), or None if xi is infeasible on the grid."""
    try:
        return solver.value(xi)
    except InfeasibleError:
        return None


def _probe_direction(
    probe: RayProbe,
    index: int,
    d: np.ndarray,
    alphas: Sequence[float],
    tolerance: float,
) -> List[PropertyFailure]:
    """Runs every level-set check along one direction."""
    solver = probe.solver
    T = solver.system.T
    width = 2.0 * solver.config.bisection_width
    failures: List[PropertyFailure] = []

    def fail(check: str, observed: dict, tol: float, **inputs) -> None:
        inputs["direction"] = d
        failures.append(PropertyFailure(index, check, inputs, observed, tol))

    reach = probe.radius(d)
    opposite = probe.radius(-d)
    if abs(reach - opposite) > width * (1.0 + reach):
        fail("symmetry", {"radius": reach, "opposite": opposite}, width)

    previous: Optional[float] = None
    for alpha in alphas:
        radius = probe.radius(d, alpha)
        point = radius * d

        if previous is not None and radius < previous - width * (
            1.0 + radius
        ):
            fail(
                "nesting",
                {"radius": radius, "smaller_budget_radius": previous},
                width,
                alpha=alpha,
            )
        previous = radius

        if alpha >= T:
            if abs(radius - reach) > width * (1.0 + reach):
                fail(
                    "saturation",
                    {"radius": radius, "reach_radius": reach},
                    width,
                    alpha=alpha,
                )
            continue

        boundary_value = _value_or_none(solver, point)
        if boundary_value is None or abs(boundary_value - alpha) > tolerance:
            fail(
                "level",
                {"point": point, "value": boundary_value},
                tolerance,
                alpha=alpha,
            )

        inner = _INTERIOR_FACTOR * point
        inner_value = _value_or_none(solver, inner)
        if inner_value is None or inner_value >= alpha:
            fail(
                "interior",
                {"point": inner, "value": inner_value},
                0.0,
                alpha=alpha,
            )

        outer = _EXTERIOR_FACTOR * point
        if solver.feasible_with_budget(outer, alpha):
            fail("exterior", {"point": outer}, 0.0, alpha=alpha)

    zero_budget = solver.config.eps_zero * T
    zero_radius = probe.radius(d, zero_budget)
    outside = min(2.0 * zero_radius, 0.5 * reach) * d
    outside_value = _value_or_none(solver, outside)
    if zero_radius > 0 and (
        outside_value is None or outside_value <= zero_budget
    ):
        fail(
            "zero_set",
            {"point": outside, "value": outside_value},
            zero_budget,
            alpha=zero_budget,
        )
    return failures


def level_set_suite(
    solver: HandsOffSolver,
    alphas: Optional[Sequence[float]] = None,
    samples: int = 10,
    seed: int = 0,
    tolerance: Optional[float] = None,
    threads: int = 1,
) -> PropertyReport:
    """Checks the level-set identity along random rays.

    For each direction d and budget alpha, with r* the boundary radius of
    R_alpha along d, the checks are:

    - level: |V(r* d) - alpha| <= tolerance (for alpha < T),
    - interior: V(0.9 r* d) < alpha,
    - exterior: 1.05 r* d is not in R_alpha,
    - nesting: r* is non-decreasing in alpha,
    - saturation: for alpha >= T, R_alpha has the boundary of R,
    - symmetry: the radius of R along d equals that along -d,
    - zero_set: V exceeds eps_zero * T outside twice the radius of
      R_{eps_zero * T}.

    Args:
        solver: Solver of the plant and grid.
        alphas: Budgets in (0, T]; budgets >= T only get the saturation
          check. Defaults to default_alphas(T).
        samples: Directions per budget.
        seed: Seed of the direction generator.
        tolerance: Level tolerance. Defaults to 1e-3 * T.
        threads: Worker threads.

    Raises:
        BadInputError: if a budget is not positive or samples < 1.

    Returns:
        The report.
    """
    T = solver.system.T
    alphas = sorted(default_alphas(T) if alphas is None else alphas)
    if not alphas or alphas[0] <= 0:
        raise BadInputError(f"Budgets must be positive, got {alphas}.")
    if samples < 1:
        raise BadInputError(f"Need at least one sample, got {samples}.")
    tolerance = 1e-3 * T if tolerance is None else tolerance

    rng = np.random.default_rng(seed)
    directions = random_directions(rng, solver.system.n, samples)
    probe = RayProbe(solver)
    logger.info(
        f"Level-set suite: {samples} directions, budgets {list(alphas)}"
    )
    results = run_parallel(
        lambda item: _probe_direction(
            probe, item[0], item[1], alphas, tolerance
        ),
        list(enumerate(directions)),
        threads,
    )

    report = PropertyReport(
        suite="levelset",
        seed=seed,
        samples=samples * len(alphas),
        tolerances={
            "level": tolerance,
            "bisection_width": solver.config.bisection_width,
            "zero_budget": solver.config.eps_zero * T,
        },
    )
    for failures in results:
        report.extend(failures)
    report.statistics["budgets"] = float(len(alphas))
    return report
