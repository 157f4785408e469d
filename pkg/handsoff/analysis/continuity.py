"""Continuity of the value function on a compact box inside R."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.analysis.property_report import PropertyReport
from handsoff.analysis.ray_probe import RayProbe, random_directions
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.oracle.scalar_oracle import (
    Scalar1dSystem,
    lipschitz_bound,
    reachable_interval,
)
from handsoff.solver.hands_off_solver import HandsOffSolver

logger = logging.getLogger(__name__)

BOX_FACTOR = 0.9
DELTA_FRACTION = 0.02
STABILITY_FACTOR = 2.0
BOUND_FACTOR = 2.0
RAY_FACTORS = (0.95, 0.98, 0.99, 0.995)
RAY_DIRECTIONS = 4
SUITE_INDEX = -1

_Values = Tuple[float, float, float]


def _pair_values(
    solver: HandsOffSolver, xi: np.ndarray, step: np.ndarray
) -> _Values:
    """Returns V(xi), V(xi + step) and V(xi + step / 2)."""
    return (
        solver.value(xi),
        solver.value(xi + step),
        solver.value(xi + 0.5 * step),
    )


def _ray_values(
    solver: HandsOffSolver, d: np.ndarray, radius: float
) -> List[float]:
    """Returns V at the ray factors of the boundary radius along d."""
    return [solver.value(rho * radius * d) for rho in RAY_FACTORS]


def continuity_suite(
    solver: HandsOffSolver,
    samples: int = 50,
    seed: int = 0,
    delta: Optional[float] = None,
    oracle: Optional[Scalar1dSystem] = None,
    threads: int = 1,
    box_factor: float = BOX_FACTOR,
) -> PropertyReport:
    """Estimates a Lipschitz modulus of V and checks it for stability.

    Base points are drawn inside the box of box_factor times the boundary
    radius along each direction and each is paired with a neighbour at
    distance delta. The largest difference quotient L is computed at delta
    and again at delta / 2; the two estimates must agree within a factor of
    2. With a scalar oracle, the quotients of each pair must also stay below
    twice the analytic bound of |dV/dxi| on the smallest interval centred at
    0 that holds the pair; for pairs inside the box this is at most twice
    the bound on the box.

    Near the boundary of R, V is checked one-sided along rays: at 0.95,
    0.98, 0.99 and 0.995 times the boundary radius the values must be
    non-decreasing and at most T.

    Args:
        solver: Solver of the plant and grid.
        samples: Number of base points (>= 2).
        seed: Seed of the sample generator.
        delta: Neighbour distance. Defaults to 0.02 times the box radius.
        oracle: Closed form of the plant, if it is a stable scalar plant.
        threads: Worker threads.
        box_factor: Share of the boundary radius spanned by the box, in
          (0, 1).

    Raises:
        BadInputError: if samples < 2 or box_factor is outside (0, 1).

    Returns:
        The report.
    """
    if samples < 2:
        raise BadInputError(f"Need at least two samples, got {samples}.")
    if not 0 < box_factor < 1:
        raise BadInputError(f"Box factor must be in (0, 1), got {box_factor}.")
    n = solver.system.n
    rng = np.random.default_rng(seed)
    probe = RayProbe(solver, threads)
    points, radii = probe.interior_points(rng, samples, box_factor)
    steps = random_directions(rng, n, samples)
    ray_directions = random_directions(rng, n, min(samples, RAY_DIRECTIONS))
    box_radius = box_factor * float(np.min(radii))
    if delta is None:
        delta = DELTA_FRACTION * box_radius
    if delta <= 0:
        raise BadInputError(f"Neighbour distance must be positive: {delta}.")
    logger.info(
        f"Continuity suite: {samples} points, box radius {box_radius:.6g}, "
        f"delta {delta:.4g}"
    )

    report = PropertyReport(
        suite="continuity",
        seed=seed,
        samples=samples,
        tolerances={
            "delta": delta,
            "stability_factor": STABILITY_FACTOR,
            "ray_monotonicity": solver.config.lp.optimality,
        },
    )

    def evaluate(i: int) -> Optional[_Values]:
        try:
            return _pair_values(solver, points[i], delta * steps[i])
        except InfeasibleError:
            return None

    quotients = np.zeros((samples, 2))
    for i, values in enumerate(
        run_parallel(evaluate, list(range(samples)), threads)
    ):
        if values is None:
            report.add_failure(
                i, "feasibility", {"xi": points[i], "step": steps[i]}, {}, 0.0
            )
            continue
        quotients[i, 0] = abs(values[1] - values[0]) / delta
        quotients[i, 1] = abs(values[2] - values[0]) / (0.5 * delta)

    first, second = (float(v) for v in quotients.max(axis=0))
    report.statistics.update(
        {"box_radius": box_radius, "lipschitz": first, "lipschitz_half": second}
    )
    if max(first, second) > STABILITY_FACTOR * min(first, second):
        report.add_failure(
            SUITE_INDEX,
            "stability",
            {"delta": delta},
            {"lipschitz": first, "lipschitz_half": second},
            STABILITY_FACTOR,
        )

    if oracle is not None:
        _check_analytic_bound(oracle, points, delta * steps, quotients, report)

    _check_rays(solver, probe, ray_directions, report, samples, threads)
    return report


def _check_analytic_bound(
    oracle: Scalar1dSystem,
    points: np.ndarray,
    steps: np.ndarray,
    quotients: np.ndarray,
    report: PropertyReport,
) -> None:
    """Adds the per-pair comparison with the closed-form slope bound."""
    x1 = reachable_interval(oracle)
    box_radius = report.statistics["box_radius"]
    box_limit = BOUND_FACTOR * lipschitz_bound(oracle, min(box_radius, x1))
    report.tolerances["lipschitz_limit"] = box_limit
    report.statistics["analytic_bound"] = box_limit / BOUND_FACTOR
    extents = np.maximum(
        np.abs(points[:, 0]), np.abs(points[:, 0] + steps[:, 0])
    )
    for i, extent in enumerate(extents):
        limit = BOUND_FACTOR * lipschitz_bound(oracle, min(extent, x1))
        if quotients[i].max() > limit:
            report.add_failure(
                i,
                "lipschitz_bound",
                {"xi": points[i], "step": steps[i]},
                {"quotient": quotients[i].max()},
                limit,
            )


def _check_rays(
    solver: HandsOffSolver,
    probe: RayProbe,
    directions: np.ndarray,
    report: PropertyReport,
    offset: int,
    threads: int,
) -> None:
    """Adds the one-sided boundary checks along rays to the report."""
    T = solver.system.T
    slack = solver.config.lp.optimality * (1.0 + T)
    radii = probe.radii(directions)

    def evaluate(i: int) -> List[float]:
        try:
            return _ray_values(solver, directions[i], radii[i])
        except InfeasibleError:
            return []

    results = run_parallel(evaluate, list(range(len(directions))), threads)
    for i, values in enumerate(results):
        inputs = {"direction": directions[i], "factors": list(RAY_FACTORS)}
        if not values:
            report.add_failure(offset + i, "ray_feasibility", inputs, {}, 0.0)
            continue
        if np.any(np.diff(values) < -slack):
            report.add_failure(
                offset + i, "ray_monotone", inputs, {"values": values}, slack
            )
        if max(values) > T + slack:
            report.add_failure(
                offset + i, "ray_bound", inputs, {"values": values}, slack
            )
