"""Convexity of the value function.

The optimal value of a linear program is convex in its right-hand side, so
the discretized V satisfies the midpoint inequality up to LP tolerance for
every pair of states. Strict convexity holds for the continuous problem only
and is checked against a calibrated margin on well separated pairs.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.analysis.property_report import PropertyFailure, PropertyReport
from handsoff.analysis.ray_probe import RayProbe
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.oracle.scalar_oracle import Scalar1dSystem, oracle_value
from handsoff.solver.hands_off_solver import HandsOffSolver

logger = logging.getLogger(__name__)

LAMBDAS = (0.25, 0.5, 0.75)
CONVEXITY_TOLERANCE = 1e-7
ORACLE_GAP_FRACTION = 0.5
ORACLE_SEPARATION = 5.0
SEPARATION_FRACTION = 0.1
MARGIN_FRACTION = 1e-4


@dataclass(frozen=True)
class _StrictnessRule:
    """Pair separation above which strictness is required, and its margin."""

    separation: float
    margin: float
    oracle: Optional[Scalar1dSystem] = None


def _check_pair(
    solver: HandsOffSolver,
    index: int,
    xi: np.ndarray,
    eta: np.ndarray,
    rule: _StrictnessRule,
) -> Tuple[List[PropertyFailure], float]:
    """Runs the midpoint checks for one pair; returns failures and min gap."""
    failures: List[PropertyFailure] = []
    try:
        v_xi, v_eta = solver.value(xi), solver.value(eta)
    except InfeasibleError as error:
        failures.append(
            PropertyFailure(
                index,
                "feasibility",
                {"xi": xi, "eta": eta},
                {"phase_one_residual": error.phase_one_residual},
                0.0,
            )
        )
        return failures, float("inf")

    distance = float(np.linalg.norm(xi - eta))
    smallest_gap = float("inf")
    for lam in LAMBDAS:
        middle = (1.0 - lam) * xi + lam * eta
        v_mid = solver.value(middle)
        combination = (1.0 - lam) * v_xi + lam * v_eta
        gap = combination - v_mid
        smallest_gap = min(smallest_gap, gap)
        inputs = {"xi": xi, "eta": eta, "lambda": lam}
        observed = {
            "value_xi": v_xi,
            "value_eta": v_eta,
            "value_middle": v_mid,
            "gap": gap,
        }
        if gap < -CONVEXITY_TOLERANCE:
            failures.append(
                PropertyFailure(
                    index, "convexity", inputs, observed, CONVEXITY_TOLERANCE
                )
            )
        if distance < rule.separation:
            continue

        if rule.oracle is not None:
            exact_gap = (
                (1.0 - lam) * oracle_value(rule.oracle, float(xi[0]))
                + lam * oracle_value(rule.oracle, float(eta[0]))
                - oracle_value(rule.oracle, float(middle[0]))
            )
            required = ORACLE_GAP_FRACTION * exact_gap
            observed["oracle_gap"] = exact_gap
            strict_enough = gap >= required
        else:
            required = rule.margin
            strict_enough = gap > required
        if not strict_enough:
            failures.append(
                PropertyFailure(index, "strictness", inputs, observed, required)
            )
    return failures, smallest_gap


def convexity_suite(
    solver: HandsOffSolver,
    pairs: int = 50,
    seed: int = 0,
    oracle: Optional[Scalar1dSystem] = None,
    threads: int = 1,
) -> PropertyReport:
    """Checks midpoint convexity and strictness of V on random pairs.

    Pairs are drawn strictly inside R (random factor below 0.95 of the
    boundary radius). For lambda in {0.25, 0.5, 0.75}:

    - convexity: V((1 - lambda) xi + lambda eta) is at most the convex
      combination of V(xi) and V(eta) plus 1e-7,
    - strictness: with a scalar oracle, on pairs with |xi - eta| >= 5 the
      gap is at least half the closed-form gap; otherwise, on pairs at least
      0.1 times the smallest sampled boundary radius apart, the gap exceeds
      1e-4 T.

    Args:
        solver: Solver of the plant and grid.
        pairs: Number of pairs.
        seed: Seed of the sample generator.
        oracle: Closed form of the plant, if it is a stable scalar plant.
        threads: Worker threads.

    Raises:
        BadInputError: if pairs < 1.

    Returns:
        The report.
    """
    if pairs < 1:
        raise BadInputError(f"Need at least one pair, got {pairs}.")
    T = solver.system.T
    rng = np.random.default_rng(seed)
    probe = RayProbe(solver, threads)
    points, radii = probe.interior_points(rng, 2 * pairs)
    xis, etas = points[:pairs], points[pairs:]

    if oracle is not None:
        rule = _StrictnessRule(ORACLE_SEPARATION, 0.0, oracle)
    else:
        rule = _StrictnessRule(
            SEPARATION_FRACTION * float(np.min(radii)), MARGIN_FRACTION * T
        )
    logger.info(
        f"Convexity suite: {pairs} pairs, strictness beyond separation "
        f"{rule.separation:.4g}"
    )

    results = run_parallel(
        lambda i: _check_pair(solver, i, xis[i], etas[i], rule),
        list(range(pairs)),
        threads,
    )
    report = PropertyReport(
        suite="convexity",
        seed=seed,
        samples=pairs,
        tolerances={
            "convexity": CONVEXITY_TOLERANCE,
            "strictness_separation": rule.separation,
            "strictness_margin": rule.margin,
            "oracle_gap_fraction": ORACLE_GAP_FRACTION if oracle else 0.0,
        },
    )
    gaps = []
    for failures, gap in results:
        report.extend(failures)
        gaps.append(gap)
    report.statistics["min_gap"] = float(min(gaps))
    return report

