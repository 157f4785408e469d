"""Bang-off-bang structure of the optimal controls.

A basic optimal solution of the transcribed LP has at most n cells strictly
between -1, 0 and +1. Hence the L0 and L1 norms of the computed control
differ by at most n h, the discrete counterpart of V = V1.
"""

import logging
from typing import List, Union

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.analysis.property_report import PropertyFailure, PropertyReport
from handsoff.analysis.ray_probe import RayProbe
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.solver.hands_off_solver import HandsOffSolver
from handsoff.solver.solve_report import SolveReport

logger = logging.getLogger(__name__)


def check_report(
    solver: HandsOffSolver, index: int, report: SolveReport
) -> List[PropertyFailure]:
    """Checks the structure of one solve.

    Args:
        solver: The solver that produced the report.
        index: Sample index.
        report: The solve report.

    Returns:
        The violated checks.
    """
    n = solver.system.n
    h = report.control.grid.h
    config = solver.config
    inputs = {"xi": report.xi}
    failures = []
    if report.fractional_cells > n:
        failures.append(
            PropertyFailure(
                index,
                "fractional",
                inputs,
                {"fractional_cells": report.fractional_cells},
                n,
            )
        )
    norm_gap = abs(report.l0 - report.l1)
    allowed = n * h + solver.system.T * config.one_tolerance
    if norm_gap > allowed:
        failures.append(
            PropertyFailure(
                index,
                "l0_l1",
                inputs,
                {"l0": report.l0, "l1": report.l1},
                allowed,
            )
        )
    terminal = float(np.max(np.abs(report.terminal_residual)))
    terminal_tolerance = solver.terminal_tolerance(report.xi)
    if terminal > terminal_tolerance:
        failures.append(
            PropertyFailure(
                index,
                "terminal",
                inputs,
                {"terminal_residual": report.terminal_residual},
                terminal_tolerance,
            )
        )
    if not report.control.is_admissible(config.lp.bound):
        failures.append(
            PropertyFailure(
                index, "admissible", inputs, {"linf": report.linf}, 1.0
            )
        )
    return failures


def bang_off_bang_suite(
    solver: HandsOffSolver, samples: int = 50, seed: int = 0, threads: int = 1
) -> PropertyReport:
    """Solves for random interior states and checks the control structure.

    Checks per solve: at most n fractional cells, |l0 - l1| <= n h (plus the
    saturation band), re-simulated terminal state within tolerance and
    |u| <= 1.

    Args:
        solver: Solver of the plant and grid.
        samples: Number of initial states.
        seed: Seed of the sample generator.
        threads: Worker threads.

    Raises:
        BadInputError: if samples < 1.

    Returns:
        The report.
    """
    if samples < 1:
        raise BadInputError(f"Need at least one sample, got {samples}.")
    rng = np.random.default_rng(seed)
    points, _ = RayProbe(solver, threads).interior_points(rng, samples)
    logger.info(f"Bang-off-bang suite: {samples} solves")

    def evaluate(i: int) -> Union[SolveReport, InfeasibleError]:
        try:
            return solver.solve(points[i])
        except InfeasibleError as error:
            return error

    report = PropertyReport(
        suite="bangoffbang",
        seed=seed,
        samples=samples,
        tolerances={
            "eps_zero": solver.config.eps_zero,
            "one_tolerance": solver.config.one_tolerance,
            "terminal": solver.config.terminal_tolerance,
        },
    )
    fractions = []
    for i, result in enumerate(
        run_parallel(evaluate, list(range(samples)), threads)
    ):
        if isinstance(result, InfeasibleError):
            report.add_failure(
                i,
                "feasibility",
                {"xi": points[i]},
                {"phase_one_residual": result.phase_one_residual},
                0.0,
            )
            continue
        fractions.append(result.bang_off_bang_fraction)
        report.extend(check_report(solver, i, result))
    if fractions:
        report.statistics["min_bang_off_bang_fraction"] = float(min(fractions))
    return report
