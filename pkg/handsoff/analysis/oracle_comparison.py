"""Comparison of the discretized solver with the scalar closed form."""

import logging
import math
from typing import Optional

import numpy as np

from handsoff.analysis.parallel import run_parallel
from handsoff.analysis.property_report import PropertyReport
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.oracle.scalar_oracle import (
    Scalar1dSystem,
    oracle_control,
    oracle_value,
    reachable_interval,
)
from handsoff.solver.hands_off_solver import HandsOffSolver

logger = logging.getLogger(__name__)

VALUE_TOLERANCE = 0.01
SHAPE_AGREEMENT = 0.995
SAMPLE_SPAN = 0.95
CELL_TOLERANCE = 1e-6


def scalar_oracle_for(solver: HandsOffSolver) -> Optional[Scalar1dSystem]:
    """Returns the closed form of the solver's plant, if there is one.

    Args:
        solver: The solver.

    Returns:
        The scalar plant if n = 1 and a < 0, None otherwise.
    """
    sys = solver.system
    if sys.n != 1 or sys.A[0, 0] >= 0:
        return None
    return Scalar1dSystem.from_lti_system(sys)


def shape_agreement(
    control: np.ndarray, reference: np.ndarray, tolerance: float
) -> float:
    """Returns the share of cells on which two controls agree."""
    return float(np.mean(np.abs(control - reference) <= tolerance))


def sample_span(x1: float) -> float:
    """Returns 0.95 x1 rounded down to two significant digits.

    For x1 = e^5 - 1 this is 140.
    """
    span = SAMPLE_SPAN * x1
    scale = 10.0 ** (math.floor(math.log10(span)) - 1)
    return math.floor(span / scale) * scale


def oracle_suite(
    solver: HandsOffSolver, samples: int = 50, threads: int = 1
) -> PropertyReport:
    """Compares value and control shape with the closed form.

    The initial states are evenly spaced over [-s, s], where s is 0.95 x1
    rounded down to two significant digits (see sample_span). For each,
    |V_LP - V| must be at most 0.01 and the computed control must match the
    sampled closed-form control on at least 99.5 % of the cells.

    Args:
        solver: Solver of a stable scalar plant.
        samples: Number of initial states (>= 1).
        threads: Worker threads.

    Raises:
        BadInputError: if the plant has no closed form or samples < 1.

    Returns:
        The report. Its seed is 0 since the samples are deterministic.
    """
    oracle = scalar_oracle_for(solver)
    if oracle is None:
        raise BadInputError(
            "The closed-form comparison needs a scalar plant with a < 0."
        )
    if samples < 1:
        raise BadInputError(f"Need at least one sample, got {samples}.")
    bound = reachable_interval(oracle)
    if samples == 1:
        xis = np.zeros(1)
    else:
        span = sample_span(bound)
        xis = np.linspace(-span, span, samples)
    grid = solver.problem.grid
    logger.info(f"Closed-form comparison on {samples} states in R=+-{bound}")

    def evaluate(i: int):
        try:
            return solver.solve(np.array([xis[i]]))
        except InfeasibleError as error:
            return error

    report = PropertyReport(
        suite="oracle1d",
        seed=0,
        samples=samples,
        tolerances={
            "value": VALUE_TOLERANCE,
            "shape_agreement": SHAPE_AGREEMENT,
            "cell": CELL_TOLERANCE,
        },
    )
    report.statistics["sample_span"] = float(np.max(np.abs(xis)))
    errors, agreements = [], []
    for i, result in enumerate(
        run_parallel(evaluate, list(range(samples)), threads)
    ):
        xi = float(xis[i])
        if isinstance(result, InfeasibleError):
            report.add_failure(
                i,
                "feasibility",
                {"xi": xi},
                {"phase_one_residual": result.phase_one_residual},
                0.0,
            )
            continue
        exact = oracle_value(oracle, xi)
        error = abs(result.value - exact)
        errors.append(error)
        if error > VALUE_TOLERANCE:
            report.add_failure(
                i,
                "value",
                {"xi": xi},
                {"value": result.value, "closed_form": exact},
                VALUE_TOLERANCE,
            )
        agreement = shape_agreement(
            result.control.values,
            oracle_control(oracle, xi, grid).values,
            CELL_TOLERANCE,
        )
        agreements.append(agreement)
        if agreement < SHAPE_AGREEMENT:
            report.add_failure(
                i,
                "shape",
                {"xi": xi},
                {"agreement": agreement},
                SHAPE_AGREEMENT,
            )
    if errors:
        report.statistics["max_value_error"] = float(max(errors))
        report.statistics["min_shape_agreement"] = float(min(agreements))
    return report
