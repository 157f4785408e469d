"""Sub-commands of the handsoff command-line interface.

Each command takes the parsed arguments and returns a process exit code.
"""

import argparse
import json
import logging
from typing import Callable, Dict, List, Tuple

import numpy as np

from handsoff.analysis.bang_off_bang import bang_off_bang_suite
from handsoff.analysis.continuity import continuity_suite
from handsoff.analysis.convexity import convexity_suite
from handsoff.analysis.level_sets import level_set_suite
from handsoff.analysis.oracle_comparison import oracle_suite, scalar_oracle_for
from handsoff.analysis.parallel import resolve_threads
from handsoff.analysis.property_report import PropertyReport
from handsoff.analysis.sweep import SweepLine, sweep_value
from handsoff.core.config import SolverConfig
from handsoff.core.exceptions import BadInputError, InfeasibleError
from handsoff.oracle.scalar_oracle import (
    Scalar1dSystem,
    oracle_value,
    reachable_interval,
    switching_time,
)
from handsoff.solver.hands_off_solver import HandsOffSolver
from handsoff.utils.export import (
    dumps,
    infeasible_to_dict,
    solution_to_dict,
    write_report,
    write_solution,
    write_sweep_csv,
)
from handsoff.utils.system_reader import load_system_spec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILURE = 2

SUITE_ALL = "all"
SUITE_ORACLE = "oracle1d"
SEED_MAX = 2**64 - 1


def parse_vector(text: str) -> np.ndarray:
    """Parses a comma-separated list of reals.

    Args:
        text: E.g., "1.5,-2".

    Raises:
        BadInputError: if an entry is not a finite real.

    Returns:
        The vector.
    """
    try:
        values = np.array([float(v) for v in text.split(",")])
    except ValueError:
        raise BadInputError(f"Expected comma-separated reals, got {text!r}.")
    if not np.all(np.isfinite(values)):
        raise BadInputError(f"Entries must be finite, got {text!r}.")
    return values


def load_config(args: argparse.Namespace) -> SolverConfig:
    """Returns the configuration selected by --config, or the defaults."""
    if not args.config:
        return SolverConfig()
    try:
        return SolverConfig.from_yaml(args.config)
    except (FileNotFoundError, KeyError, TypeError, ValueError) as error:
        raise BadInputError(f"Invalid configuration {args.config}: {error}")


def make_solver(args: argparse.Namespace) -> HandsOffSolver:
    """Loads the plant named by --system and builds its solver.

    The cell count is taken from --n, else from the plant file, else from
    the configuration.
    """
    config = load_config(args)
    spec = load_system_spec(args.system)
    cells = args.n
    if cells is None:
        cells = config.default_cells if spec.N is None else spec.N
    return HandsOffSolver(spec.system, cells, config)


def cmd_solve(args: argparse.Namespace) -> int:
    """Solves for one initial state and writes the solution JSON.

    The solution goes to --out if given, to standard output otherwise.
    Exit code 2 if the state is outside the discretized reachable set.
    """
    solver = make_solver(args)
    xi = parse_vector(args.xi)
    try:
        report = solver.solve(xi)
        data = solution_to_dict(report)
        code = EXIT_OK
    except InfeasibleError as error:
        logger.warning(str(error))
        data = infeasible_to_dict(error.phase_one_residual)
        code = EXIT_FAILURE

    if args.out:
        write_solution(args.out, data)
    else:
        print(dumps(data), end="")
    return code


def cmd_sweep(args: argparse.Namespace) -> int:
    """Evaluates V along the segment --from to --to and writes a CSV."""
    solver = make_solver(args)
    line = SweepLine.between(
        parse_vector(args.start), parse_vector(args.stop), args.points
    )
    rows = sweep_value(solver, line, resolve_threads(args.threads))
    write_sweep_csv(args.out, rows, solver.system.n)
    infeasible = sum(row.value is None for row in rows)
    logger.info(f"Wrote {len(rows)} rows ({infeasible} infeasible)")
    return EXIT_OK


def _suite_runners(
    solver: HandsOffSolver, samples: int, seed: int, threads: int
) -> Dict[str, Callable[[], PropertyReport]]:
    """Returns the runnable suites by command-line name."""
    oracle = scalar_oracle_for(solver)
    return {
        "bangoffbang": lambda: bang_off_bang_suite(
            solver, samples, seed, threads
        ),
        "convexity": lambda: convexity_suite(
            solver, samples, seed, oracle, threads
        ),
        "continuity": lambda: continuity_suite(
            solver, max(samples, 2), seed, oracle=oracle, threads=threads
        ),
        "levelset": lambda: level_set_suite(
            solver, samples=samples, seed=seed, threads=threads
        ),
        SUITE_ORACLE: lambda: oracle_suite(solver, samples, threads),
    }


SUITES = ("bangoffbang", "convexity", "continuity", "levelset", SUITE_ORACLE)


def selected_suites(suite: str, solver: HandsOffSolver) -> List[str]:
    """Returns the suite names to run for the --suite flag.

    "all" runs every suite; the closed-form comparison is included only for
    stable scalar plants.
    """
    if suite != SUITE_ALL:
        return [suite]
    names = list(SUITES)
    if scalar_oracle_for(solver) is None:
        names.remove(SUITE_ORACLE)
    return names


def cmd_verify(args: argparse.Namespace) -> int:
    """Runs property suites and writes the report JSON.

    Exit code 0 if every suite passes, 2 otherwise.

    Raises:
        BadInputError: if the seed is not a u64 or samples < 1.
    """
    if not 0 <= args.seed <= SEED_MAX:
        raise BadInputError(
            f"Seed must be an integer in [0, 2^64 - 1], got {args.seed}."
        )
    if args.samples < 1:
        raise BadInputError(f"Need at least one sample, got {args.samples}.")
    solver = make_solver(args)
    threads = resolve_threads(args.threads)
    runners = _suite_runners(solver, args.samples, args.seed, threads)
    reports = []
    for name in selected_suites(args.suite, solver):
        report = runners[name]()
        reports.append(report)
        print(
            f"{name}: {'pass' if report.passed else 'FAIL'} "
            f"({len(report.failures)} failures, {report.samples} samples)"
        )
    write_report(args.out, reports, args.seed, solver.N)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def oracle_summary(s: Scalar1dSystem, xi: float) -> List[Tuple[str, float]]:
    """Returns the labelled closed-form quantities x1, tau and V."""
    return [
        ("x1", reachable_interval(s)),
        ("tau", switching_time(s, xi)),
        ("V", oracle_value(s, xi)),
    ]


def cmd_oracle1d(args: argparse.Namespace) -> int:
    """Prints the closed-form quantities of a stable scalar plant."""
    system = Scalar1dSystem(args.a, args.b, args.T)
    for label, number in oracle_summary(system, args.xi):
        print(f"{label}: {json.dumps(number)}")
    return EXIT_OK
