"""Command-line entry point.

Usage:
    handsoff solve --system plant.json --xi 100 --n 1000 --out solution.json
    handsoff sweep --system plant.json --from -147 --to 147 --points 101 \
        --out sweep.csv
    handsoff verify --system plant.json --suite all --seed 42 --out report.json
    handsoff oracle1d --a -1 --b 1 --T 5 --xi 100

Exit codes: 0 success, 1 usage or internal error, 2 infeasible state, state
out of reach or failed verification.
"""

import argparse
import logging
import re
import sys
from typing import List, Optional

from handsoff import __version__
from handsoff.cli.commands import (
    EXIT_ERROR,
    EXIT_FAILURE,
    SUITE_ALL,
    SUITES,
    cmd_oracle1d,
    cmd_solve,
    cmd_sweep,
    cmd_verify,
)
from handsoff.core.exceptions import (
    BadInputError,
    HandsOffError,
    InfeasibleError,
    OutOfReachError,
)

logger = logging.getLogger(__name__)

_VECTOR_FLAGS = ("--xi", "--from", "--to")
_NEGATIVE_VALUE = re.compile(r"^-[0-9.]")


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising BadInputError instead of exiting."""

    def error(self, message: str) -> None:
        raise BadInputError(message)


def _add_common(parser: argparse.ArgumentParser) -> None:
    """Adds the flags shared by the plant-based commands."""
    parser.add_argument(
        "--system", required=True, help="Plant file (JSON or YAML)."
    )
    parser.add_argument(
        "--n", type=int, default=None, help="Number of grid cells."
    )
    parser.add_argument(
        "--config", default=None, help="YAML file overriding solver settings."
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker threads (default: HANDSOFF_THREADS or 1).",
    )


def build_parser() -> argparse.ArgumentParser:
    """Returns the parser of all sub-commands."""
    parser = _ArgumentParser(
        prog="handsoff",
        description="Maximum hands-off control of linear plants.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Debug logging."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve for one initial state.")
    _add_common(solve)
    solve.add_argument(
        "--xi", required=True, help="Initial state, e.g. 1.5,-2."
    )
    solve.add_argument("--out", default=None, help="Solution JSON file.")
    solve.set_defaults(handler=cmd_solve)

    sweep = commands.add_parser("sweep", help="Evaluate V along a segment.")
    _add_common(sweep)
    sweep.add_argument("--from", dest="start", required=True)
    sweep.add_argument("--to", dest="stop", required=True)
    sweep.add_argument("--points", type=int, required=True)
    sweep.add_argument("--out", required=True, help="CSV file.")
    sweep.set_defaults(handler=cmd_sweep)

    verify = commands.add_parser("verify", help="Run property suites.")
    _add_common(verify)
    verify.add_argument(
        "--suite", choices=SUITES + (SUITE_ALL,), default=SUITE_ALL
    )
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=50)
    verify.add_argument("--out", required=True, help="Report JSON file.")
    verify.set_defaults(handler=cmd_verify)

    oracle = commands.add_parser(
        "oracle1d", help="Closed form of x' = a x + b u with a < 0."
    )
    oracle.add_argument("--a", type=float, required=True)
    oracle.add_argument("--b", type=float, required=True)
    oracle.add_argument("--T", type=float, required=True)
    oracle.add_argument("--xi", type=float, required=True)
    oracle.set_defaults(handler=cmd_oracle1d)
    return parser


def attach_negative_values(argv: List[str]) -> List[str]:
    """Rewrites "--xi -1,2" as "--xi=-1,2" for the vector flags.

    argparse takes a value starting with "-" for an option unless it is a
    single negative number.
    """
    joined: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _VECTOR_FLAGS
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            joined.append(token)
            i += 1
    return joined


def configure_logging(verbose: bool) -> None:
    """Sends log records to stderr; DEBUG if verbose, WARNING otherwise."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Runs the command line.

    Args:
        argv: Arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        The exit code.
    """
    try:
        if argv is None:
            argv = sys.argv[1:]
        args = build_parser().parse_args(attach_negative_values(argv))
    except BadInputError as error:
        print(f"handsoff: error: {error}", file=sys.stderr)
        return EXIT_ERROR
    configure_logging(args.verbose)

    try:
        return args.handler(args)
    except (InfeasibleError, OutOfReachError) as error:
        print(f"handsoff: {error}", file=sys.stderr)
        return EXIT_FAILURE
    except HandsOffError as error:
        print(f"handsoff: error: {error}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as error:
        print(f"handsoff: error: {error}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
