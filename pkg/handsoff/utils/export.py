"""Writers and readers of solution, sweep and report files.

Files are written once and atomically: the content goes to a temporary file
in the target directory which then replaces the target.
"""

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

import numpy as np

from handsoff.analysis.property_report import PropertyReport
from handsoff.analysis.sweep import SweepRow
from handsoff.core.control_signal import ControlSignal
from handsoff.core.exceptions import BadInputError
from handsoff.core.grid import Grid
from handsoff.solver.solve_report import SolveReport

_FIELD_STATUS = "status"
_FIELD_PHASE1_RESIDUAL = "phase1_residual"
_FIELD_VALUE = "value"
_FIELD_TERMINAL = "terminal_residual"
_FIELD_XI = "xi"
_FIELD_GRID = "grid"
_FIELD_U = "u"

STATUS_INFEASIBLE = "infeasible"


def write_atomic(filepath: str, content: str) -> None:
    """Writes text to a file through a temporary file and a rename.

    Args:
        filepath: Target path.
        content: Text to write.
    """
    directory = os.path.dirname(os.path.abspath(filepath))
    os.makedirs(directory, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="") as out:
            out.write(content)
        os.replace(temporary, filepath)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


def dumps(data: Dict[str, Any]) -> str:
    """Serializes to JSON; floats use their shortest round-trip form."""
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def solution_to_dict(report: SolveReport) -> Dict[str, Any]:
    """Returns the solution-file content of an optimal solve."""
    return report.to_dict()


def infeasible_to_dict(phase_one_residual: float) -> Dict[str, Any]:
    """Returns the solution-file content of an infeasible solve."""
    return {
        _FIELD_STATUS: STATUS_INFEASIBLE,
        _FIELD_PHASE1_RESIDUAL: float(phase_one_residual),
    }


def write_solution(filepath: str, data: Dict[str, Any]) -> None:
    """Writes a solution file (see solution_to_dict, infeasible_to_dict)."""
    write_atomic(filepath, dumps(data))


@dataclass(frozen=True, eq=False)
class StoredSolution:
    """Represents a solution file read back from disk.

    Attributes:
        status: Recorded LP status.
        value: Recorded value V(xi).
        xi: Initial state.
        control: Recorded control.
        terminal_residual: Recorded terminal state.
    """

    status: str
    value: float
    xi: np.ndarray
    control: ControlSignal
    terminal_residual: np.ndarray


def read_solution(filepath: str) -> StoredSolution:
    """Reads a solution file of an optimal solve.

    Args:
        filepath: Path to the solution JSON.

    Raises:
        BadInputError: if the file is unreadable or records no control.

    Returns:
        The stored solution.
    """
    try:
        with open(filepath, encoding="utf-8") as input_file:
            data = json.load(input_file)
        grid = Grid(data[_FIELD_GRID]["T"], data[_FIELD_GRID]["N"])
        return StoredSolution(
            status=data[_FIELD_STATUS],
            value=float(data[_FIELD_VALUE]),
            xi=np.array(data[_FIELD_XI], dtype=float),
            control=ControlSignal(grid, data[_FIELD_U]),
            terminal_residual=np.array(data[_FIELD_TERMINAL], dtype=float),
        )
    except (OSError, KeyError, TypeError, ValueError) as error:
        raise BadInputError(f"Cannot read solution {filepath}: {error}")


def sweep_to_csv(rows: Sequence[SweepRow], n: int) -> str:
    """Formats sweep rows as CSV with header s,xi_1,...,xi_n,V,status.

    Infeasible rows have an empty V field. Numbers use "." as decimal
    separator and no grouping; lines end with a line feed.

    Args:
        rows: Sweep rows.
        n: State dimension.

    Returns:
        The CSV text.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["s"] + [f"xi_{i + 1}" for i in range(n)] + ["V", "status"])
    for row in rows:
        writer.writerow(
            [repr(float(row.s))]
            + [repr(float(x)) for x in row.xi]
            + ["" if row.value is None else repr(float(row.value))]
            + [row.status]
        )
    return buffer.getvalue()


def write_sweep_csv(filepath: str, rows: Sequence[SweepRow], n: int) -> None:
    """Writes sweep rows to a CSV file (see sweep_to_csv)."""
    if n < 1:
        raise BadInputError(f"State dimension must be positive, got {n}.")
    write_atomic(filepath, sweep_to_csv(rows, n))


def reports_to_dict(
    reports: List[PropertyReport], seed: int, cells: int
) -> Dict[str, Any]:
    """Returns the content of a verification report file.

    Args:
        reports: Suite reports in execution order.
        seed: Seed all suites were run with.
        cells: Number of grid cells.

    Returns:
        Mapping with the overall pass flag and every suite report.
    """
    return {
        "passed": all(report.passed for report in reports),
        "seed": seed,
        "N": cells,
        "suites": [report.to_dict() for report in reports],
    }


def write_report(
    filepath: str, reports: List[PropertyReport], seed: int, cells: int
) -> None:
    """Writes a verification report file (see reports_to_dict)."""
    write_atomic(filepath, dumps(reports_to_dict(reports, seed, cells)))
