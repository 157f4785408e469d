"""Module level init for file input and output."""
from handsoff.utils.export import (
    StoredSolution,
    infeasible_to_dict,
    read_solution,
    reports_to_dict,
    solution_to_dict,
    sweep_to_csv,
    write_atomic,
    write_report,
    write_solution,
    write_sweep_csv,
)
from handsoff.utils.system_reader import (
    SystemSpecFile,
    json_to_system,
    load_system_spec,
)

__all__ = [
    "StoredSolution",
    "SystemSpecFile",
    "infeasible_to_dict",
    "json_to_system",
    "load_system_spec",
    "read_solution",
    "reports_to_dict",
    "solution_to_dict",
    "sweep_to_csv",
    "write_atomic",
    "write_report",
    "write_solution",
    "write_sweep_csv",
]
