"""Module level init for matrix functions and plant validation."""
from handsoff.matfun.assumption import (
    controllability_matrix,
    controllability_rank,
    is_nonsingular,
    validate_assumption,
)
from handsoff.matfun.expm import ExpmResult, expm
from handsoff.matfun.propagation import (
    cell_input_column,
    input_columns,
    input_integral,
    zoh_matrices,
)

__all__ = [
    "ExpmResult",
    "cell_input_column",
    "controllability_matrix",
    "controllability_rank",
    "expm",
    "input_columns",
    "input_integral",
    "is_nonsingular",
    "validate_assumption",
    "zoh_matrices",
]
