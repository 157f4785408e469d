"""Module level init for the core classes."""
from handsoff.core.config import SolverConfig
from handsoff.core.control_signal import (
    ControlSignal,
    ZeroTolerance,
    control_from_values,
    l0_norm,
    l1_norm,
    linf_norm,
)
from handsoff.core.exceptions import (
    AssumptionError,
    BadInputError,
    HandsOffError,
    InfeasibleError,
    NumericFailureError,
    OutOfReachError,
)
from handsoff.core.grid import Grid
from handsoff.core.lti_system import LtiSystem

__all__ = [
    "AssumptionError",
    "BadInputError",
    "ControlSignal",
    "Grid",
    "HandsOffError",
    "InfeasibleError",
    "LtiSystem",
    "NumericFailureError",
    "OutOfReachError",
    "SolverConfig",
    "ZeroTolerance",
    "control_from_values",
    "l0_norm",
    "l1_norm",
    "linf_norm",
]
