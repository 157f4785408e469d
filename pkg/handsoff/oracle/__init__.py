"""Module level init for the closed-form scalar oracle."""
from handsoff.oracle.scalar_oracle import (
    Scalar1dSystem,
    lipschitz_bound,
    oracle_control,
    oracle_value,
    reachable_interval,
    switching_time,
)

__all__ = [
    "Scalar1dSystem",
    "lipschitz_bound",
    "oracle_control",
    "oracle_value",
    "reachable_interval",
    "switching_time",
]
