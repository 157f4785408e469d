"""Module conftest file."""
from hypothesis import settings

from tests.core.test_lti_system import oscillator, scalar_system
from tests.solver.test_hands_off_solver import (
    oscillator_solver,
    scalar_oracle,
    scalar_solver,
)

settings.register_profile("handsoff", max_examples=50, deadline=None)
settings.load_profile("handsoff")

__all__ = (
    "oscillator",
    "oscillator_solver",
    "scalar_oracle",
    "scalar_solver",
    "scalar_system",
)
