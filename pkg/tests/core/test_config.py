"""Tests for the solver configuration."""

import pytest

from handsoff.core import SolverConfig
from handsoff.lp import LpTolerances


def test_defaults() -> None:
    """Tests the default constants."""
    config = SolverConfig()
    assert config.eps_zero == 1e-6
    assert config.default_cells == 1000
    assert config.lp == LpTolerances()
    assert config.lp.feasibility == 1e-8
    assert config.lp.bland_factor == 5
    assert config.lp.refactor_interval == 100


def test_from_yaml() -> None:
    """Tests loading overrides, including nested LP tolerances."""
    config = SolverConfig.from_yaml("tests/data/config/solver.yaml")
    assert config.eps_zero == 1e-7
    assert config.default_cells == 300
    assert config.lp.feasibility == 1e-9
    assert config.lp.refactor_interval == 50
    assert config.lp.pivot == LpTolerances().pivot


def test_from_yaml_missing_file() -> None:
    """Tests that a missing file raises FileNotFoundError."""
    with pytest.raises(FileNotFoundError):
        SolverConfig.from_yaml("tests/data/config/nonexistent.yaml")


def test_unknown_keys() -> None:
    """Tests that unknown keys are reported instead of ignored."""
    with pytest.raises(KeyError):
        SolverConfig.from_yaml("tests/data/config/unknown_key.yaml")
    with pytest.raises(KeyError):
        SolverConfig.from_dict({"lp": {"pivoting": 1e-3}})


def test_round_trip_through_dict() -> None:
    """Tests that to_dict and from_dict are inverse."""
    config = SolverConfig.from_dict({"eps_zero": 1e-5, "lp": {"bound": 1e-8}})
    assert SolverConfig.from_dict(config.to_dict()) == config


@pytest.mark.parametrize(
    "overrides",
    [
        {"eps_zero": 0.0},
        {"one_tolerance": 0.7},
        {"default_cells": 1},
        {"bisection_iterations": 0},
        {"lp": {"feasibility": -1.0}},
        {"lp": {"refactor_interval": 0}},
    ],
)
def test_invalid_values(overrides) -> None:
    """Tests that invalid settings are rejected."""
    with pytest.raises(ValueError):
        SolverConfig.from_dict(overrides)


def test_iteration_cap() -> None:
    """Tests the default and explicit iteration caps."""
    assert LpTolerances().iteration_cap(2, 10) == 50 * 12 + 1000
    assert LpTolerances(max_iterations=7).iteration_cap(2, 10) == 7
