"""Tests for boundary probing of the reachable sets."""

import math

import numpy as np
import pytest

from handsoff.analysis import (
    RayProbe,
    bisect_radius,
    boundary_radius,
    random_directions,
)
from handsoff.core import BadInputError, LtiSystem
from handsoff.solver import HandsOffSolver

X1 = math.exp(5.0) - 1.0


@pytest.mark.parametrize("direction", [1.0, -1.0])
def test_scalar_reach(scalar_solver: HandsOffSolver, direction: float) -> None:
    """Tests that the boundary of R is at +-(e^5 - 1)."""
    radius = bisect_radius(scalar_solver, np.array([direction]))
    assert radius == pytest.approx(X1, rel=1e-5)


def test_scalar_budget(scalar_solver: HandsOffSolver) -> None:
    """Tests that the boundary of R_V(100) is at 100."""
    alpha = scalar_solver.value([100.0])
    radius = bisect_radius(scalar_solver, np.array([1.0]), alpha)
    assert radius == pytest.approx(100.0, rel=1e-5)


def test_zero_budget(oscillator_solver: HandsOffSolver) -> None:
    """Tests that R_0 collapses to the origin."""
    radius = bisect_radius(oscillator_solver, np.array([0.6, 0.8]), 0.0)
    assert radius <= 1e-5


def test_nesting(oscillator_solver: HandsOffSolver) -> None:
    """Tests that the radii grow with the budget."""
    d = np.array([0.0, 1.0])
    radii = [bisect_radius(oscillator_solver, d, a) for a in (0.5, 1.0, 3.0)]
    reach = bisect_radius(oscillator_solver, d)
    assert radii[0] < radii[1] < radii[2] <= reach * (1 + 1e-6)


def test_symmetry(oscillator_solver: HandsOffSolver) -> None:
    """Tests that R is centrally symmetric."""
    d = np.array([math.cos(1.0), math.sin(1.0)])
    forward = bisect_radius(oscillator_solver, d)
    backward = bisect_radius(oscillator_solver, -d)
    assert forward == pytest.approx(backward, rel=1e-5)


@pytest.mark.parametrize("d", [[1.0, 1.0], [0.5], [0.0, 0.0]])
def test_invalid_direction(oscillator_solver: HandsOffSolver, d) -> None:
    """Tests that non-unit or mis-sized directions are rejected."""
    with pytest.raises(BadInputError):
        bisect_radius(oscillator_solver, np.array(d))


def test_boundary_radius_wrapper(scalar_system: LtiSystem) -> None:
    """Tests the plant-level entry point."""
    radius = boundary_radius(scalar_system, np.array([1.0]), 100)
    assert radius == pytest.approx(X1, rel=1e-5)


def test_random_directions() -> None:
    """Tests unit norms, reproducibility and +-1 in one dimension."""
    first = random_directions(np.random.default_rng(5), 3, 10)
    second = random_directions(np.random.default_rng(5), 3, 10)
    assert np.array_equal(first, second)
    assert np.linalg.norm(first, axis=1) == pytest.approx(np.ones(10))
    scalar = random_directions(np.random.default_rng(5), 1, 20)
    assert set(scalar[:, 0].tolist()) <= {-1.0, 1.0}


def test_probe_caches(scalar_solver: HandsOffSolver) -> None:
    """Tests interior sampling and the radius cache."""
    probe = RayProbe(scalar_solver)
    points, radii = probe.interior_points(np.random.default_rng(0), 6)
    assert radii == pytest.approx(np.full(6, X1), rel=1e-5)
    assert np.all(np.abs(points[:, 0]) < 0.95 * radii)
    sample = probe.sample(np.array([-1.0]))
    assert sample.boundary_point[0] == pytest.approx(-X1, rel=1e-5)
