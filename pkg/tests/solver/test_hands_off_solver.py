"""Tests for the maximum hands-off solver."""

import dataclasses
import math

import numpy as np
import pytest

from handsoff.analysis import run_parallel
from handsoff.core import (
    AssumptionError,
    BadInputError,
    ControlSignal,
    InfeasibleError,
    LtiSystem,
    control_from_values,
)
from handsoff.lp import LpStatus
from handsoff.oracle import Scalar1dSystem, oracle_value
from handsoff.solver import (
    CellKind,
    HandsOffSolver,
    classify_cells,
    feasible_with_budget,
    shared_solver,
    solve_hands_off,
    value,
    verify_terminal,
)

X1 = math.exp(5.0) - 1.0


@pytest.fixture(scope="session")
def scalar_oracle() -> Scalar1dSystem:
    """Closed form of x' = -x + u on [0, 5]."""
    return Scalar1dSystem(a=-1.0, b=1.0, T=5.0)


@pytest.fixture(scope="session")
def scalar_solver(scalar_system: LtiSystem) -> HandsOffSolver:
    """Solver of the scalar plant on 200 cells."""
    return HandsOffSolver(scalar_system, 200)


@pytest.fixture(scope="session")
def oscillator_solver(oscillator: LtiSystem) -> HandsOffSolver:
    """Solver of the oscillator on 100 cells."""
    return HandsOffSolver(oscillator, 100)


def test_zero_state(scalar_solver: HandsOffSolver) -> None:
    """Tests that the origin needs no control."""
    report = scalar_solver.solve([0.0])
    assert report.status is LpStatus.OPTIMAL
    assert report.value == 0.0
    assert np.all(report.control.values == 0.0)
    assert report.l0 == report.l1 == 0.0


def test_scalar_value(
    scalar_solver: HandsOffSolver, scalar_oracle: Scalar1dSystem
) -> None:
    """Tests V(100) against the closed form 5 - ln(e^5 - 100)."""
    report = scalar_solver.solve([100.0])
    assert report.value == pytest.approx(1.1203, abs=2e-3)
    assert report.value == pytest.approx(
        oracle_value(scalar_oracle, 100.0), abs=2e-3
    )
    assert report.l1 == pytest.approx(report.value, rel=1e-9)


def test_scalar_control_shape(scalar_solver: HandsOffSolver) -> None:
    """Tests that the control is off, then -1, with one switching cell."""
    report = scalar_solver.solve([100.0])
    kinds = classify_cells(report.control)
    switch = int(np.argmax(kinds != CellKind.ZERO))
    assert np.all(kinds[:switch] == CellKind.ZERO)
    assert np.all(kinds[switch + 1 :] == CellKind.MINUS_ONE)
    assert report.fractional_cells <= 1
    tau = switch * report.control.grid.h
    assert tau == pytest.approx(math.log(math.exp(5.0) - 100.0), abs=0.05)


def test_terminal_state(
    scalar_solver: HandsOffSolver, oscillator_solver: HandsOffSolver
) -> None:
    """Tests that re-simulated controls reach the origin."""
    for solver, xi in (
        (scalar_solver, np.array([-120.0])),
        (oscillator_solver, np.array([0.8, -0.5])),
    ):
        report = solver.solve(xi)
        residual = np.max(np.abs(report.terminal_residual))
        assert residual <= solver.terminal_tolerance(xi)
        assert verify_terminal(solver.system, report) == pytest.approx(
            report.terminal_residual, abs=1e-14
        )


def test_flipped_cell_misses_origin(scalar_solver: HandsOffSolver) -> None:
    """Tests that flipping one saturated cell leaves a large residual."""
    report = scalar_solver.solve([100.0])
    values = report.control.values.copy()
    assert values[-1] == pytest.approx(-1.0)
    values[-1] = 1.0
    corrupted = dataclasses.replace(
        report, control=ControlSignal(report.control.grid, values)
    )
    residual = np.max(np.abs(verify_terminal(scalar_solver.system, corrupted)))
    assert residual > 100 * scalar_solver.terminal_tolerance(report.xi)


def test_bang_off_bang(oscillator_solver: HandsOffSolver) -> None:
    """Tests that at most n cells are fractional."""
    report = oscillator_solver.solve([1.0, 1.0])
    h = report.control.grid.h
    assert report.fractional_cells <= 2
    assert abs(report.l0 - report.l1) <= 2 * h + 1e-5
    assert report.linf <= 1.0 + 1e-9


def test_symmetry(oscillator_solver: HandsOffSolver) -> None:
    """Tests V(xi) = V(-xi)."""
    xi = np.array([0.7, -1.1])
    assert oscillator_solver.value(xi) == pytest.approx(
        oscillator_solver.value(-xi), abs=1e-9
    )


def test_infeasible(scalar_solver: HandsOffSolver) -> None:
    """Tests that states outside R raise with the phase-1 residual."""
    with pytest.raises(InfeasibleError) as error:
        scalar_solver.solve([200.0])
    assert error.value.phase_one_residual == pytest.approx(200.0 - X1, rel=1e-6)


def test_feasible_with_budget(scalar_solver: HandsOffSolver) -> None:
    """Tests budget feasibility around V(100)."""
    v = scalar_solver.value([100.0])
    assert scalar_solver.feasible_with_budget([100.0], v + 1e-6)
    assert not scalar_solver.feasible_with_budget([100.0], v - 1e-3)
    assert scalar_solver.feasible_with_budget([100.0])
    assert not scalar_solver.feasible_with_budget([150.0])
    assert scalar_solver.feasible_with_budget([0.0], 0.0)
    assert not scalar_solver.feasible_with_budget([1.0], 0.0)


def test_negative_budget(scalar_solver: HandsOffSolver) -> None:
    """Tests that negative budgets are rejected."""
    with pytest.raises(ValueError):
        scalar_solver.feasible_with_budget([1.0], -0.1)


def test_full_budget_is_reachability(scalar_solver: HandsOffSolver) -> None:
    """Tests that a budget of T does not restrict the reachable set."""
    assert scalar_solver.feasible_with_budget([0.999 * X1], 5.0)


def test_wrong_dimension(oscillator_solver: HandsOffSolver) -> None:
    """Tests that the state must match the plant dimension."""
    with pytest.raises(BadInputError):
        oscillator_solver.solve([1.0])


def test_invalid_plant() -> None:
    """Tests that the assumption is validated on construction."""
    sys = LtiSystem(A=[[0.0, 1.0], [0.0, 0.0]], B=[0.0, 1.0], T=1.0)
    with pytest.raises(AssumptionError):
        HandsOffSolver(sys, 10)


def test_module_functions(scalar_system: LtiSystem) -> None:
    """Tests the convenience wrappers against the solver."""
    report = solve_hands_off(scalar_system, [50.0], 100)
    assert value(scalar_system, [50.0], 100) == report.value
    assert feasible_with_budget(
        scalar_system, [50.0], 100, report.value + 1e-6
    )
    assert not feasible_with_budget(
        scalar_system, [50.0], 100, 0.5 * report.value
    )


def test_classify_cells() -> None:
    """Tests the cell classification bands."""
    u = control_from_values(1.0, [0.0, 1e-7, 1.0, -1.0, 0.5, -(1.0 - 1e-7)])
    kinds = classify_cells(u).tolist()
    assert kinds == [
        CellKind.ZERO,
        CellKind.ZERO,
        CellKind.PLUS_ONE,
        CellKind.MINUS_ONE,
        CellKind.FRACTIONAL,
        CellKind.MINUS_ONE,
    ]


def test_report_to_dict(scalar_solver: HandsOffSolver) -> None:
    """Tests the solution-file layout of a report."""
    data = scalar_solver.solve([25.0]).to_dict()
    assert data["status"] == "optimal"
    assert data["grid"] == {"T": 5.0, "N": 200}
    assert len(data["u"]) == 200
    assert data["xi"] == [25.0]
    assert set(data) >= {
        "value",
        "l1",
        "l0",
        "linf",
        "bang_off_bang_fraction",
        "terminal_residual",
    }


@pytest.mark.parametrize("N", [0, 1, -5])
def test_too_few_cells(scalar_system: LtiSystem, N: int) -> None:
    """Tests that a cell count below 2 is bad input, not the default."""
    with pytest.raises(BadInputError):
        HandsOffSolver(scalar_system, N)


def test_shared_solver_across_threads(scalar_system: LtiSystem) -> None:
    """Tests that concurrent callers share one solver per plant and grid."""
    solvers = run_parallel(
        lambda _: shared_solver(scalar_system, 60), list(range(8)), 4
    )
    assert all(solver is solvers[0] for solver in solvers)
    assert shared_solver(scalar_system, 60) is solvers[0]
    assert shared_solver(scalar_system, 61) is not solvers[0]
