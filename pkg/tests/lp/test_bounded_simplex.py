"""Tests for the bounded-variable simplex method."""

import numpy as np
import pytest
import scipy.optimize

from handsoff.lp import BoundedSimplex, LpStatus, LpTolerances, solve_lp


def test_bound_flip_only() -> None:
    """Tests a problem solved by moving a variable to its upper bound."""
    solution = solve_lp(
        c=[-1.0, 0.0],
        G=[[1.0, 1.0]],
        rhs=[1.0],
        lower=[0.0, 0.0],
        upper=[1.0, 1.0],
    )
    assert solution.status is LpStatus.OPTIMAL
    assert solution.x.tolist() == pytest.approx([1.0, 0.0])
    assert solution.objective == pytest.approx(-1.0)


def test_textbook_problem() -> None:
    """Tests a small problem with a known vertex solution."""
    # max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, 0 <= x <= 3.
    solution = solve_lp(
        c=[-3.0, -2.0, 0.0, 0.0],
        G=[[1.0, 1.0, 1.0, 0.0], [1.0, 3.0, 0.0, 1.0]],
        rhs=[4.0, 6.0],
        lower=[0.0, 0.0, 0.0, 0.0],
        upper=[3.0, np.inf, np.inf, np.inf],
    )
    assert solution.is_optimal
    assert solution.x[:2] == pytest.approx([3.0, 1.0])
    assert solution.objective == pytest.approx(-11.0)


def test_negative_lower_bounds() -> None:
    """Tests variables with negative and infinite lower bounds."""
    solution = solve_lp(
        c=[1.0, 1.0],
        G=[[1.0, -1.0]],
        rhs=[0.5],
        lower=[-2.0, -np.inf],
        upper=[2.0, 1.0],
    )
    assert solution.is_optimal
    assert solution.x[0] - solution.x[1] == pytest.approx(0.5)
    assert solution.objective == pytest.approx(-2.0 - 2.5)


def test_infeasible() -> None:
    """Tests that an unreachable right-hand side is infeasible."""
    solution = solve_lp(
        c=[1.0, 1.0],
        G=[[1.0, 1.0]],
        rhs=[3.0],
        lower=[0.0, 0.0],
        upper=[1.0, 1.0],
    )
    assert solution.status is LpStatus.INFEASIBLE
    assert solution.phase_one_residual == pytest.approx(1.0)


def test_unbounded() -> None:
    """Tests an objective decreasing along an unbounded ray."""
    solution = solve_lp(
        c=[-1.0, 0.0],
        G=[[1.0, -1.0]],
        rhs=[0.0],
        lower=[0.0, 0.0],
        upper=[np.inf, np.inf],
    )
    assert solution.status is LpStatus.UNBOUNDED


def test_phase_one_only() -> None:
    """Tests that a feasibility check returns a feasible point."""
    G = np.array([[1.0, 2.0, -1.0]])
    solution = solve_lp(
        c=[1.0, 1.0, 1.0],
        G=G,
        rhs=[1.5],
        lower=[0.0, 0.0, 0.0],
        upper=[1.0, 1.0, 1.0],
        phase_one_only=True,
    )
    assert solution.is_optimal
    assert G @ solution.x == pytest.approx([1.5])


def test_degenerate_start() -> None:
    """Tests a zero right-hand side, where every first pivot is degenerate."""
    solution = solve_lp(
        c=[1.0, 1.0, 1.0, 1.0],
        G=[[1.0, -1.0, 2.0, -2.0], [1.0, 1.0, -1.0, -1.0]],
        rhs=[0.0, 0.0],
        lower=[0.0] * 4,
        upper=[1.0] * 4,
    )
    assert solution.is_optimal
    assert solution.objective == pytest.approx(0.0, abs=1e-12)


def test_iteration_cap() -> None:
    """Tests that exhausting the iteration cap is a numeric failure."""
    solver = BoundedSimplex(LpTolerances(max_iterations=1))
    G = np.array([[1.0, 2.0, 3.0, 4.0], [4.0, 3.0, 2.0, 1.0]])
    solution = solver.solve(
        [1.0, 1.0, 1.0, 1.0], G, [5.0, 5.0], np.zeros(4), np.ones(4) * 3
    )
    assert solution.status is LpStatus.NUMERIC_FAILURE
    assert solution.message


@pytest.mark.parametrize(
    "c,G,rhs,lower,upper",
    [
        ([1.0], [[1.0, 1.0]], [1.0], [0.0, 0.0], [1.0, 1.0]),
        ([1.0, 1.0], [[1.0, 1.0]], [1.0, 2.0], [0.0, 0.0], [1.0, 1.0]),
        ([1.0, 1.0], [[1.0, 1.0]], [1.0], [0.0, 2.0], [1.0, 1.0]),
        ([1.0, 1.0], [[1.0, 1.0]], [1.0], [0.0, -np.inf], [1.0, np.inf]),
        ([1.0, 1.0], [[1.0, np.nan]], [1.0], [0.0, 0.0], [1.0, 1.0]),
    ],
)
def test_malformed_data(c, G, rhs, lower, upper) -> None:
    """Tests that malformed data raises ValueError."""
    with pytest.raises(ValueError):
        solve_lp(c, G, rhs, lower, upper)


def test_random_problems_match_reference() -> None:
    """Tests optimal values against scipy's HiGHS on random problems."""
    rng = np.random.default_rng(11)
    for _ in range(20):
        m, n = rng.integers(1, 4), rng.integers(4, 12)
        G = rng.normal(size=(m, n))
        x_feasible = rng.uniform(0.0, 1.0, n)
        rhs = G @ x_feasible
        c = rng.normal(size=n)
        solution = solve_lp(c, G, rhs, np.zeros(n), np.ones(n))
        reference = scipy.optimize.linprog(
            c, A_eq=G, b_eq=rhs, bounds=[(0.0, 1.0)] * n, method="highs"
        )
        assert solution.is_optimal
        assert solution.objective == pytest.approx(reference.fun, abs=1e-8)
        assert solution.interior_count(np.zeros(n), np.ones(n)) <= m
