"""Tests for the matrix exponential."""

import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from handsoff.core import NumericFailureError
from handsoff.matfun import expm

square_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: arrays(
        np.float64,
        (n, n),
        elements=st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
    )
)


def test_zero_matrix() -> None:
    """Tests that e^0 is the identity."""
    result = expm(np.zeros((3, 3)))
    assert np.array_equal(result.matrix, np.eye(3))
    assert result.squarings == 0


def test_scalar() -> None:
    """Tests a 1 x 1 exponential against math.exp."""
    assert expm([[-1.0]], 5.0).matrix[0, 0] == pytest.approx(
        math.exp(-5.0), rel=1e-14
    )


def test_rotation() -> None:
    """Tests that the oscillator generator produces a rotation."""
    angle = 0.7
    rotation = expm([[0.0, 1.0], [-1.0, 0.0]], angle).matrix
    expected = np.array(
        [
            [math.cos(angle), math.sin(angle)],
            [-math.sin(angle), math.cos(angle)],
        ]
    )
    assert rotation == pytest.approx(expected, abs=1e-14)


def test_large_norm_uses_squaring() -> None:
    """Tests scaling and squaring on a matrix of large norm."""
    A = np.array([[-20.0, 3.0], [0.0, -15.0]])
    result = expm(A)
    assert result.squarings > 0
    assert result.degree == 13
    assert result.matrix == pytest.approx(scipy.linalg.expm(A), rel=1e-10)


@pytest.mark.parametrize("scale,degree", [(1e-3, 3), (0.2, 5), (0.8, 7)])
def test_low_degree_approximants(scale: float, degree: int) -> None:
    """Tests that small norms select low degrees and stay accurate."""
    A = scale * np.array([[0.5, -0.5], [0.25, 0.25]])
    result = expm(A)
    assert result.degree == degree
    assert result.matrix == pytest.approx(scipy.linalg.expm(A), rel=1e-13)


def test_not_square() -> None:
    """Tests that non-square input is rejected."""
    with pytest.raises(ValueError):
        expm(np.ones((2, 3)))


def test_non_finite_input() -> None:
    """Tests that non-finite input is a numeric failure."""
    with pytest.raises(NumericFailureError):
        expm([[np.inf]])


def test_overflow() -> None:
    """Tests that overflow is detected."""
    with pytest.raises(NumericFailureError):
        expm([[1000.0]])


@given(square_matrices)
def test_matches_reference(A: np.ndarray) -> None:
    """Tests agreement with the scipy implementation."""
    reference = scipy.linalg.expm(A)
    assert expm(A).matrix == pytest.approx(
        reference, rel=1e-9, abs=1e-9 * np.max(np.abs(reference))
    )


@given(square_matrices, st.floats(min_value=0.0, max_value=2.0))
def test_semigroup(A: np.ndarray, t: float) -> None:
    """Tests e^{A(t+s)} = e^{At} e^{As}."""
    s = 0.5
    combined = expm(A, t + s).matrix
    product = expm(A, t).matrix @ expm(A, s).matrix
    assert product == pytest.approx(
        combined, rel=1e-8, abs=1e-8 * np.max(np.abs(combined))
    )


@given(square_matrices)
def test_inverse(A: np.ndarray) -> None:
    """Tests e^{A} e^{-A} = I."""
    forward = expm(A).matrix
    backward = expm(-A).matrix
    scale = np.linalg.norm(forward) * np.linalg.norm(backward)
    assert forward @ backward == pytest.approx(
        np.eye(A.shape[0]), abs=1e-12 * scale
    )
