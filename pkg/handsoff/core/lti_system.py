"""Interface representing a single-input linear time-invariant plant.

The plant is x'(t) = A x(t) + B u(t) on the horizon [0, T] with a scalar
control u(t).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Dict, Sequence, Union

import numpy as np

ArrayLike = Union[Sequence[Any], np.ndarray, float]


def _frozen_array(values: ArrayLike) -> np.ndarray:
    """Returns a read-only float copy of the given values."""
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class LtiSystem:
    """Represents the plant (A, B, T).

    Instances are immutable. A system is tagged as validated once the
    controllability and nonsingularity assumption has been checked, see
    handsoff.matfun.assumption.validate_assumption.

    Attributes:
        A: State matrix of shape (n, n).
        B: Input vector of shape (n,); an (n, 1) column is accepted.
        T: Horizon length (> 0).
        validated: Whether the assumption has been verified.
    """

    A: np.ndarray
    B: np.ndarray
    T: float
    validated: bool = field(default=False)

    def __post_init__(self) -> None:
        state_matrix = np.atleast_2d(_frozen_array(self.A))
        input_vector = np.array(self.B, dtype=float)
        if input_vector.ndim == 2:
            if input_vector.shape[1] != 1:
                raise ValueError(
                    "Only single-input plants are supported; B must be a "
                    f"column, got shape {input_vector.shape}."
                )
            input_vector = input_vector[:, 0]
        input_vector = np.atleast_1d(input_vector)

        if state_matrix.ndim != 2 or (
            state_matrix.shape[0] != state_matrix.shape[1]
        ):
            raise ValueError(
                f"State matrix must be square, got {state_matrix.shape}."
            )
        if input_vector.shape != (state_matrix.shape[0],):
            raise ValueError(
                f"Input vector shape {input_vector.shape} incompatible with "
                f"state matrix shape {state_matrix.shape}."
            )
        if not (
            np.all(np.isfinite(state_matrix))
            and np.all(np.isfinite(input_vector))
        ):
            raise ValueError("System matrices must have finite entries.")
        if not np.isfinite(self.T) or self.T <= 0:
            raise ValueError(f"Horizon must be positive, got {self.T!r}.")

        state_matrix = state_matrix.copy()
        state_matrix.flags.writeable = False
        input_vector = input_vector.copy()
        input_vector.flags.writeable = False
        object.__setattr__(self, "A", state_matrix)
        object.__setattr__(self, "B", input_vector)
        object.__setattr__(self, "T", float(self.T))

    def __repr__(self) -> str:
        return (
            f"LtiSystem(n={self.n}, T={self.T!r}, validated={self.validated})"
        )

    @property
    def n(self) -> int:
        """Returns the state dimension."""
        return self.A.shape[0]

    def with_validated(self) -> LtiSystem:
        """Returns a copy of the system tagged as validated."""
        return dataclasses.replace(self, validated=True)

    def to_dict(self) -> Dict[str, Any]:
        """Returns the system as a dictionary of plain lists."""
        return {
            "A": self.A.tolist(),
            "B": self.B.tolist(),
            "T": self.T,
        }
