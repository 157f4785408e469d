"""Interface representing the outcome of a property-verification suite."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np


def to_plain(value: Any) -> Any:
    """Converts numpy scalars and arrays (possibly nested) to plain Python.

    Args:
        value: Value to convert.

    Returns:
        A JSON-serializable equivalent.
    """
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return value


@dataclass(frozen=True)
class PropertyFailure:
    """Represents one violated check.

    Attributes:
        index: Sample index the failure belongs to.
        check: Name of the violated check (e.g., "convexity").
        inputs: Sampled inputs (initial states, budgets, directions).
        observed: Observed quantities.
        tolerance: Tolerance the observation was compared against.
    """

    index: int
    check: str
    inputs: Dict[str, Any]
    observed: Dict[str, Any]
    tolerance: float

    def to_dict(self) -> Dict[str, Any]:
        """Returns the failure as a JSON-serializable dictionary."""
        return {
            "index": self.index,
            "check": self.check,
            "inputs": to_plain(self.inputs),
            "observed": to_plain(self.observed),
            "tolerance": float(self.tolerance),
        }


@dataclass
class PropertyReport:
    """Represents the pass/fail record of a suite.

    Attributes:
        suite: Suite name.
        seed: Seed of the random generator the samples were drawn from.
        samples: Number of samples tested.
        tolerances: Tolerances in effect.
        failures: Violated checks.
        statistics: Summary numbers (e.g., estimated Lipschitz constants).
    """

    suite: str
    seed: int
    samples: int
    tolerances: Dict[str, float] = field(default_factory=dict)
    failures: List[PropertyFailure] = field(default_factory=list)
    statistics: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Returns True if no check failed."""
        return not self.failures

    def add_failure(
        self,
        index: int,
        check: str,
        inputs: Dict[str, Any],
        observed: Dict[str, Any],
        tolerance: float,
    ) -> None:
        """Records a violated check."""
        self.failures.append(
            PropertyFailure(index, check, inputs, observed, tolerance)
        )

    def extend(self, failures: List[PropertyFailure]) -> None:
        """Records failures collected elsewhere (e.g., by a worker)."""
        self.failures.extend(failures)

    def failures_of(self, check: str) -> List[PropertyFailure]:
        """Returns the failures of one check."""
        return [f for f in self.failures if f.check == check]

    def to_dict(self) -> Dict[str, Any]:
        """Returns the report as a JSON-serializable dictionary.

        Failures are ordered by sample index, so the output does not depend
        on the order in which workers finished.
        """
        failures = sorted(self.failures, key=lambda f: (f.index, f.check))
        return {
            "suite": self.suite,
            "passed": self.passed,
            "seed": self.seed,
            "samples": self.samples,
            "tolerances": to_plain(self.tolerances),
            "statistics": to_plain(self.statistics),
            "failures": [f.to_dict() for f in failures],
        }
