"""Solver configuration.

The configuration can be overridden from a YAML file, e.g.,

.. code:: yaml

    eps_zero: 1.0e-6
    default_cells: 500
    lp:
      feasibility: 1.0e-8
      refactor_interval: 50
"""

import dataclasses
import os
from dataclasses import dataclass, field
from typing import Any, Dict

import yaml

from handsoff.lp.tolerances import LpTolerances

_FIELD_LP = "lp"


@dataclass(frozen=True)
class SolverConfig:
    """Tunable constants of the solver and the analysis suites.

    Attributes:
        lp: Tolerances of the simplex method.
        eps_zero: Magnitude at or below which a control value counts as zero.
        one_tolerance: Distance from +-1 within which a control value counts
          as saturated.
        default_cells: Number of grid cells N used when none is given.
        terminal_tolerance: Relative tolerance of the re-simulated terminal
          state, scaled by 1 + max |xi|.
        bisection_width: Relative bracket width ending a boundary bisection.
        bisection_iterations: Iteration cap of a boundary bisection.
    """

    lp: LpTolerances = field(default_factory=LpTolerances)
    eps_zero: float = 1e-6
    one_tolerance: float = 1e-6
    default_cells: int = 1000
    terminal_tolerance: float = 1e-6
    bisection_width: float = 1e-6
    bisection_iterations: int = 80

    def __post_init__(self) -> None:
        if not 0 < self.eps_zero < 0.5:
            raise ValueError("eps_zero must lie in (0, 0.5).")
        if not 0 < self.one_tolerance < 0.5:
            raise ValueError("one_tolerance must lie in (0, 0.5).")
        if self.default_cells < 2:
            raise ValueError("default_cells must be at least 2.")
        if self.bisection_width <= 0 or self.bisection_iterations < 1:
            raise ValueError("Invalid bisection settings.")

    def to_dict(self) -> Dict[str, Any]:
        """Returns the configuration as a (nested) dictionary."""
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "SolverConfig":
        """Creates a configuration from a dictionary of overrides.

        Args:
            config: Mapping of field names to values; the key "lp" may hold a
              mapping of LpTolerances overrides.

        Raises:
            KeyError: if the mapping contains unknown keys.

        Returns:
            The configuration with the overrides applied to the defaults.
        """
        config = dict(config or {})
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(config) - known
        if unknown:
            raise KeyError(f"Unknown configuration keys: {sorted(unknown)}")

        lp_overrides = config.pop(_FIELD_LP, None) or {}
        lp_known = {f.name for f in dataclasses.fields(LpTolerances)}
        unknown = set(lp_overrides) - lp_known
        if unknown:
            raise KeyError(
                f"Unknown LP tolerance keys: {sorted(unknown)}"
            )
        return cls(lp=LpTolerances(**lp_overrides), **config)

    @classmethod
    def from_yaml(cls, config_file: str) -> "SolverConfig":
        """Loads a configuration from a YAML file.

        Args:
            config_file: Name of YAML config file.

        Raises:
            FileNotFoundError: if the file does not exist.
            KeyError: if the file contains unknown keys.

        Returns:
            The loaded configuration.
        """
        if not os.path.isfile(config_file):
            raise FileNotFoundError(f"Config file not found: {config_file}")

        with open(config_file, encoding="utf-8") as yaml_file:
            config = yaml.load(yaml_file, Loader=yaml.FullLoader)
        return cls.from_dict(config or {})
