"""Methods for reading plant files.

A plant file is JSON or YAML (chosen by suffix) holding, e.g.,

.. code:: json

    {"A": [[-1.0]], "B": [1.0], "T": 5.0, "N": 1000}

The cell count N is optional.
"""

import json
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

from handsoff.core.exceptions import BadInputError
from handsoff.core.lti_system import LtiSystem
from handsoff.matfun.assumption import validate_assumption

logger = logging.getLogger(__name__)

_FIELD_A = "A"
_FIELD_B = "B"
_FIELD_T = "T"
_FIELD_N = "N"
_YAML_SUFFIXES = (".yaml", ".yml")


@dataclass(frozen=True)
class SystemSpecFile:
    """Represents a loaded plant file.

    Attributes:
        path: File the plant was read from.
        system: The validated plant.
        N: Default cell count stored in the file, if any.
    """

    path: str
    system: LtiSystem
    N: Optional[int] = None


def _read_mapping(filepath: str) -> Dict[str, Any]:
    """Parses a JSON or YAML file into a mapping."""
    with open(filepath, encoding="utf-8") as input_file:
        try:
            if filepath.lower().endswith(_YAML_SUFFIXES):
                data = yaml.load(input_file, Loader=yaml.FullLoader)
            else:
                data = json.load(input_file)
        except (json.JSONDecodeError, yaml.YAMLError) as error:
            raise BadInputError(f"Cannot parse {filepath}: {error}")
    if not isinstance(data, dict):
        raise BadInputError(f"{filepath} must hold a mapping.")
    return data


def json_to_system(data: Dict[str, Any]) -> LtiSystem:
    """Converts a plant mapping to an (unvalidated) LtiSystem.

    Args:
        data: Mapping with keys "A", "B" and "T".

    Raises:
        BadInputError: if keys are missing or the plant is malformed.

    Returns:
        The plant.
    """
    missing = [k for k in (_FIELD_A, _FIELD_B, _FIELD_T) if k not in data]
    if missing:
        raise BadInputError(f"Plant is missing the keys {missing}.")
    try:
        return LtiSystem(A=data[_FIELD_A], B=data[_FIELD_B], T=data[_FIELD_T])
    except (TypeError, ValueError) as error:
        raise BadInputError(f"Malformed plant: {error}")


def load_system_spec(filepath: str) -> SystemSpecFile:
    """Loads and validates a plant file.

    Args:
        filepath: Path to a JSON or YAML plant file.

    Raises:
        BadInputError: if the file is missing, unparsable or malformed.
        AssumptionError: if the plant is not controllable or A is singular.

    Returns:
        The loaded plant with its optional cell count.
    """
    if not os.path.isfile(filepath):
        raise BadInputError(f"Plant file not found: {filepath}")
    data = _read_mapping(filepath)
    system = validate_assumption(json_to_system(data))

    cells = data.get(_FIELD_N)
    if cells is not None and (
        isinstance(cells, bool) or not isinstance(cells, int) or cells < 2
    ):
        raise BadInputError(f"N must be an integer >= 2, got {cells!r}.")
    logger.info(f"Loaded plant of dimension {system.n} from {filepath}")
    return SystemSpecFile(path=filepath, system=system, N=cells)
