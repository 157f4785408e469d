"""Module level init for the property-verification suites."""
from handsoff.analysis.bang_off_bang import bang_off_bang_suite, check_report
from handsoff.analysis.continuity import continuity_suite
from handsoff.analysis.convexity import convexity_suite
from handsoff.analysis.level_sets import default_alphas, level_set_suite
from handsoff.analysis.oracle_comparison import (
    oracle_suite,
    sample_span,
    scalar_oracle_for,
    shape_agreement,
)
from handsoff.analysis.parallel import resolve_threads, run_parallel
from handsoff.analysis.property_report import PropertyFailure, PropertyReport
from handsoff.analysis.ray_probe import (
    RayProbe,
    RaySample,
    bisect_radius,
    boundary_radius,
    random_directions,
)
from handsoff.analysis.sweep import SweepLine, SweepRow, sweep_value

__all__ = [
    "PropertyFailure",
    "PropertyReport",
    "RayProbe",
    "RaySample",
    "SweepLine",
    "SweepRow",
    "bang_off_bang_suite",
    "bisect_radius",
    "boundary_radius",
    "check_report",
    "continuity_suite",
    "convexity_suite",
    "default_alphas",
    "level_set_suite",
    "oracle_suite",
    "random_directions",
    "sample_span",
    "resolve_threads",
    "run_parallel",
    "scalar_oracle_for",
    "shape_agreement",
    "sweep_value",
]
