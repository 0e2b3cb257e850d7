"""Command-line plumbing: result cache, verification suites and subcommands."""

from .cache import CONVENTION_VERSION, ResultCache
from .commands import (
    COMMANDS,
    cmd_colored_jones,
    cmd_homology,
    cmd_jones,
    cmd_knots,
    cmd_verify,
    compute_homology,
    dispatch,
    homology_meta,
    load_diagram,
    resolve_colors,
)
from .suites import (
    DESK_CABLE_CROSSINGS,
    MAX_CABLE_CROSSINGS,
    SUITES,
    SuiteReport,
    cable_crossings,
    crossing_limit,
    feasible,
    run_suite,
    sized,
)

__all__ = [
    "CONVENTION_VERSION",
    "ResultCache",
    "COMMANDS",
    "dispatch",
    "load_diagram",
    "resolve_colors",
    "homology_meta",
    "compute_homology",
    "cmd_jones",
    "cmd_colored_jones",
    "cmd_homology",
    "cmd_verify",
    "cmd_knots",
    "SUITES",
    "MAX_CABLE_CROSSINGS",
    "DESK_CABLE_CROSSINGS",
    "SuiteReport",
    "cable_crossings",
    "crossing_limit",
    "feasible",
    "sized",
    "run_suite",
]
