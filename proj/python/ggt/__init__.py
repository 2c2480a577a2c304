"""Python bindings for the ggt C++ core.

Words use the CLI syntax: ``x1 X2 x1^3``; ``X<i>`` is the inverse of ``x<i>``.
Reports come back as JSON strings; ``run_scenario_json`` and ``run_all_json``
decode them.
"""

import json
from pathlib import Path

from ._core import (
    ParseError,
    UnknownScenario,
    commutator,
    conjugate,
    coset_rep,
    derived_depth,
    derived_member,
    fault_names,
    fox_derivative,
    invert,
    is_free_basis,
    multiply,
    power,
    reduce,
    replay,
    report_schema,
    run_all,
    run_scenario,
    scenario_names,
    subgroup_contains,
)


def run_scenario_json(name, **kwargs):
    return json.loads(run_scenario(name, **kwargs))


def run_all_json(**kwargs):
    return json.loads(run_all(**kwargs))


def cli_path():
    """Path of the bundled ``ggt`` executable, if it was installed."""
    path = Path(__file__).parent / "bin" / "ggt"
    return path if path.exists() else None


__all__ = [
    "ParseError",
    "UnknownScenario",
    "cli_path",
    "commutator",
    "conjugate",
    "coset_rep",
    "derived_depth",
    "derived_member",
    "fault_names",
    "fox_derivative",
    "invert",
    "is_free_basis",
    "multiply",
    "power",
    "reduce",
    "replay",
    "report_schema",
    "run_all",
    "run_all_json",
    "run_scenario",
    "run_scenario_json",
    "scenario_names",
    "subgroup_contains",
]
