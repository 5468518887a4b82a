"""
Scenario corpus: named, seeded runs with expected verdicts.
"""

from .scenarios import (
    SCENARIOS,
    UnknownScenario,
    linear_solution,
    run_scenario,
    run_suite,
    run_suite_async,
)

__all__ = [
    "SCENARIOS",
    "UnknownScenario",
    "linear_solution",
    "run_scenario",
    "run_suite",
    "run_suite_async",
]
