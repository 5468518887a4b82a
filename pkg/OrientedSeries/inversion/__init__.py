"""
Geometric-series inversion in ordered and seminormed rings.
"""

from .engine import (
    DEFAULT_BUDGET,
    DirectionalMismatch,
    InvariantViolation,
    NotCauchy,
    invert_ordered,
    invert_seminormed,
    invert_seminormed_two_sided,
    invert_two_sided,
    ordered_hypotheses,
)
from .witness import (
    InfPowerVerdict,
    NotPositive,
    WitnessOutcome,
    WitnessSearch,
    archimedean_witness_search,
    dyadic_family,
    inf_power_zero_check,
)

__all__ = [
    # Errors
    "DirectionalMismatch",
    "InvariantViolation",
    "NotCauchy",
    "NotPositive",
    # Inversion
    "DEFAULT_BUDGET",
    "invert_ordered",
    "invert_two_sided",
    "invert_seminormed",
    "invert_seminormed_two_sided",
    "ordered_hypotheses",
    # Witnesses
    "InfPowerVerdict",
    "WitnessOutcome",
    "WitnessSearch",
    "archimedean_witness_search",
    "dyadic_family",
    "inf_power_zero_check",
]
