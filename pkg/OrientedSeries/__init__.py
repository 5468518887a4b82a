"""
OrientedSeries - exact inversion by oriented geometric series

This package inverts elements of partially ordered and seminormed rings,
possibly nonassociative, by summing Σ (1 − x)^n with right- or left-nested
powers, and certifies every hypothesis it can decide along the way. It ships
exact ring instances (rationals, ordered polynomials, pairs, truncated
series, p-adic residues, structure-constant algebras), the interval and
seminorm topologies, and a corpus of named scenarios.
"""

__version__ = "0.1.0"

from .core.axioms import check_order_compatibility, check_ring_axioms
from .core.order import compare, is_convex_sampled
from .core.powers import oriented_power
from .inversion.engine import (
    DirectionalMismatch,
    InvariantViolation,
    NotCauchy,
    invert_ordered,
    invert_seminormed,
    invert_seminormed_two_sided,
    invert_two_sided,
)
from .inversion.witness import archimedean_witness_search, dyadic_family, inf_power_zero_check
from .models.certificate import CertificateStatus, InversionCertificate
from .models.common import AxiomReport, Comparison, PowerDirection, Verdict
from .models.scenario import ScenarioResult, ScenarioVerdict
from .rings import (
    AlgebraError,
    Element,
    RingInstance,
    make_instance,
    ord_valuation,
    ring_from_name,
    spec_from_name,
)
from .suite.scenarios import UnknownScenario, run_scenario, run_suite, run_suite_async
from .topology.balls import cauchy_check, hausdorff_witness
from .topology.interval import BasicOpen, contains, negate, translate
from .topology.seminorm import SeminormSpec, check_seminorm_axioms, make_seminorm
from .utils.converters import to_dataframe, to_dict, to_json, to_report_lines

# Re-export subpackages for nicer imports
from . import core, inversion, models, rings, suite, topology, utils

__all__ = [
    # Rings
    "AlgebraError",
    "Element",
    "RingInstance",
    "make_instance",
    "ord_valuation",
    "ring_from_name",
    "spec_from_name",
    "rings",
    # Order and axioms
    "Comparison",
    "AxiomReport",
    "Verdict",
    "PowerDirection",
    "compare",
    "is_convex_sampled",
    "oriented_power",
    "check_ring_axioms",
    "check_order_compatibility",
    "core",
    # Topology
    "BasicOpen",
    "SeminormSpec",
    "contains",
    "translate",
    "negate",
    "make_seminorm",
    "check_seminorm_axioms",
    "cauchy_check",
    "hausdorff_witness",
    "topology",
    # Inversion
    "CertificateStatus",
    "InversionCertificate",
    "DirectionalMismatch",
    "InvariantViolation",
    "NotCauchy",
    "archimedean_witness_search",
    "dyadic_family",
    "inf_power_zero_check",
    "invert_ordered",
    "invert_two_sided",
    "invert_seminormed",
    "invert_seminormed_two_sided",
    "inversion",
    # Scenarios
    "ScenarioResult",
    "ScenarioVerdict",
    "UnknownScenario",
    "run_scenario",
    "run_suite",
    "run_suite_async",
    "suite",
    # Utilities
    "to_dataframe",
    "to_dict",
    "to_json",
    "to_report_lines",
    "utils",
    "models",
]
