"""
Data models for OrientedSeries.

This package contains the serializable models: axiom reports and verdicts,
ring specs, inversion certificates and scenario results.
"""

from .certificate import (
    CertificateStatus,
    HypothesisCheck,
    InversionCertificate,
    InversionDirection,
    InversionMode,
    TraceEntry,
    WitnessProvenance,
)
from .common import (
    AxiomCheck,
    AxiomReport,
    CarrierKind,
    Comparison,
    OrderKind,
    PowerDirection,
    ProductKind,
    Verdict,
)
from .scenario import ScenarioResult, ScenarioVerdict
from .specs import (
    PairRingSpec,
    PolynomialRingSpec,
    ResidueRingSpec,
    RingSpec,
    ScalarRingSpec,
    StructureConstantAlgebraSpec,
    TruncatedSeriesSpec,
)

__all__ = [
    # Common
    "AxiomCheck",
    "AxiomReport",
    "CarrierKind",
    "Comparison",
    "OrderKind",
    "PowerDirection",
    "ProductKind",
    "Verdict",
    # Specs
    "PairRingSpec",
    "PolynomialRingSpec",
    "ResidueRingSpec",
    "RingSpec",
    "ScalarRingSpec",
    "StructureConstantAlgebraSpec",
    "TruncatedSeriesSpec",
    # Certificates
    "CertificateStatus",
    "HypothesisCheck",
    "InversionCertificate",
    "InversionDirection",
    "InversionMode",
    "TraceEntry",
    "WitnessProvenance",
    # Scenarios
    "ScenarioResult",
    "ScenarioVerdict",
]
