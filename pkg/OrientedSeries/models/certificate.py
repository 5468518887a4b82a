"""
Inversion certificates: the audit trail of one series-inversion run.
"""

from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field

TRACE_HEAD = 32


class CertificateStatus(str, Enum):
    """Terminal status of an inversion run, from best to worst."""

    EXACT_INVERSE = "exact-inverse"
    CONVERGENT_EVIDENCE = "convergent-evidence"
    BUDGET_EXHAUSTED = "budget-exhausted"
    HYPOTHESIS_FAILED = "hypothesis-failed"

    @property
    def rank(self) -> int:
        return list(CertificateStatus).index(self)

    def worse(self, other: "CertificateStatus") -> "CertificateStatus":
        return self if self.rank >= other.rank else other


class InversionDirection(str, Enum):
    RIGHT = "right"
    LEFT = "left"
    TWO_SIDED = "two-sided"


class InversionMode(str, Enum):
    ORDERED = "ordered"
    SEMINORMED = "seminormed"


class WitnessProvenance(str, Enum):
    SUPPLIED = "supplied"
    ARCHIMEDEAN_SEARCH = "archimedean-search"
    NONE = "none"


class HypothesisCheck(BaseModel):
    """One decided hypothesis of an inversion theorem."""

    name: str
    passed: bool
    detail: Optional[str] = None
    witness: Optional[List[str]] = None

    model_config = ConfigDict(frozen=True)


class TraceEntry(BaseModel):
    """Value at step n of a run (rendered element or seminorm value)."""

    n: int
    value: str

    model_config = ConfigDict(frozen=True)


def truncate_trace(entries: List[TraceEntry], head: int = TRACE_HEAD) -> List[TraceEntry]:
    """Keep the first ``head`` entries and the last one."""
    if len(entries) <= head + 1:
        return list(entries)
    return list(entries[:head]) + [entries[-1]]


class InversionCertificate(BaseModel):
    """Audit trail of an inversion run.

    Attributes:
        ring: Name of the ring instance
        x: The element being inverted, rendered
        mode: Ordered (monotone series) or seminormed (Cauchy series)
        status: Terminal status
        direction: Right, left or two-sided
        iterations: Number of series terms in the returned partial sum
        budget: Maximal number of terms
        inverse_candidate: Final partial sum, rendered
        witness_used: Upper bound c with x·c >= 1 (ordered mode)
        witness_provenance: Where the witness came from
        hypothesis_report: Every decided hypothesis, in order
        residual_trace: 1 − x·s_n per step (ordered) or f(1 − x·u_n) (seminormed)
        partial_sums: s_n (or u_n) per step
        path_note: Continuity argument used for the limit exchange
        detail: Human-readable summary of the outcome
        inverse: The live candidate Element (not serialized)
    """

    ring: str
    x: str
    mode: InversionMode
    status: CertificateStatus
    direction: InversionDirection
    iterations: int = 0
    budget: int = 0
    inverse_candidate: Optional[str] = None
    witness_used: Optional[str] = None
    witness_provenance: WitnessProvenance = WitnessProvenance.NONE
    hypothesis_report: List[HypothesisCheck] = Field(default_factory=list)
    residual_trace: List[TraceEntry] = Field(default_factory=list)
    partial_sums: List[TraceEntry] = Field(default_factory=list)
    path_note: Optional[str] = None
    detail: Optional[str] = None
    inverse: Optional[Any] = Field(default=None, exclude=True)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def failed_hypotheses(self) -> List[HypothesisCheck]:
        return [check for check in self.hypothesis_report if not check.passed]

    @property
    def succeeded(self) -> bool:
        return self.status in (CertificateStatus.EXACT_INVERSE, CertificateStatus.CONVERGENT_EVIDENCE)

    def for_report(self) -> "InversionCertificate":
        """Copy with traces truncated to the first entries plus the last."""
        return self.model_copy(
            update={
                "residual_trace": truncate_trace(self.residual_trace),
                "partial_sums": truncate_trace(self.partial_sums),
            }
        )
