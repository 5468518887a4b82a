"""
Common data models shared across ring instances, topology checks and reports.
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Comparison(str, Enum):
    """Four-valued verdict of the partial order on a ring instance."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"

    def flipped(self) -> "Comparison":
        """Verdict of the comparison with its arguments swapped."""
        if self is Comparison.LESS:
            return Comparison.GREATER
        if self is Comparison.GREATER:
            return Comparison.LESS
        return self

    @property
    def is_le(self) -> bool:
        return self in (Comparison.LESS, Comparison.EQUAL)

    @property
    def is_ge(self) -> bool:
        return self in (Comparison.GREATER, Comparison.EQUAL)


class PowerDirection(str, Enum):
    """Nesting of oriented powers: x(x(...)) or ((...)x)x."""

    RIGHT_NESTED = "right"
    LEFT_NESTED = "left"


class CarrierKind(str, Enum):
    """Enumeration of the shipped carriers."""

    INTEGERS = "big-integers"
    RATIONALS = "big-rationals"
    POLYNOMIAL = "polynomial-over-base"
    PAIR = "pair-over-base"
    SERIES = "truncated-series-over-base"
    RESIDUES = "residues-mod-prime-power"
    STRUCTURE = "structure-constant-module"


class OrderKind(str, Enum):
    """Enumeration of the shipped order kinds."""

    TOTAL = "total"
    LEXICOGRAPHIC = "lexicographic"
    ANTILEXICOGRAPHIC = "antilexicographic"
    COMPONENTWISE = "componentwise"
    CONE_GENERATED = "cone-generated"


class ProductKind(str, Enum):
    """Multiplication on pair carriers."""

    COMPONENTWISE = "componentwise"
    DUAL = "dual-number"


class AxiomCheck(BaseModel):
    """Outcome of one sampled axiom.

    Attributes:
        name: Axiom identifier, e.g. ``left-distributivity``
        passed: Whether every sample satisfied the axiom
        required: False for informational properties (associativity,
            commutativity of the product) whose absence is not a failure
        witness: Rendered elements of the first counterexample
        detail: Free-form note
    """

    name: str
    passed: bool
    required: bool = True
    witness: Optional[List[str]] = None
    detail: Optional[str] = None

    model_config = ConfigDict(frozen=True)


class AxiomReport(BaseModel):
    """Report of a sampled axiom suite on one subject (ring or seminorm)."""

    subject: str
    sample_count: int
    seed: int
    checks: List[AxiomCheck] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @property
    def ok(self) -> bool:
        """True iff every required check passed."""
        return all(check.passed for check in self.checks if check.required)

    @property
    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if check.required and not check.passed]

    def check(self, name: str) -> AxiomCheck:
        """Look up a check by name.

        Raises:
            KeyError: If the report holds no check with that name
        """
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)


class Verdict(BaseModel):
    """Generic pass/fail verdict with the evidence that decided it."""

    passed: bool
    detail: Optional[str] = None
    witness: Optional[List[str]] = None
    evidence: Dict[str, str] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)
