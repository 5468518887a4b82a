"""
Decidable helpers for the hypotheses of ordered inversion.

``archimedean_witness_search`` looks for an upper bound c with x·c >= 1 by
doubling; ``inf_power_zero_check`` tests inf x^n = 0 against a finite
comparison family and looks for a nonzero fixed point x·a = a.
"""

import logging
import warnings
from enum import Enum
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..core.powers import step_power
from ..models.common import Comparison, PowerDirection
from ..rings.base import AlgebraError, Element, RingInstance, UnsupportedCarrier

logger = logging.getLogger(__name__)


class NotPositive(AlgebraError):
    """Exception raised when a witness is requested for an element that is not > 0."""
    pass


class WitnessOutcome(str, Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    INCOMPARABILITY_HIT = "incomparability-hit"


class WitnessSearch(BaseModel):
    """Result of the doubling search for n with n·x >= 1.

    Attributes:
        outcome: Found, NotFound or IncomparabilityHit
        witness: c = n·1, rendered, when found
        multiplier: The n that worked (or hit an incomparable multiple)
        tried: Multipliers tried, in order
        element: The live witness Element (not serialized)
    """

    outcome: WitnessOutcome
    witness: Optional[str] = None
    multiplier: Optional[int] = None
    tried: List[int] = Field(default_factory=list)
    detail: Optional[str] = None
    element: Optional[Any] = Field(default=None, exclude=True)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def found(self) -> bool:
        return self.outcome is WitnessOutcome.FOUND


def archimedean_witness_search(x: Element, budget: int = 64) -> WitnessSearch:
    """Try n = 1, 2, 4, ... <= budget and return c = n·1 for the first n·x >= 1.

    Raises:
        NotPositive: If x is not strictly positive
    """
    ring = x.ring
    if not ring.is_positive(x):
        raise NotPositive(f"{x} is not > 0", ring.name)
    tried: List[int] = []
    n = 1
    while n <= budget:
        tried.append(n)
        verdict = ring.compare(ring.multiple(x, n), ring.one)
        if verdict.is_ge:
            c = ring.from_int(n)
            logger.debug("archimedean witness for %s: %s", x, c)
            return WitnessSearch(
                outcome=WitnessOutcome.FOUND, witness=str(c), multiplier=n, tried=tried, element=c
            )
        if verdict is Comparison.INCOMPARABLE:
            warnings.warn(
                f"{n}·{x} is incomparable to 1; witness search stopped", UserWarning, stacklevel=2
            )
            return WitnessSearch(
                outcome=WitnessOutcome.INCOMPARABILITY_HIT,
                multiplier=n,
                tried=tried,
                detail=f"{n}·x is incomparable to 1",
            )
        n *= 2
    return WitnessSearch(
        outcome=WitnessOutcome.NOT_FOUND,
        tried=tried,
        detail=f"n·x < 1 for every tried n <= {budget}",
    )


def dyadic_family(ring: RingInstance, depth: int) -> List[Element]:
    """Comparison family {2^{-j}·1 : 0 <= j <= depth}, as far as the carrier divides by 2."""
    family = []
    for j in range(depth + 1):
        try:
            family.append(ring.from_fraction(Fraction(1, 2**j)))
        except UnsupportedCarrier:
            break
    return family


class InfPowerVerdict(BaseModel):
    """Result of testing inf_n x^n = 0 against a comparison family.

    Attributes:
        passed: Every family element dominates some power and no nonzero
            fixed point was found
        entry_indices: Per family element ε, the first n with x^n <= ε
        fixed_point: A nonzero a with x·a = a (a·x = a for left powers)
    """

    passed: bool
    entry_indices: List[Optional[int]] = Field(default_factory=list)
    fixed_point: Optional[str] = None
    detail: Optional[str] = None

    model_config = ConfigDict(frozen=True)


def stable_part(powers: Sequence[Element], window: int = 3) -> Optional[Element]:
    """Coefficientwise limit guess from the last ``window`` powers.

    Coefficients equal across the window are kept and the others are set to
    zero. Only carriers with coefficient-sequence payloads have a guess.
    """
    tail = list(powers[-window:])
    if len(tail) < 2 or not all(isinstance(p.payload, (tuple, list)) for p in tail):
        return None
    width = max(len(p.payload) for p in tail)
    padded = [list(p.payload) + [0] * (width - len(p.payload)) for p in tail]
    kept = [column[0] if all(c == column[0] for c in column) else 0 for column in zip(*padded)]
    try:
        return tail[0].ring.element(kept)
    except (ValueError, AlgebraError):
        return None


def inf_power_zero_check(
    x: Element,
    direction: PowerDirection,
    comparison_family: Sequence[Element],
    budget: int = 64,
    lower_bound: Optional[Element] = None,
) -> InfPowerVerdict:
    """Decide inf {x^n} = 0 as far as a finite run can.

    A constant nonzero power sequence, the coefficientwise limit guess of
    the last powers (see ``stable_part``) and a supplied lower bound a are
    tested for the fixed-point identity x·a = a; finding one shows the
    infimum is not 0.

    Args:
        x: Element with 0 <= x <= 1
        direction: Nesting of the powers
        comparison_family: Positive elements shrinking toward 0
        budget: Largest exponent tried
        lower_bound: Optional candidate lower bound of the powers
    """
    ring = x.ring
    if not (ring.is_nonnegative(x) and ring.le(x, ring.one)):
        return InfPowerVerdict(passed=False, detail=f"{x} is not in [0, 1]")

    powers: List[Element] = []
    current = ring.one
    for _ in range(budget):
        current = step_power(x, current, direction)
        powers.append(current)

    indices = [
        next((n + 1 for n, p in enumerate(powers) if ring.le(p, epsilon)), None)
        for epsilon in comparison_family
    ]

    def fixes(a: Element) -> bool:
        image = x * a if direction is PowerDirection.RIGHT_NESTED else a * x
        return image == a

    candidates = []
    if lower_bound is not None:
        candidates.append(lower_bound)
    candidates.extend(
        powers[n] for n in range(len(powers) - 1) if powers[n] == powers[n + 1]
    )
    limit = stable_part(powers)
    if limit is not None:
        candidates.append(limit)
    for a in candidates:
        if ring.is_positive(a) and fixes(a):
            return InfPowerVerdict(
                passed=False,
                entry_indices=indices,
                fixed_point=str(a),
                detail=f"x·a = a for a = {a} > 0, so the powers stay above a",
            )

    passed = all(n is not None for n in indices)
    return InfPowerVerdict(
        passed=passed,
        entry_indices=indices,
        detail=None if passed else "some family element is below every computed power",
    )
