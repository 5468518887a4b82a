"""
Convergence of increasing sequences in the interval topology.

Everything here works on a finite prefix: "eventually inside" means "inside
from some index to the end of the prefix", and verdicts carry the prefix
length so they can be falsified by a longer run.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..rings.base import AlgebraError, Element
from .interval import BasicOpen, NotMember, PreconditionFailed, SubbasicClosed, contains

logger = logging.getLogger(__name__)


class NotIncreasing(AlgebraError):
    """Exception raised when a sequence prefix is not weakly increasing."""

    def __init__(self, index: int, ring_name: str):
        self.index = index
        super().__init__(f"u_{index - 1} <= u_{index} fails", ring_name)


class SupLimitVerdict(BaseModel):
    """Result of checking that an increasing prefix converges to its supremum.

    Attributes:
        passed: Every open was eventually entered within the prefix
        prefix_length: Number of terms inspected
        entry_indices: Per open, least N with u_n inside for all N <= n <
            prefix_length, or None (not eventually inside)
    """

    passed: bool
    prefix_length: int
    entry_indices: List[Optional[int]] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @property
    def failing_opens(self) -> List[int]:
        return [i for i, n in enumerate(self.entry_indices) if n is None]


def entry_index(members: Sequence[bool]) -> Optional[int]:
    """Least N such that members[n] holds for every n >= N, or None."""
    n = len(members)
    while n > 0 and members[n - 1]:
        n -= 1
    return n if n < len(members) else None


def check_increasing(u: Sequence[Element]) -> None:
    """Raise NotIncreasing at the first index where u stops increasing."""
    for i in range(1, len(u)):
        if not u[i].ring.le(u[i - 1], u[i]):
            raise NotIncreasing(i, u[i].ring.name)


def sup_limit_check(
    u: Sequence[Element], sup: Element, opens: Sequence[BasicOpen]
) -> SupLimitVerdict:
    """Check that every open containing the supremum eventually contains the prefix.

    Args:
        u: Weakly increasing sequence prefix
        sup: Claimed supremum
        opens: Basic opens, each containing ``sup``

    Raises:
        NotIncreasing: With the first index where the prefix decreases
        NotMember: If some open does not contain ``sup``
    """
    if not u:
        raise ValueError("sequence prefix must not be empty")
    check_increasing(u)
    indices = []
    for k, V in enumerate(opens):
        if not contains(V, sup):
            raise NotMember(f"open {k} does not contain the supremum {sup}", sup.ring.name)
        indices.append(entry_index([contains(V, term) for term in u]))
    verdict = SupLimitVerdict(
        passed=all(n is not None for n in indices),
        prefix_length=len(u),
        entry_indices=indices,
    )
    logger.debug("sup_limit_check over %d opens: %s", len(opens), verdict.passed)
    return verdict


@dataclass(frozen=True)
class SeparationWitness:
    """A basic open around a non-limit point that the sequence eventually avoids.

    Attributes:
        found: False when no avoiding open was found within the prefix
        open: The separating open (None when not found)
        method: ``down-set-of-limit``, ``up-set-of-term`` or ``not-found``
        avoided_from: First index from which every term lies outside the open
        evidence: Rendered supporting values
    """

    found: bool
    open: Optional[BasicOpen]
    method: str
    avoided_from: Optional[int] = None
    evidence: Dict[str, str] = field(default_factory=dict)


def separation_witness(
    u_limit: Element, u_other: Element, u: Sequence[Element]
) -> SeparationWitness:
    """Exhibit an open containing ``u_other`` that the sequence eventually leaves.

    If ``u_other`` is not below the limit, the open is the complement of the
    down-set of the limit, which no term enters. Otherwise it is the
    complement of the up-set of the first term not below ``u_other``.

    Raises:
        PreconditionFailed: If u_other equals u_limit
    """
    ring = u_limit.ring
    ring.owns(u_other)
    if u_other == u_limit:
        raise PreconditionFailed("the other point must differ from the limit", ring.name)

    if not ring.le(u_other, u_limit):
        candidate = BasicOpen(ring, (SubbasicClosed.down(u_limit),))
        method = "down-set-of-limit"
        evidence = {"bound": str(u_limit)}
    else:
        m = next((i for i, term in enumerate(u) if not ring.le(term, u_other)), None)
        if m is None:
            return SeparationWitness(
                found=False,
                open=None,
                method="not-found",
                evidence={"prefix_length": str(len(u))},
            )
        candidate = BasicOpen(ring, (SubbasicClosed.up(u[m]),))
        method = "up-set-of-term"
        evidence = {"bound": str(u[m]), "term_index": str(m)}

    avoided_from = entry_index([not contains(candidate, term) for term in u])
    if avoided_from is None:
        return SeparationWitness(found=False, open=candidate, method="not-found", evidence=evidence)
    evidence["avoided_from"] = str(avoided_from)
    return SeparationWitness(
        found=True, open=candidate, method=method, avoided_from=avoided_from, evidence=evidence
    )


def stabilized_limit(u: Sequence[Element]) -> Optional[Element]:
    """The last term if the prefix has stopped moving, otherwise None."""
    if len(u) >= 2 and u[-1] == u[-2]:
        return u[-1]
    return None
