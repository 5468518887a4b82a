"""
Order comparison and sampled convexity.
"""

from typing import Callable, Sequence, Tuple

from ..models.common import Comparison, Verdict
from ..rings.base import AlgebraError, Element, MixedRings


class MalformedTriple(AlgebraError):
    """Exception raised when a convexity triple is not a chain x <= y <= z."""

    def __init__(self, index: int, ring_name: str):
        self.index = index
        super().__init__(f"triple {index} is not a chain x <= y <= z", ring_name)


def compare(x: Element, y: Element) -> Comparison:
    """Four-valued order verdict between two elements of the same instance.

    Raises:
        MixedRings: If x and y belong to different instances
    """
    if x.ring != y.ring:
        raise MixedRings(x.ring.name, y.ring.name)
    return x.ring.compare(x, y)


def is_convex_sampled(
    member: Callable[[Element], bool],
    triples: Sequence[Tuple[Element, Element, Element]],
) -> Verdict:
    """Look for a gap in a set along sampled chains.

    Args:
        member: Membership predicate of the set under test
        triples: Chains (x, y, z) with x <= y <= z

    Returns:
        Failing verdict naming the first triple with x, z members and y not,
        or a passing verdict

    Raises:
        MalformedTriple: If some triple is not a chain
    """
    for index, (x, y, z) in enumerate(triples):
        if not (compare(x, y).is_le and compare(y, z).is_le):
            raise MalformedTriple(index, x.ring.name)
        if member(x) and member(z) and not member(y):
            return Verdict(
                passed=False,
                detail=f"{y} lies between members {x} and {z} but is not a member",
                witness=[str(x), str(y), str(z)],
                evidence={"index": str(index), "gap": str(y)},
            )
    return Verdict(passed=True, evidence={"triples": str(len(triples))})
