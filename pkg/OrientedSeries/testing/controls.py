"""
Deliberately broken ring instances for testing the axiom suites.

These instances look like shipped carriers but violate one axiom each, so
that the sampled checks can be shown to catch real failures. They are
reachable from the CLI as ``control:<name>``.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Tuple

from ..rings.scalars import IntegerRing, RationalRing


class SkewAdditionRing(IntegerRing):
    """Integers with the noncommutative "addition" a ⊕ b = a + 2b.

    Everything else is inherited from the integers; additive commutativity
    (and with it associativity and the zero law) fails.
    """

    def __init__(self):
        super().__init__()
        self.name = "control:skew-add"

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("control", "skew-add")

    def _add(self, a: int, b: int) -> int:
        return a + 2 * b


class AllPositiveRing(RationalRing):
    """Rationals whose declared positive cone is the whole ring.

    The cone is closed under everything but is not proper: x >= 0 and
    -x >= 0 hold for every x, so antisymmetry of the order fails.
    """

    def __init__(self):
        super().__init__()
        self.name = "control:all-positive"

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("control", "all-positive")

    def _is_nonnegative(self, a: Fraction) -> bool:
        return True


CONTROLS: Dict[str, Callable[[], Any]] = {
    "skew-add": SkewAdditionRing,
    "all-positive": AllPositiveRing,
}
