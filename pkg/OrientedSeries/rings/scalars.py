"""
Scalar carriers: big integers and big rationals with their usual total order.

Both double as coefficient rings for the polynomial and pair carriers.
"""

import random
from fractions import Fraction
from typing import Any, Tuple

from ..models.common import CarrierKind, OrderKind
from .base import ParseError, RingInstance, Scalar, UnsupportedCarrier, render_scalar
from .grammar import GroupNode, ScalarNode


class ScalarRing(RingInstance):
    """Common behavior of the two scalar carriers."""

    order_kind = OrderKind.TOTAL
    totally_ordered = True
    short_name: str

    @property
    def key(self) -> Tuple[Any, ...]:
        return (self.carrier.value,)

    def coerce(self, value: Any) -> Scalar:
        """Convert a raw coefficient into this carrier's canonical scalar."""
        raise NotImplementedError

    def sample_scalar(self, rng: random.Random) -> Scalar:
        raise NotImplementedError

    def _zero(self) -> Scalar:
        return self.coerce(0)

    def _one(self) -> Scalar:
        return self.coerce(1)

    def _add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b

    def _neg(self, a: Scalar) -> Scalar:
        return -a

    def _mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b

    def _is_nonnegative(self, a: Scalar) -> bool:
        return a >= 0

    def _canonical(self, raw: Any) -> Scalar:
        return self.coerce(raw)

    def _scalar(self, q: Fraction) -> Scalar:
        return self.coerce(q)

    def _sample(self, rng: random.Random) -> Scalar:
        return self.sample_scalar(rng)

    def scalar_from_node(self, node: Any, ring_name: str) -> Scalar:
        """Read one coefficient literal for this carrier or a composite over it."""
        if isinstance(node, GroupNode):
            raise ParseError("expected a scalar", node.position, ring_name)
        try:
            return self.coerce(node.value)
        except UnsupportedCarrier:
            raise ParseError("expected an integer", node.position, ring_name)

    def _from_syntax(self, node: Any) -> Scalar:
        return self.scalar_from_node(node, self.name)

    def render_payload(self, payload: Scalar) -> str:
        return render_scalar(payload)


class IntegerRing(ScalarRing):
    """Arbitrary-precision integers ℤ."""

    carrier = CarrierKind.INTEGERS
    short_name = "int"

    def __init__(self):
        super().__init__("integers")

    def coerce(self, value: Any) -> int:
        if isinstance(value, bool):
            raise ValueError("booleans are not integers")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise UnsupportedCarrier(f"{value} is not an integer", self.name)
            return value.numerator
        raise ValueError(f"cannot interpret {value!r} as an integer")

    def sample_scalar(self, rng: random.Random) -> int:
        return rng.randint(-9, 9)


class RationalRing(ScalarRing):
    """Arbitrary-precision rationals ℚ, the exact stand-in for ℝ."""

    carrier = CarrierKind.RATIONALS
    divisible = True
    short_name = "rat"

    def __init__(self):
        super().__init__("rationals")

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
            raise ValueError(f"cannot interpret {value!r} as a rational")
        return Fraction(value)

    def sample_scalar(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 6))

    def sample_small(self, rng: random.Random, level: int):
        return self.element(self.sample_scalar(rng) / 2**level)


INTEGERS = IntegerRing()
RATIONALS = RationalRing()


def scalar_ring(carrier: CarrierKind) -> ScalarRing:
    """Return the shared scalar instance for a carrier kind."""
    if carrier is CarrierKind.INTEGERS:
        return INTEGERS
    if carrier is CarrierKind.RATIONALS:
        return RATIONALS
    raise UnsupportedCarrier(f"{carrier.value} is not a scalar carrier")
