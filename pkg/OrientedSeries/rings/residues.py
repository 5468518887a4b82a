"""
Residues modulo a prime power p^N, the desk-scale model of the p-adic integers.
"""

import random
from fractions import Fraction
from typing import Any, Tuple

from sympy import isprime

from ..models.common import CarrierKind, OrderKind
from .base import Element, InvalidSpec, ParseError, RingInstance, UnsupportedCarrier
from .grammar import GroupNode


class ResidueRing(RingInstance):
    """ℤ/p^Nℤ with representatives in [0, p^N).

    A finite ring admits only the trivial compatible order, so the positive
    cone is {0} and the instance does not declare 1 >= 0.
    """

    carrier = CarrierKind.RESIDUES
    order_kind = OrderKind.CONE_GENERATED
    unit_nonnegative = False

    def __init__(self, prime: int, exponent: int):
        if exponent < 1:
            raise InvalidSpec(f"exponent must be a positive integer, got {exponent}")
        if prime < 2 or not isprime(prime):
            raise InvalidSpec(f"{prime} is not prime")
        self.prime = prime
        self.exponent = exponent
        self.modulus = prime**exponent
        super().__init__(f"padic:{prime},{exponent}")

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("padic", self.prime, self.exponent)

    @property
    def cardinality(self) -> int:
        return self.modulus

    def _zero(self) -> int:
        return 0

    def _one(self) -> int:
        return 1 % self.modulus

    def _add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def _neg(self, a: int) -> int:
        return -a % self.modulus

    def _mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def _is_nonnegative(self, a: int) -> bool:
        return a == 0

    def _canonical(self, raw: Any) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ValueError(f"residue payload must be an integer, got {raw!r}")
        return raw % self.modulus

    def _scalar(self, q: Fraction) -> int:
        if q.denominator % self.prime == 0:
            raise UnsupportedCarrier(f"{q} has a denominator divisible by {self.prime}", self.name)
        return q.numerator * pow(q.denominator, -1, self.modulus) % self.modulus

    def _sample(self, rng: random.Random) -> int:
        return rng.randrange(self.modulus)

    def sample_small(self, rng: random.Random, level: int) -> Element:
        """Sample a multiple of p^level."""
        return self.element(self.prime ** min(level, self.exponent) * rng.randrange(self.modulus))

    def _from_syntax(self, node: Any) -> int:
        if isinstance(node, GroupNode) or node.value.denominator != 1:
            raise ParseError("expected an integer residue", node.position, self.name)
        return node.value.numerator % self.modulus

    def render_payload(self, payload: int) -> str:
        return str(payload)

    def valuation(self, x: Element) -> int:
        """Largest k <= N with p^k dividing the representative; N for 0."""
        value = self.owns(x).payload
        if value == 0:
            return self.exponent
        k = 0
        while value % self.prime == 0:
            value //= self.prime
            k += 1
        return k
