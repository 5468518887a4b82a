"""
Truncated power series ℚ[X]/(X^N) with the antilexicographic cone.

Every Cauchy sequence for the 2^{-ord} seminorm stabilizes here, which makes
this carrier the desk-scale complete ring for seminormed inversion.
"""

import random
from fractions import Fraction
from typing import Any, Tuple

from ..models.common import CarrierKind, OrderKind
from .base import Element, InvalidSpec, RingInstance
from .polynomials import (
    Coefficients,
    add_coefficients,
    coefficients_from_node,
    convolve,
    lowest_sign,
    render_coefficients,
    trim,
)
from .scalars import RATIONALS


class TruncatedSeriesRing(RingInstance):
    """Series Σ c_k X^k with k < precision; X^precision ≡ 0."""

    carrier = CarrierKind.SERIES
    order_kind = OrderKind.ANTILEXICOGRAPHIC
    totally_ordered = True
    divisible = True

    def __init__(self, precision: int):
        if precision < 1:
            raise InvalidSpec(f"precision must be a positive integer, got {precision}")
        self.precision = precision
        self.base = RATIONALS
        super().__init__(f"series:{precision}")

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("series", self.precision)

    def _zero(self) -> Coefficients:
        return ()

    def _one(self) -> Coefficients:
        return (Fraction(1),)

    def _add(self, a: Coefficients, b: Coefficients) -> Coefficients:
        return add_coefficients(a, b)

    def _neg(self, a: Coefficients) -> Coefficients:
        return tuple(-c for c in a)

    def _mul(self, a: Coefficients, b: Coefficients) -> Coefficients:
        return convolve(a, b, self.precision)

    def _is_nonnegative(self, a: Coefficients) -> bool:
        return lowest_sign(a) >= 0

    def _canonical(self, raw: Any) -> Coefficients:
        if isinstance(raw, (str, bytes)) or not hasattr(raw, "__iter__"):
            raise ValueError(f"series payload must be a coefficient sequence, got {raw!r}")
        return trim([self.base.coerce(c) for c in raw][: self.precision])

    def _scalar(self, q: Fraction) -> Coefficients:
        return trim((Fraction(q),))

    def _sample(self, rng: random.Random) -> Coefficients:
        length = rng.randint(1, min(self.precision, 5))
        return trim([self.base.sample_scalar(rng) for _ in range(length)])

    def sample_small(self, rng: random.Random, level: int) -> Element:
        """Sample a multiple of X^level (ord >= level)."""
        shifted = (Fraction(0),) * level + self._sample(rng)
        return self.element(shifted)

    def _from_syntax(self, node: Any) -> Coefficients:
        return trim(coefficients_from_node(self.base, node, self.name)[: self.precision])

    def render_payload(self, payload: Coefficients) -> str:
        return render_coefficients(payload)

    @property
    def indeterminate(self) -> Element:
        return self.element((0, 1))

    def valuation(self, x: Element) -> int:
        """Least k with a nonzero coefficient of X^k; the precision for 0."""
        for k, c in enumerate(self.owns(x).payload):
            if c:
                return k
        return self.precision
