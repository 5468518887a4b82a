"""
Univariate polynomials over ℤ or ℚ with the lexicographic or antilexicographic cone.

Payloads are coefficient tuples, constant term first, trimmed of trailing
zeros; the zero polynomial is the empty tuple.
"""

import random
from fractions import Fraction
from itertools import zip_longest
from typing import Any, Optional, Sequence, Tuple

from ..models.common import CarrierKind, OrderKind
from .base import (
    Element,
    GrowthExceeded,
    InvalidSpec,
    ParseError,
    RingInstance,
    render_scalar,
)
from .grammar import GroupNode, ScalarNode
from .scalars import ScalarRing

Coefficients = Tuple[Any, ...]

DEFAULT_DEGREE_GUARD = 64


def trim(coefficients: Sequence[Any]) -> Coefficients:
    """Drop trailing zero coefficients."""
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(coefficients[:end])


def add_coefficients(a: Coefficients, b: Coefficients) -> Coefficients:
    return trim([x + y for x, y in zip_longest(a, b, fillvalue=0)])


def convolve(a: Coefficients, b: Coefficients, length: Optional[int] = None) -> Coefficients:
    """Cauchy product of two coefficient tuples, optionally truncated to ``length`` terms."""
    if not a or not b:
        return ()
    size = len(a) + len(b) - 1
    if length is not None:
        size = min(size, length)
    out = [0] * size
    for i, x in enumerate(a[:size]):
        for j, y in enumerate(b[: size - i]):
            out[i + j] += x * y
    return trim(out)


def leading_sign(coefficients: Coefficients) -> int:
    return (coefficients[-1] > 0) - (coefficients[-1] < 0) if coefficients else 0


def lowest_sign(coefficients: Coefficients) -> int:
    for c in coefficients:
        if c:
            return 1 if c > 0 else -1
    return 0


def render_coefficients(coefficients: Coefficients) -> str:
    if not coefficients:
        return "[0]"
    return "[" + ",".join(render_scalar(c) for c in coefficients) + "]"


def coefficients_from_node(
    base: ScalarRing, node: Any, ring_name: str, allow_scalar: bool = True
) -> Coefficients:
    """Read ``[c0,c1,...]`` (or a bare scalar constant) into coefficients over ``base``."""
    if isinstance(node, ScalarNode) and allow_scalar:
        return trim((base.scalar_from_node(node, ring_name),))
    if not isinstance(node, GroupNode) or node.opener != "[":
        raise ParseError("expected a coefficient list '[c0,...]'", node.position, ring_name)
    return trim([base.scalar_from_node(item, ring_name) for item in node.items])


class PolynomialRing(RingInstance):
    """ℤ[X] or ℚ[X] ordered by the sign of the leading or the lowest coefficient.

    Under the lexicographic order P >= 0 iff P = 0 or its highest-degree
    coefficient is positive; under the antilexicographic order the
    lowest-degree nonzero coefficient decides. Both orders are total.

    Args:
        base: Coefficient ring (integers or rationals)
        order: ``OrderKind.LEXICOGRAPHIC`` or ``OrderKind.ANTILEXICOGRAPHIC``
        max_degree_guard: Products of higher degree raise GrowthExceeded
    """

    carrier = CarrierKind.POLYNOMIAL
    totally_ordered = True

    def __init__(
        self,
        base: ScalarRing,
        order: OrderKind = OrderKind.LEXICOGRAPHIC,
        max_degree_guard: int = DEFAULT_DEGREE_GUARD,
    ):
        if order not in (OrderKind.LEXICOGRAPHIC, OrderKind.ANTILEXICOGRAPHIC):
            raise InvalidSpec(f"polynomial order must be lexicographic or antilexicographic, got {order.value}")
        if max_degree_guard < 1:
            raise InvalidSpec("max_degree_guard must be at least 1")
        self.base = base
        self.order_kind = order
        self.max_degree_guard = max_degree_guard
        self.divisible = base.divisible
        tag = "lex" if order is OrderKind.LEXICOGRAPHIC else "antilex"
        super().__init__(f"poly:{base.short_name},{tag}")

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("poly", self.base.key, self.order_kind.value, self.max_degree_guard)

    def _guard(self, coefficients: Coefficients) -> Coefficients:
        degree = len(coefficients) - 1
        if degree > self.max_degree_guard:
            raise GrowthExceeded(degree, self.max_degree_guard, self.name)
        return coefficients

    def _zero(self) -> Coefficients:
        return ()

    def _one(self) -> Coefficients:
        return (self.base.coerce(1),)

    def _add(self, a: Coefficients, b: Coefficients) -> Coefficients:
        return add_coefficients(a, b)

    def _neg(self, a: Coefficients) -> Coefficients:
        return tuple(-c for c in a)

    def _mul(self, a: Coefficients, b: Coefficients) -> Coefficients:
        if a and b:
            self._guard((0,) * (len(a) + len(b) - 1))
        return convolve(a, b)

    def _is_nonnegative(self, a: Coefficients) -> bool:
        if self.order_kind is OrderKind.LEXICOGRAPHIC:
            return leading_sign(a) >= 0
        return lowest_sign(a) >= 0

    def _canonical(self, raw: Any) -> Coefficients:
        if isinstance(raw, (str, bytes)) or not hasattr(raw, "__iter__"):
            raise ValueError(f"polynomial payload must be a coefficient sequence, got {raw!r}")
        return self._guard(trim([self.base.coerce(c) for c in raw]))

    def _scalar(self, q: Fraction) -> Coefficients:
        return trim((self.base.coerce(q),))

    def _sample(self, rng: random.Random) -> Coefficients:
        degree = rng.randint(0, 3)
        return trim([self.base.sample_scalar(rng) for _ in range(degree + 1)])

    def _from_syntax(self, node: Any) -> Coefficients:
        return self._guard(coefficients_from_node(self.base, node, self.name))

    def render_payload(self, payload: Coefficients) -> str:
        return render_coefficients(payload)

    @property
    def indeterminate(self) -> Element:
        """The element X."""
        return self.element((0, 1))

    def degree(self, x: Element) -> Optional[int]:
        """Degree of x, or None for the zero polynomial."""
        coefficients = self.owns(x).payload
        return len(coefficients) - 1 if coefficients else None
