"""
Pairs over ℤ or ℚ with a lexicographic or componentwise order and a
componentwise or dual-number product.
"""

import random
from fractions import Fraction
from typing import Any, Tuple

from ..models.common import CarrierKind, OrderKind, ProductKind
from .base import InvalidSpec, ParseError, RingInstance, Scalar, WrongArity, render_scalar
from .grammar import ScalarNode
from .scalars import ScalarRing

Pair = Tuple[Scalar, Scalar]


class PairRing(RingInstance):
    """The additive group base² with a choice of order and product.

    The dual-number product is ``(a,b)(c,d) = (ac, ad + bc)`` with unit
    ``(1,0)``; the componentwise product has unit ``(1,1)``.

    Note:
        Lexicographic order with the componentwise product is constructible
        but its cone is not closed under multiplication:
        ``(0,1)·(1,-1) = (0,-1)``. The order-compatibility suite reports it.
    """

    carrier = CarrierKind.PAIR

    def __init__(
        self,
        base: ScalarRing,
        order: OrderKind = OrderKind.LEXICOGRAPHIC,
        product: ProductKind = ProductKind.DUAL,
    ):
        if order not in (OrderKind.LEXICOGRAPHIC, OrderKind.COMPONENTWISE):
            raise InvalidSpec(f"pair order must be lexicographic or componentwise, got {order.value}")
        self.base = base
        self.order_kind = order
        self.product = ProductKind(product)
        self.totally_ordered = order is OrderKind.LEXICOGRAPHIC
        self.divisible = base.divisible
        order_tag = "lex" if order is OrderKind.LEXICOGRAPHIC else "componentwise"
        product_tag = "dual" if self.product is ProductKind.DUAL else "componentwise"
        super().__init__(f"pair:{base.short_name},{order_tag},{product_tag}")

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("pair", self.base.key, self.order_kind.value, self.product.value)

    def _zero(self) -> Pair:
        return (self.base.coerce(0), self.base.coerce(0))

    def _one(self) -> Pair:
        return self._scalar(Fraction(1))

    def _add(self, a: Pair, b: Pair) -> Pair:
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a: Pair) -> Pair:
        return (-a[0], -a[1])

    def _mul(self, a: Pair, b: Pair) -> Pair:
        if self.product is ProductKind.DUAL:
            return (a[0] * b[0], a[0] * b[1] + a[1] * b[0])
        return (a[0] * b[0], a[1] * b[1])

    def _is_nonnegative(self, a: Pair) -> bool:
        if self.order_kind is OrderKind.LEXICOGRAPHIC:
            return a[0] > 0 or (a[0] == 0 and a[1] >= 0)
        return a[0] >= 0 and a[1] >= 0

    def _canonical(self, raw: Any) -> Pair:
        first, second = raw
        return (self.base.coerce(first), self.base.coerce(second))

    def _scalar(self, q: Fraction) -> Pair:
        value = self.base.coerce(q)
        if self.product is ProductKind.DUAL:
            return (value, self.base.coerce(0))
        return (value, value)

    def _sample(self, rng: random.Random) -> Pair:
        return (self.base.sample_scalar(rng), self.base.sample_scalar(rng))

    def _from_syntax(self, node: Any) -> Pair:
        if isinstance(node, ScalarNode):
            return self._scalar(self.base.scalar_from_node(node, self.name))
        if node.opener != "(":
            raise ParseError("expected a pair '(a,b)'", node.position, self.name)
        if len(node.items) != 2:
            raise WrongArity(2, len(node.items), self.name)
        return (
            self.base.scalar_from_node(node.items[0], self.name),
            self.base.scalar_from_node(node.items[1], self.name),
        )

    def render_payload(self, payload: Pair) -> str:
        return f"({render_scalar(payload[0])},{render_scalar(payload[1])})"
