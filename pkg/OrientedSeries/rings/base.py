"""
Base Ring Instance

This module provides the base class for all exact-arithmetic ring instances,
the immutable Element value they produce, and the error hierarchy shared by
the whole package.
"""

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Optional, Tuple, Union

from ..models.common import CarrierKind, Comparison, OrderKind

Scalar = Union[int, Fraction]


class AlgebraError(Exception):
    """Base exception for algebra-related errors."""

    def __init__(self, message: str, ring_name: Optional[str] = None):
        self.message = message
        self.ring_name = ring_name
        super().__init__(f"{ring_name}: {message}" if ring_name else message)


class MixedRings(AlgebraError):
    """Exception raised when an operation combines elements of different instances."""

    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right
        super().__init__(f"cannot combine elements of {left} and {right}")


class InvalidSpec(AlgebraError):
    """Exception raised when a ring or seminorm description is not well-formed."""

    def __init__(self, reason: str, ring_name: Optional[str] = None):
        self.reason = reason
        super().__init__(f"invalid spec: {reason}", ring_name)


class ParseError(AlgebraError):
    """Exception raised for malformed element literals."""

    def __init__(self, message: str, position: int, ring_name: Optional[str] = None):
        self.position = position
        super().__init__(f"{message} (at position {position})", ring_name)


class WrongArity(AlgebraError):
    """Exception raised when a pair or vector literal has the wrong length."""

    def __init__(self, expected: int, found: int, ring_name: Optional[str] = None):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected} components, found {found}", ring_name)


class UnsupportedCarrier(AlgebraError):
    """Exception raised when an operation is not defined on a carrier."""
    pass


class GrowthExceeded(AlgebraError):
    """Exception raised when a polynomial outgrows the instance's degree guard."""

    def __init__(self, degree: int, guard: int, ring_name: Optional[str] = None):
        self.degree = degree
        self.guard = guard
        super().__init__(f"degree {degree} exceeds guard {guard}", ring_name)


def render_scalar(value: Scalar) -> str:
    """Render an integer or rational in the element grammar (``p`` or ``p/q``)."""
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


@dataclass(frozen=True)
class Element:
    """An exact value in a specific ring instance.

    Payloads are canonical (see ``RingInstance.element``), so dataclass
    equality is equality in the ring.
    """

    ring: "RingInstance"
    payload: Any

    def _peer(self, other: object) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented  # type: ignore[return-value]
        if other.ring != self.ring:
            raise MixedRings(self.ring.name, other.ring.name)
        return other

    def __add__(self, other: "Element") -> "Element":
        other = self._peer(other)
        return Element(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other: "Element") -> "Element":
        other = self._peer(other)
        return Element(
            self.ring, self.ring._add(self.payload, self.ring._neg(other.payload))
        )

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring._neg(self.payload))

    def __mul__(self, other: "Element") -> "Element":
        other = self._peer(other)
        return Element(self.ring, self.ring._mul(self.payload, other.payload))

    def is_zero(self) -> bool:
        return self.payload == self.ring._zero()

    def __str__(self) -> str:
        return self.ring.render_payload(self.payload)

    def __repr__(self) -> str:
        return f"Element({self.ring.name}, {self})"


class RingInstance(ABC):
    """Base class for unital (non)associative rings with a decidable partial order.

    Subclasses implement the payload-level primitives (``_add``, ``_mul``,
    ``_is_nonnegative`` ...); the element-level API is shared. The order is
    always the one generated by the instance's positive cone:
    ``x <= y`` iff ``y - x`` is nonnegative.

    Class attributes describe what an instance declares about itself and are
    checked by the sampled axiom suites, never trusted blindly.
    """

    carrier: CarrierKind
    order_kind: OrderKind
    unit_nonnegative: bool = True
    associative: bool = True
    commutative: bool = True
    totally_ordered: bool = False
    divisible: bool = False

    def __init__(self, name: str):
        self.name = name

    @property
    @abstractmethod
    def key(self) -> Tuple[Any, ...]:
        """Hashable description; two instances are equal iff their keys are."""

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingInstance) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"

    # Payload primitives

    @abstractmethod
    def _zero(self) -> Any: ...

    @abstractmethod
    def _one(self) -> Any: ...

    @abstractmethod
    def _add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _neg(self, a: Any) -> Any: ...

    @abstractmethod
    def _mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _is_nonnegative(self, a: Any) -> bool: ...

    @abstractmethod
    def _canonical(self, raw: Any) -> Any:
        """Normalize a raw payload, raising ValueError if it is not one."""

    @abstractmethod
    def _scalar(self, q: Fraction) -> Any:
        """Payload of q·1, raising UnsupportedCarrier if q is not representable."""

    @abstractmethod
    def _sample(self, rng: random.Random) -> Any: ...

    @abstractmethod
    def _from_syntax(self, node: Any) -> Any:
        """Payload for a parsed literal (see ``rings.grammar``)."""

    @abstractmethod
    def render_payload(self, payload: Any) -> str: ...

    # Element API

    def element(self, raw: Any) -> Element:
        """Build a canonical element from a raw payload."""
        return Element(self, self._canonical(raw))

    @cached_property
    def zero(self) -> Element:
        return Element(self, self._zero())

    @cached_property
    def one(self) -> Element:
        return Element(self, self._one())

    def owns(self, x: Element) -> Element:
        """Return x if it belongs to this instance.

        Raises:
            MixedRings: If x comes from another instance
        """
        if x.ring != self:
            raise MixedRings(self.name, x.ring.name)
        return x

    def is_nonnegative(self, x: Element) -> bool:
        return self._is_nonnegative(self.owns(x).payload)

    def is_positive(self, x: Element) -> bool:
        """x > 0, i.e. x >= 0 and x != 0."""
        return not x.is_zero() and self.is_nonnegative(x)

    def compare(self, x: Element, y: Element) -> Comparison:
        """Decide the order between x and y through the positive cone."""
        self.owns(x)
        self.owns(y)
        if x.payload == y.payload:
            return Comparison.EQUAL
        difference = self._add(x.payload, self._neg(y.payload))
        if self._is_nonnegative(difference):
            return Comparison.GREATER
        if self._is_nonnegative(self._neg(difference)):
            return Comparison.LESS
        return Comparison.INCOMPARABLE

    def le(self, x: Element, y: Element) -> bool:
        return self.compare(x, y).is_le

    def lt(self, x: Element, y: Element) -> bool:
        return self.compare(x, y) is Comparison.LESS

    def from_int(self, n: int) -> Element:
        """The additive multiple n·1."""
        return Element(self, self._scalar(Fraction(n)))

    def from_fraction(self, q: Union[Fraction, int, str]) -> Element:
        """The scalar q·1.

        Raises:
            UnsupportedCarrier: If q's denominator is not invertible in the carrier
        """
        return Element(self, self._scalar(Fraction(q)))

    def multiple(self, x: Element, n: int) -> Element:
        """The additive multiple n·x by double-and-add."""
        self.owns(x)
        result, base, k = self._zero(), x.payload, abs(n)
        while k:
            if k & 1:
                result = self._add(result, base)
            base = self._add(base, base)
            k >>= 1
        return Element(self, result if n >= 0 else self._neg(result))

    # Sampling

    def sample(self, rng: random.Random) -> Element:
        return Element(self, self._sample(rng))

    def sample_small(self, rng: random.Random, level: int) -> Element:
        """Sample an element that is small at the given level.

        Carriers with a valuation or an archimedean size override this; the
        default ignores ``level``.
        """
        return self.sample(rng)

    def sample_nonnegative(self, rng: random.Random, attempts: int = 32) -> Element:
        """Sample an element of the positive cone (zero if none is found)."""
        for _ in range(attempts):
            candidate = self.sample(rng)
            if self.is_nonnegative(candidate):
                return candidate
            if self.is_nonnegative(-candidate):
                return -candidate
        return self.zero

    def sample_positive(self, rng: random.Random, attempts: int = 32) -> Optional[Element]:
        """Sample a strictly positive element, or None if the cone looks trivial."""
        for _ in range(attempts):
            candidate = self.sample_nonnegative(rng)
            if not candidate.is_zero():
                return candidate
        return None

    # Grammar

    def render(self, x: Element) -> str:
        return self.render_payload(self.owns(x).payload)

    def parse(self, text: str) -> Element:
        from .grammar import parse_element

        return parse_element(self, text)
