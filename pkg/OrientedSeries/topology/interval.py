"""
Basic opens of the interval topology.

A basic open is the complement of finitely many subbasic closed sets, each a
down-set ↓b or an up-set ↑a. Membership is decided by negated order tests,
so an element incomparable to a bound is never excluded by it.
"""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from ..rings.base import AlgebraError, Element, MixedRings, ParseError, RingInstance
from ..rings.grammar import GroupNode, SyntaxParser, element_from_node


class NotMember(AlgebraError):
    """Exception raised when a point required to lie in an open does not."""
    pass


class UnsupportedRing(AlgebraError):
    """Exception raised when a construction needs a carrier the instance is not."""
    pass


class PreconditionFailed(AlgebraError):
    """Exception raised when the arguments of a construction violate its precondition."""
    pass


class BoundKind(str, Enum):
    DOWN_SET = "down"
    UP_SET = "up"


@dataclass(frozen=True)
class SubbasicClosed:
    """The down-set ↓bound or the up-set ↑bound."""

    kind: BoundKind
    bound: Element

    @classmethod
    def down(cls, bound: Element) -> "SubbasicClosed":
        return cls(BoundKind.DOWN_SET, bound)

    @classmethod
    def up(cls, bound: Element) -> "SubbasicClosed":
        return cls(BoundKind.UP_SET, bound)

    def contains(self, x: Element) -> bool:
        ring = self.bound.ring
        if self.kind is BoundKind.DOWN_SET:
            return ring.le(x, self.bound)
        return ring.le(self.bound, x)


@dataclass(frozen=True)
class BasicOpen:
    """Complement of the union of ``excluded``; no exclusions is the whole space."""

    ring: RingInstance
    excluded: Tuple[SubbasicClosed, ...] = ()

    @classmethod
    def whole(cls, ring: RingInstance) -> "BasicOpen":
        return cls(ring)

    @classmethod
    def above(cls, low: Element) -> "BasicOpen":
        """]low, +∞[ in a total order: excludes ↓low."""
        return cls(low.ring, (SubbasicClosed.down(low),))

    @classmethod
    def below(cls, high: Element) -> "BasicOpen":
        """]−∞, high[ in a total order: excludes ↑high."""
        return cls(high.ring, (SubbasicClosed.up(high),))

    @classmethod
    def interval(cls, low: Element, high: Element) -> "BasicOpen":
        """]low, high[ in a total order: excludes ↓low and ↑high."""
        if low.ring != high.ring:
            raise MixedRings(low.ring.name, high.ring.name)
        return cls(low.ring, (SubbasicClosed.down(low), SubbasicClosed.up(high)))

    @property
    def lower_bounds(self) -> List[Element]:
        return [c.bound for c in self.excluded if c.kind is BoundKind.DOWN_SET]

    @property
    def upper_bounds(self) -> List[Element]:
        return [c.bound for c in self.excluded if c.kind is BoundKind.UP_SET]

    def __contains__(self, x: Element) -> bool:
        return contains(self, x)

    def __str__(self) -> str:
        return render_open(self)


def contains(V: BasicOpen, x: Element) -> bool:
    """True iff x lies in none of V's excluded sets.

    Raises:
        MixedRings: If x is not an element of V's ring
    """
    V.ring.owns(x)
    return not any(closed.contains(x) for closed in V.excluded)


def _map_bounds(V: BasicOpen, shift) -> BasicOpen:
    return BasicOpen(V.ring, tuple(SubbasicClosed(c.kind, shift(c.bound)) for c in V.excluded))


def translate(V: BasicOpen, a: Element) -> BasicOpen:
    """The translate a + V: every bound b becomes a + b."""
    V.ring.owns(a)
    return _map_bounds(V, lambda b: a + b)


def right_translate(V: BasicOpen, a: Element) -> BasicOpen:
    """The translate V + a: every bound b becomes b + a."""
    V.ring.owns(a)
    return _map_bounds(V, lambda b: b + a)


def negate(V: BasicOpen) -> BasicOpen:
    """The open −V: ↓b becomes ↑(−b) and ↑a becomes ↓(−a)."""
    flipped = {BoundKind.DOWN_SET: BoundKind.UP_SET, BoundKind.UP_SET: BoundKind.DOWN_SET}
    return BasicOpen(
        V.ring, tuple(SubbasicClosed(flipped[c.kind], -c.bound) for c in V.excluded)
    )


def intersect(V: BasicOpen, W: BasicOpen) -> BasicOpen:
    """V ∩ W by concatenating exclusion lists."""
    if V.ring != W.ring:
        raise MixedRings(V.ring.name, W.ring.name)
    return BasicOpen(V.ring, V.excluded + W.excluded)


def scale(V: BasicOpen, q: Fraction) -> BasicOpen:
    """The open q·V for a positive rational q on a divisible total order.

    Raises:
        UnsupportedRing: If the ring is not a divisible total order
        ValueError: If q is not positive
    """
    if not (V.ring.totally_ordered and V.ring.divisible):
        raise UnsupportedRing("scaling needs a divisible total order", V.ring.name)
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"scale factor must be positive, got {q}")
    factor = V.ring.from_fraction(q)
    return _map_bounds(V, lambda b: factor * b)


def symmetric_window(ring: RingInstance, radius: Fraction) -> BasicOpen:
    """The window ]−r, r[ around 0, with r = radius·1."""
    r = ring.from_fraction(radius)
    return BasicOpen.interval(-r, r)


def render_open(V: BasicOpen) -> str:
    """Serialize as ``open{ below: [b...], above: [a...] }``.

    ``below`` lists the excluded down-set bounds, ``above`` the excluded
    up-set bounds, both in the element grammar.
    """
    below = ", ".join(str(b) for b in V.lower_bounds)
    above = ", ".join(str(a) for a in V.upper_bounds)
    return f"open{{ below: [{below}], above: [{above}] }}"


def _bound_list(ring: RingInstance, parser: SyntaxParser) -> List[Element]:
    if parser.peek() != "[":
        raise ParseError("expected a bound list '[...]'", parser.pos, ring.name)
    node = parser.parse_value()
    assert isinstance(node, GroupNode)
    return [element_from_node(ring, item) for item in node.items]


def parse_open(ring: RingInstance, text: str) -> BasicOpen:
    """Parse the serialized form produced by ``render_open``.

    Raises:
        ParseError: On malformed input
    """
    parser = SyntaxParser(text)
    try:
        parser.expect("open{")
        parser.expect("below:")
        below = _bound_list(ring, parser)
        parser.expect(",")
        parser.expect("above:")
        above = _bound_list(ring, parser)
        parser.expect("}")
    except ParseError as e:
        if e.ring_name is None:
            raise ParseError("malformed basic open", e.position, ring.name) from e
        raise
    if not parser.at_end():
        raise ParseError("trailing characters", parser.pos, ring.name)
    return BasicOpen(
        ring,
        tuple(SubbasicClosed.down(b) for b in below) + tuple(SubbasicClosed.up(a) for a in above),
    )


def _bound_away(
    ring: RingInstance, point: Element, rng: random.Random, downward: bool
) -> Optional[Element]:
    """A bound whose down-set (or up-set) misses ``point``."""
    for _ in range(50):
        step = ring.sample_positive(rng) if rng.random() < 0.8 else None
        candidate = (point - step if downward else point + step) if step else ring.sample(rng)
        closed = SubbasicClosed.down(candidate) if downward else SubbasicClosed.up(candidate)
        if not closed.contains(point):
            return candidate
    return None


def opens_containing(
    ring: RingInstance,
    point: Element,
    count: int,
    seed: int = 0,
    max_bounds: int = 2,
) -> List[BasicOpen]:
    """Generate a seeded family of basic opens that all contain ``point``.

    Each open excludes up to ``max_bounds`` down-sets and up-sets whose
    bounds were drawn so that the point stays inside.
    """
    ring.owns(point)
    rng = random.Random(seed)
    family = []
    for _ in range(count):
        excluded: List[SubbasicClosed] = []
        for downward in (True, False):
            for _ in range(rng.randint(0, max_bounds)):
                bound = _bound_away(ring, point, rng, downward)
                if bound is not None:
                    excluded.append(
                        SubbasicClosed.down(bound) if downward else SubbasicClosed.up(bound)
                    )
        family.append(BasicOpen(ring, tuple(excluded)))
    return family


def random_open(ring: RingInstance, rng: random.Random, max_bounds: int = 2) -> BasicOpen:
    """A basic open with randomly drawn bounds (possibly empty)."""
    excluded = []
    for _ in range(rng.randint(0, max_bounds)):
        excluded.append(SubbasicClosed.down(ring.sample(rng)))
    for _ in range(rng.randint(0, max_bounds)):
        excluded.append(SubbasicClosed.up(ring.sample(rng)))
    return BasicOpen(ring, tuple(excluded))
