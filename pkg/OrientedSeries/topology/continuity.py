"""
Continuity witnesses for addition and multiplication on totally ordered instances.

Given an open V around a+b (or x·y), these functions build opens around the
operands whose sums (products) stay inside V, following the ε–η
constructions for totally ordered groups and division rings.
"""

import random
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from ..models.common import CarrierKind, Verdict
from ..rings.base import Element, RingInstance
from .interval import (
    BasicOpen,
    BoundKind,
    NotMember,
    SubbasicClosed,
    UnsupportedRing,
    contains,
    negate,
)


def interval_hull(V: BasicOpen) -> Tuple[Optional[Element], Optional[Element]]:
    """Tightest lower and upper bounds of V in a total order."""
    ring = V.ring
    low = high = None
    for b in V.lower_bounds:
        if low is None or ring.lt(low, b):
            low = b
    for a in V.upper_bounds:
        if high is None or ring.lt(a, high):
            high = a
    return low, high


def _require_member(V: BasicOpen, point: Element, what: str) -> None:
    if not contains(V, point):
        raise NotMember(f"{what} = {point} is not in {V}", V.ring.name)


def _integer_split(slack: int) -> Tuple[int, int]:
    # k1, k2 >= 1 and k1 + k2 <= slack + 1 keep lattice sums strictly inside
    first = (slack + 2) // 2
    return first, slack + 1 - first


def split_neighborhood(V: BasicOpen, a: Element, b: Element) -> Tuple[BasicOpen, BasicOpen]:
    """Opens W1 ∋ a and W2 ∋ b with W1 + W2 ⊆ V.

    On divisible total orders every one-sided bound of V is pulled toward
    the operands by a quarter of its slack; on the integers the slack is
    split between lattice points.

    Raises:
        UnsupportedRing: If the ring is neither a divisible total order nor ℤ
        NotMember: If a + b is not in V
    """
    ring = V.ring
    ring.owns(a)
    ring.owns(b)
    integral = ring.carrier is CarrierKind.INTEGERS and ring.totally_ordered
    if not (ring.totally_ordered and (ring.divisible or integral)):
        raise UnsupportedRing("split_neighborhood needs a totally ordered divisible ring or ℤ", ring.name)
    total = a + b
    _require_member(V, total, "a + b")

    first: List[SubbasicClosed] = []
    second: List[SubbasicClosed] = []
    quarter = ring.from_fraction(Fraction(1, 4)) if not integral else None
    for closed in V.excluded:
        downward = closed.kind is BoundKind.DOWN_SET
        slack = (total - closed.bound) if downward else (closed.bound - total)
        if integral:
            k1, k2 = _integer_split(slack.payload)
            d1, d2 = ring.from_int(k1), ring.from_int(k2)
        else:
            d1 = d2 = quarter * slack
        if downward:
            first.append(SubbasicClosed.down(a - d1))
            second.append(SubbasicClosed.down(b - d2))
        else:
            first.append(SubbasicClosed.up(a + d1))
            second.append(SubbasicClosed.up(b + d2))
    return BasicOpen(ring, tuple(first)), BasicOpen(ring, tuple(second))


def _require_rationals(ring: RingInstance) -> None:
    if ring.carrier is not CarrierKind.RATIONALS or not ring.totally_ordered:
        raise UnsupportedRing("product_continuity_witness needs the rationals", ring.name)


def _symmetric(ring: RingInstance, radius: Fraction) -> BasicOpen:
    r = ring.element(radius)
    return BasicOpen.interval(-r, r)


def _around(ring: RingInstance, center: Fraction, radius: Fraction) -> BasicOpen:
    return BasicOpen.interval(ring.element(center - radius), ring.element(center + radius))


def product_continuity_witness(
    V: BasicOpen, x: Element, y: Element
) -> Tuple[BasicOpen, BasicOpen]:
    """Opens V1 ∋ x and V2 ∋ y with V1·V2 ⊆ V over the rationals.

    At (a, 0) the witness is V1 = ]a−η, a+η[, V2 = ]−ε/(|a|+η), ε/(|a|+η)[
    with η = |a|/2 and ε the distance from 0 to the nearest bound; (0, b) is
    symmetric and (0, 0) uses ]−1, 1[ × ]−ε, ε[. When both factors are
    nonzero the bounds of V are pulled back multiplicatively through
    ρ = 2r/(r+1), r being the ratio of |xy| to a bound.

    Raises:
        UnsupportedRing: If the ring is not the rationals
        NotMember: If x·y is not in V
    """
    ring = V.ring
    _require_rationals(ring)
    ring.owns(x)
    ring.owns(y)
    _require_member(V, x * y, "x·y")
    p, q = x.payload, y.payload
    low, high = interval_hull(V)

    if p == 0 or q == 0:
        radii = [abs(bound.payload) for bound in (low, high) if bound is not None]
        if not radii:
            return BasicOpen.whole(ring), BasicOpen.whole(ring)
        epsilon = min(radii)
        if p == 0 and q == 0:
            return _symmetric(ring, Fraction(1)), _symmetric(ring, epsilon)
        if q == 0:
            eta = abs(p) / 2
            return _around(ring, p, eta), _symmetric(ring, epsilon / (abs(p) + eta))
        eta = abs(q) / 2
        return _symmetric(ring, epsilon / (abs(q) + eta)), _around(ring, q, eta)

    sign = 1 if p * q > 0 else -1
    product = abs(p * q)
    lows = [b.payload * sign for b in (V.lower_bounds if sign > 0 else V.upper_bounds)]
    highs = [a.payload * sign for a in (V.upper_bounds if sign > 0 else V.lower_bounds)]

    shrink = Fraction(1)
    for alpha in lows:
        if alpha > 0:
            r = product / alpha
            shrink = max(shrink, 2 * r / (r + 1))
    stretch: Optional[Fraction] = None
    for beta in highs:
        big_r = beta / product
        rho = 2 * big_r / (big_r + 1)
        stretch = rho if stretch is None else min(stretch, rho)

    def positive_open(magnitude: Fraction) -> BasicOpen:
        floor = magnitude / shrink if shrink > 1 else Fraction(0)
        excluded = [SubbasicClosed.down(ring.element(floor))]
        if stretch is not None:
            excluded.append(SubbasicClosed.up(ring.element(magnitude * stretch)))
        return BasicOpen(ring, tuple(excluded))

    first, second = positive_open(abs(p)), positive_open(abs(q))
    return (first if p > 0 else negate(first)), (second if q > 0 else negate(second))


def sample_in_open(V: BasicOpen, rng: random.Random, anchor: Element) -> Element:
    """Sample a point of V on a total order, near ``anchor`` when unbounded."""
    ring = V.ring
    low, high = interval_hull(V)
    if ring.carrier is CarrierKind.INTEGERS:
        start = low.payload + 1 if low is not None else anchor.payload - 10
        stop = high.payload - 1 if high is not None else start + 20
        return ring.element(rng.randint(start, max(start, stop)))
    t = ring.from_fraction(Fraction(rng.randint(1, 999), 1000))
    spread = ring.from_int(rng.randint(1, 10))
    if low is not None and high is not None:
        return low + t * (high - low)
    if low is not None:
        return low + t * spread
    if high is not None:
        return high - t * spread
    return anchor + (t - ring.from_fraction(Fraction(1, 2))) * spread


def verify_pair_witness(
    V: BasicOpen,
    first: BasicOpen,
    second: BasicOpen,
    operation: Callable[[Element, Element], Element],
    anchors: Tuple[Element, Element],
    samples: int = 10_000,
    seed: int = 0,
) -> Verdict:
    """Sample (s, t) ∈ first × second and check operation(s, t) ∈ V."""
    rng = random.Random(seed)
    for i in range(samples):
        s = sample_in_open(first, rng, anchors[0])
        t = sample_in_open(second, rng, anchors[1])
        if not (contains(first, s) and contains(second, t)):
            continue
        value = operation(s, t)
        if not contains(V, value):
            return Verdict(
                passed=False,
                detail=f"sample {i} escapes the target open",
                witness=[str(s), str(t), str(value)],
            )
    return Verdict(passed=True, evidence={"samples": str(samples)})
