"""
Sampled axiom suites for ring instances.

Failures are data: every check ends up in the returned AxiomReport, with the
first counterexample rendered in the element grammar.
"""

import logging
import random
from typing import Dict, List, Optional

from ..models.common import AxiomCheck, AxiomReport, Comparison
from ..rings.base import Element, RingInstance

logger = logging.getLogger(__name__)


class AxiomTally:
    """Accumulates pass/fail state and first witnesses for named checks."""

    def __init__(self):
        self._required: Dict[str, bool] = {}
        self._details: Dict[str, Optional[str]] = {}
        self._witnesses: Dict[str, List[str]] = {}

    def declare(self, name: str, required: bool = True, detail: Optional[str] = None) -> None:
        self._required[name] = required
        self._details[name] = detail

    def record(self, name: str, ok: bool, *elements: Element) -> None:
        if not ok and name not in self._witnesses:
            self._witnesses[name] = [str(e) for e in elements]

    def report(self, subject: str, sample_count: int, seed: int) -> AxiomReport:
        checks = [
            AxiomCheck(
                name=name,
                passed=name not in self._witnesses,
                required=required,
                witness=self._witnesses.get(name),
                detail=self._details[name],
            )
            for name, required in self._required.items()
        ]
        return AxiomReport(subject=subject, sample_count=sample_count, seed=seed, checks=checks)


def _require_samples(sample_count: int) -> None:
    if sample_count < 1:
        raise ValueError(f"sample_count must be at least 1, got {sample_count}")


def check_ring_axioms(ring: RingInstance, sample_count: int = 1000, seed: int = 0) -> AxiomReport:
    """Check the unital nonassociative ring axioms on seeded samples.

    Abelian-group axioms of (R, +, 0), both distributive laws and the unit
    law are required. Associativity and commutativity of the product are
    required only when the instance declares them, and informational
    otherwise.

    Args:
        ring: Instance under test
        sample_count: Number of sampled triples
        seed: Seed of the sample generator

    Returns:
        AxiomReport with one check per axiom
    """
    _require_samples(sample_count)
    rng = random.Random(seed)
    tally = AxiomTally()
    for name in (
        "unit-distinct-from-zero",
        "additive-associativity",
        "additive-commutativity",
        "additive-identity",
        "additive-inverse",
        "left-distributivity",
        "right-distributivity",
        "unit-identity",
    ):
        tally.declare(name)
    tally.declare(
        "multiplicative-associativity",
        required=ring.associative,
        detail=None if ring.associative else "not assumed by this instance",
    )
    tally.declare(
        "multiplicative-commutativity",
        required=ring.commutative,
        detail=None if ring.commutative else "not assumed by this instance",
    )

    zero, one = ring.zero, ring.one
    tally.record("unit-distinct-from-zero", one != zero, one)
    for _ in range(sample_count):
        x, y, z = ring.sample(rng), ring.sample(rng), ring.sample(rng)
        tally.record("additive-associativity", (x + y) + z == x + (y + z), x, y, z)
        tally.record("additive-commutativity", x + y == y + x, x, y)
        tally.record("additive-identity", x + zero == x and zero + x == x, x)
        tally.record("additive-inverse", x + (-x) == zero, x)
        tally.record("left-distributivity", x * (y + z) == x * y + x * z, x, y, z)
        tally.record("right-distributivity", (x + y) * z == x * z + y * z, x, y, z)
        tally.record("unit-identity", one * x == x and x * one == x, x)
        tally.record("multiplicative-associativity", (x * y) * z == x * (y * z), x, y, z)
        tally.record("multiplicative-commutativity", x * y == y * x, x, y)

    report = tally.report(ring.name, sample_count, seed)
    logger.info("ring axioms on %s: %s", ring.name, "ok" if report.ok else "FAILED")
    return report


def check_order_compatibility(
    ring: RingInstance, sample_count: int = 1000, seed: int = 0
) -> AxiomReport:
    """Check that the cone order is a partial order compatible with + and ×.

    Checks reflexivity, antisymmetry, transitivity (on sampled and on
    constructed chains), properness of the cone, translation invariance,
    closure of the cone under products in both orders, totality when the
    instance declares a total order, and 1 >= 0 when declared.
    """
    _require_samples(sample_count)
    rng = random.Random(seed)
    tally = AxiomTally()
    for name in (
        "reflexivity",
        "antisymmetry",
        "transitivity",
        "proper-cone",
        "translation-invariance",
        "cone-closed-under-product",
    ):
        tally.declare(name)
    if ring.totally_ordered:
        tally.declare("total-order")
    if ring.unit_nonnegative:
        tally.declare("unit-nonnegative")
        tally.record("unit-nonnegative", ring.is_nonnegative(ring.one), ring.one)

    for _ in range(sample_count):
        x, y, z = ring.sample(rng), ring.sample(rng), ring.sample(rng)
        p, q = ring.sample_nonnegative(rng), ring.sample_nonnegative(rng)
        xy = ring.compare(x, y)

        tally.record("reflexivity", ring.compare(x, x) is Comparison.EQUAL, x)
        tally.record("antisymmetry", ring.compare(y, x) is xy.flipped(), x, y)
        tally.record(
            "proper-cone",
            x.is_zero() or not (ring.is_nonnegative(x) and ring.is_nonnegative(-x)),
            x,
        )
        if xy.is_le and ring.le(y, z):
            tally.record("transitivity", ring.le(x, z), x, y, z)
        middle, top = x + p, x + p + q
        if ring.le(x, middle) and ring.le(middle, top):
            tally.record("transitivity", ring.le(x, top), x, middle, top)
        tally.record("translation-invariance", ring.compare(x + z, y + z) is xy, x, y, z)
        tally.record(
            "cone-closed-under-product",
            ring.is_nonnegative(p * q) and ring.is_nonnegative(q * p),
            p,
            q,
        )
        if ring.totally_ordered:
            tally.record("total-order", xy is not Comparison.INCOMPARABLE, x, y)

    report = tally.report(ring.name, sample_count, seed)
    logger.info("order compatibility on %s: %s", ring.name, "ok" if report.ok else "FAILED")
    return report
