"""
Ring seminorms with values in a partially ordered ring.

A seminorm f: R₁ → R₂ is even, subadditive, submultiplicative, nonnegative
and satisfies f(1) <= 1; it is a norm when it is also definite. Specs name
the properties they claim, and the sampled suite checks every property,
treating unclaimed ones as informational.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet

from ..core.axioms import AxiomTally
from ..models.common import AxiomReport
from ..rings.base import Element, InvalidSpec, RingInstance
from ..rings.residues import ResidueRing
from ..rings.scalars import RATIONALS, RationalRing
from ..rings.series import TruncatedSeriesRing

logger = logging.getLogger(__name__)


class SeminormAxiom(str, Enum):
    SUBADDITIVE = "subadditive"
    EVEN = "even"
    SUBMULTIPLICATIVE = "submultiplicative"
    NONNEGATIVE = "nonnegative"
    DEFINITE = "definite"
    UNIT_BOUNDED = "unit-bounded"


SEMINORM_CLAIMS: FrozenSet[SeminormAxiom] = frozenset(SeminormAxiom) - {SeminormAxiom.DEFINITE}
NORM_CLAIMS: FrozenSet[SeminormAxiom] = frozenset(SeminormAxiom)


@dataclass(frozen=True)
class SeminormSpec:
    """A seminorm ``evaluate: source → target`` with its claimed properties."""

    name: str
    source: RingInstance
    target: RingInstance
    evaluate: Callable[[Element], Element]
    claims: FrozenSet[SeminormAxiom] = SEMINORM_CLAIMS

    def __call__(self, x: Element) -> Element:
        return self.evaluate(self.source.owns(x))

    @property
    def is_norm(self) -> bool:
        return NORM_CLAIMS <= self.claims


def _abs(ring: RationalRing) -> Callable[[Element], Element]:
    return lambda x: RATIONALS.element(abs(x.payload))


def _valuation_norm(radix: Callable[[RingInstance], int]):
    """f(x) = radix^{-v(x)} with f(0) = 0."""

    def build(ring) -> Callable[[Element], Element]:
        base = radix(ring)

        def evaluate(x: Element) -> Element:
            if x.is_zero():
                return RATIONALS.zero
            return RATIONALS.element(Fraction(1, base ** ring.valuation(x)))

        return evaluate

    return build


def _constant_term(ring: TruncatedSeriesRing) -> Callable[[Element], Element]:
    return lambda x: RATIONALS.element(abs(x.payload[0]) if x.payload else 0)


# name -> (required source type, map builder, claims)
SEMINORM_CATALOG: Dict[str, tuple] = {
    "abs": (RationalRing, _abs, NORM_CLAIMS),
    "ord2": (TruncatedSeriesRing, _valuation_norm(lambda ring: 2), NORM_CLAIMS),
    "padic": (ResidueRing, _valuation_norm(lambda ring: ring.prime), NORM_CLAIMS),
    "const-term": (TruncatedSeriesRing, _constant_term, SEMINORM_CLAIMS),
}


def make_seminorm(name: str, ring: RingInstance) -> SeminormSpec:
    """Select a catalog seminorm on ``ring``; every catalog target is the rationals.

    Raises:
        InvalidSpec: If the name is unknown or does not apply to the ring
    """
    entry = SEMINORM_CATALOG.get(name)
    if entry is None:
        raise InvalidSpec(f"unknown seminorm {name!r}; expected one of {', '.join(SEMINORM_CATALOG)}")
    source_type, build, claims = entry
    if not isinstance(ring, source_type):
        raise InvalidSpec(f"seminorm {name!r} does not apply to {ring.name}", ring.name)
    return SeminormSpec(name=name, source=ring, target=RATIONALS, evaluate=build(ring), claims=claims)


def sample_mixed(ring: RingInstance, rng: random.Random) -> Element:
    """Half plain samples, half samples that are small at a random level."""
    if rng.random() < 0.5:
        return ring.sample(rng)
    return ring.sample_small(rng, rng.randint(1, 3))


def check_seminorm_axioms(spec: SeminormSpec, sample_count: int = 1000, seed: int = 0) -> AxiomReport:
    """Check the seminorm properties on seeded samples.

    Claimed properties are required; unclaimed ones are reported as
    informational, so a seminorm that is not a norm shows its definiteness
    counterexample without failing.
    """
    if sample_count < 1:
        raise ValueError(f"sample_count must be at least 1, got {sample_count}")
    rng = random.Random(seed)
    source, target = spec.source, spec.target
    tally = AxiomTally()
    for axiom in SeminormAxiom:
        tally.declare(axiom.value, required=axiom in spec.claims)

    tally.record(SeminormAxiom.UNIT_BOUNDED.value, target.le(spec(source.one), target.one), source.one)
    for _ in range(sample_count):
        x, y = sample_mixed(source, rng), sample_mixed(source, rng)
        fx, fy = spec(x), spec(y)
        tally.record(SeminormAxiom.NONNEGATIVE.value, target.is_nonnegative(fx), x)
        tally.record(SeminormAxiom.EVEN.value, spec(-x) == fx, x)
        tally.record(SeminormAxiom.SUBADDITIVE.value, target.le(spec(x + y), fx + fy), x, y)
        tally.record(SeminormAxiom.SUBMULTIPLICATIVE.value, target.le(spec(x * y), fx * fy), x, y)
        tally.record(SeminormAxiom.DEFINITE.value, x.is_zero() or not fx.is_zero(), x)

    report = tally.report(f"{spec.name} on {source.name}", sample_count, seed)
    logger.info("seminorm axioms for %s: %s", report.subject, "ok" if report.ok else "FAILED")
    return report
