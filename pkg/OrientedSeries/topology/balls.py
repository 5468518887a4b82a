"""
Balls of the topology induced by a seminorm.

The additive rendering is used throughout: B_V(g) = {x : f(x − g) ∈ V} for a
window V around 0 in the target ring.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..models.common import CarrierKind, Verdict
from ..rings.base import AlgebraError, Element
from .convergence import entry_index
from .interval import (
    BasicOpen,
    PreconditionFailed,
    UnsupportedRing,
    contains,
    intersect,
    negate,
    scale,
    translate,
)
from .seminorm import SeminormAxiom, SeminormSpec, check_seminorm_axioms, sample_mixed

logger = logging.getLogger(__name__)


class NoModulus(AlgebraError):
    """Exception raised when no continuity modulus for x ↦ a·x can be built."""
    pass


class NotDefinite(AlgebraError):
    """Exception raised when a seminorm vanishes on a nonzero difference."""

    def __init__(self, message: str, witness: List[str], ring_name: Optional[str] = None):
        self.witness = witness
        super().__init__(message, ring_name)


class ContinuityPath(str, Enum):
    """Which argument makes x ↦ a·x continuous at a given a."""

    ZERO = "f(a) = 0: the map is constant"
    CONTRACTION = "f(a) <= 1: the window itself is a modulus"
    DIVISION = "f(a) > 1 invertible in the target: window scaled by f(a)^-1"
    UNAVAILABLE = "no modulus: f(a) > 1 is not invertible in the target"


@dataclass(frozen=True)
class Ball:
    """B_window(center) for a seminorm."""

    spec: SeminormSpec
    center: Element
    window: BasicOpen

    def __contains__(self, x: Element) -> bool:
        return ball_contains(self, x)


def ball_contains(B: Ball, x: Element) -> bool:
    """True iff f(x − center) lies in the window.

    Raises:
        MixedRings: If x is not in the seminorm's source ring
    """
    B.spec.source.owns(x)
    return contains(B.window, B.spec(x - B.center))


def sample_near(spec: SeminormSpec, center: Element, rng: random.Random) -> Element:
    """A sample that is often close to ``center`` for the seminorm."""
    return center + sample_mixed(spec.source, rng)


def refine_ball(
    V: BasicOpen,
    Vp: BasicOpen,
    g: Element,
    gp: Element,
    gpp: Element,
    spec: SeminormSpec,
) -> BasicOpen:
    """Window V'' with B_{V''}(g'') ⊆ B_V(g) ∩ B_{V'}(g').

    V'' = (V − c) ∩ −(V − c) ∩ (V' − c') ∩ −(V' − c') where c = f(g'' − g)
    and c' = f(g'' − g'). Containment relies on V and V' being convex
    windows around 0.

    Raises:
        PreconditionFailed: If g'' is not in both balls
    """
    if not (ball_contains(Ball(spec, g, V), gpp) and ball_contains(Ball(spec, gp, Vp), gpp)):
        raise PreconditionFailed(f"{gpp} is not in both balls", spec.source.name)
    shift = spec(gpp - g)
    shift_p = spec(gpp - gp)
    first = translate(V, -shift)
    second = translate(Vp, -shift_p)
    return intersect(intersect(first, negate(first)), intersect(second, negate(second)))


def verify_ball_inclusion(
    inner: Ball, outers: Sequence[Ball], samples: int = 1000, seed: int = 0
) -> Verdict:
    """Sample members of ``inner`` and check they belong to every outer ball."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        x = sample_near(inner.spec, inner.center, rng)
        if not ball_contains(inner, x):
            continue
        checked += 1
        for outer in outers:
            if not ball_contains(outer, x):
                return Verdict(passed=False, detail="member escapes an outer ball", witness=[str(x)])
    return Verdict(passed=True, evidence={"members_checked": str(checked)})


def ball_translation_law(
    spec: SeminormSpec,
    a: Element,
    g: Element,
    V: BasicOpen,
    samples: int = 1000,
    seed: int = 0,
) -> Verdict:
    """Check a + B_V(g) = B_V(g + a) and −B_V(g) = B_V(−g) on samples."""
    rng = random.Random(seed)
    ball = Ball(spec, g, V)
    shifted = Ball(spec, g + a, V)
    mirrored = Ball(spec, -g, V)
    for _ in range(samples):
        x = sample_near(spec, g + a if rng.random() < 0.5 else -g, rng)
        if ball_contains(ball, x - a) != ball_contains(shifted, x):
            return Verdict(passed=False, detail="translation law fails", witness=[str(a), str(g), str(x)])
        if ball_contains(ball, -x) != ball_contains(mirrored, x):
            return Verdict(passed=False, detail="negation law fails", witness=[str(g), str(x)])
    return Verdict(passed=True, evidence={"samples": str(samples)})


def _division_target(spec: SeminormSpec) -> bool:
    return spec.target.carrier is CarrierKind.RATIONALS and spec.target.totally_ordered


def continuity_path(spec: SeminormSpec, a: Element) -> ContinuityPath:
    """Name the argument that gives continuity of x ↦ a·x."""
    value = spec(a)
    if value.is_zero():
        return ContinuityPath.ZERO
    if spec.target.le(value, spec.target.one):
        return ContinuityPath.CONTRACTION
    if _division_target(spec):
        return ContinuityPath.DIVISION
    return ContinuityPath.UNAVAILABLE


def multiplication_modulus(spec: SeminormSpec, a: Element, V: BasicOpen) -> BasicOpen:
    """Window V' with f(x − r) ∈ V' ⇒ f(a·x − a·r) ∈ V.

    Raises:
        NoModulus: If f(a) > 1 and the target cannot divide by it
    """
    path = continuity_path(spec, a)
    if path is ContinuityPath.ZERO:
        return BasicOpen.whole(V.ring)
    if path is ContinuityPath.CONTRACTION:
        return V
    if path is ContinuityPath.DIVISION:
        return scale(V, 1 / Fraction(spec(a).payload))
    raise NoModulus(f"f({a}) = {spec(a)} exceeds 1 and cannot be inverted", spec.target.name)


def verify_modulus(
    spec: SeminormSpec,
    a: Element,
    V: BasicOpen,
    Vp: BasicOpen,
    samples: int = 10_000,
    seed: int = 0,
) -> Verdict:
    """Sample pairs (x, r) with f(x − r) ∈ V' and check f(a·x − a·r) ∈ V."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        r = spec.source.sample(rng)
        x = sample_near(spec, r, rng)
        if not contains(Vp, spec(x - r)):
            continue
        checked += 1
        if not contains(V, spec(a * x - a * r)):
            return Verdict(passed=False, detail="modulus violated", witness=[str(x), str(r)])
    return Verdict(passed=True, evidence={"pairs_checked": str(checked)})


@dataclass(frozen=True)
class HausdorffWitness:
    """Disjoint balls B_W(a), B_W(b) with the evidence for disjointness.

    Attributes:
        window: W = ]−ε/2, ε/2[
        epsilon: ε = f(a − b), rendered
        certified: True when the triangle-inequality argument applies
            (the seminorm claims subadditivity and evenness)
        certificate: The argument in words
        samples_checked: Sampled points tested against both balls
        shared_members: Sampled points found in both balls (must be 0)
    """

    window: BasicOpen
    epsilon: str
    certified: bool
    certificate: str
    samples_checked: int
    shared_members: int = 0
    evidence: Dict[str, str] = field(default_factory=dict)


def hausdorff_witness(
    spec: SeminormSpec,
    a: Element,
    b: Element,
    samples: int = 10_000,
    seed: int = 0,
    axiom_samples: int = 1000,
) -> HausdorffWitness:
    """Separate a ≠ b by balls of radius f(a − b)/2.

    The triangle-inequality argument is certified only when the seminorm
    claims subadditivity and evenness and both pass ``check_seminorm_axioms``
    at ``axiom_samples`` samples.

    Raises:
        PreconditionFailed: If a == b
        UnsupportedRing: If the target is not a divisible total order
        NotDefinite: If f(a − b) = 0
    """
    if a == b:
        raise PreconditionFailed("points to separate must differ", spec.source.name)
    target = spec.target
    if not (target.totally_ordered and target.divisible):
        raise UnsupportedRing("hausdorff_witness needs a divisible totally ordered target", target.name)
    epsilon = spec(a - b)
    if epsilon.is_zero():
        raise NotDefinite(
            f"f({a - b}) = 0 for a nonzero difference; {spec.name} is not a norm",
            [str(a), str(b)],
            spec.source.name,
        )
    half = target.from_fraction(Fraction(1, 2)) * epsilon
    window = BasicOpen.interval(-half, half)
    needed = (SeminormAxiom.SUBADDITIVE, SeminormAxiom.EVEN)
    axioms = check_seminorm_axioms(spec, axiom_samples, seed)
    certified = all(axiom in spec.claims and axioms.check(axiom.value).passed for axiom in needed)
    certificate = (
        f"x in both balls gives {epsilon} = f(a-b) <= f(a-x) + f(x-b) "
        f"< {half} + {half} = {epsilon}, a contradiction"
    )

    rng = random.Random(seed)
    first, second = Ball(spec, a, window), Ball(spec, b, window)
    shared = 0
    for i in range(samples):
        x = sample_near(spec, a if i % 2 == 0 else b, rng)
        if ball_contains(first, x) and ball_contains(second, x):
            shared += 1
    if shared:
        logger.warning("hausdorff_witness found %d shared members for %s", shared, spec.name)
    return HausdorffWitness(
        window=window,
        epsilon=str(epsilon),
        certified=certified,
        certificate=certificate,
        samples_checked=samples,
        shared_members=shared,
        evidence={
            "a": str(a),
            "b": str(b),
            **{axiom.value: str(axioms.check(axiom.value).passed).lower() for axiom in needed},
        },
    )


class CauchyVerdict(BaseModel):
    """Result of a Cauchy test on a sequence prefix.

    ``entry_indices[k]`` is the least N such that f(u_n − u_m) and
    f(u_m − u_n) lie in window k for all N <= n, m < prefix_length, or None
    when that tail holds fewer than two indices.
    """

    passed: bool
    prefix_length: int
    entry_indices: List[Optional[int]] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)


def cauchy_check(spec: SeminormSpec, u: Sequence[Element], windows: Sequence[BasicOpen]) -> CauchyVerdict:
    """Find, for each window, where the prefix starts to look Cauchy.

    Args:
        spec: Seminorm inducing the topology
        u: Sequence prefix (at least two terms)
        windows: Windows around 0 in the target
    """
    length = len(u)
    if length < 2:
        raise ValueError("cauchy_check needs at least two terms")
    values = [[spec(u[n] - u[m]) for m in range(length)] for n in range(length)]
    indices: List[Optional[int]] = []
    for V in windows:
        start = 0
        for n in range(length):
            for m in range(n + 1, length):
                if not (contains(V, values[n][m]) and contains(V, values[m][n])):
                    start = max(start, n + 1)
        indices.append(start if start <= length - 2 else None)
    passed = all(n is not None for n in indices)
    logger.debug("cauchy_check over %d windows: %s", len(windows), passed)
    return CauchyVerdict(passed=passed, prefix_length=length, entry_indices=indices)


def dyadic_windows(target, depth: int) -> List[BasicOpen]:
    """Windows ]−2^{-j}, 2^{-j}[ for j = 0..depth."""
    windows = []
    for j in range(depth + 1):
        radius = target.from_fraction(Fraction(1, 2**j))
        windows.append(BasicOpen.interval(-radius, radius))
    return windows


def residual_entry(spec: SeminormSpec, residuals: Sequence[Element], V: BasicOpen) -> Optional[int]:
    """Least N with f(r_n) ∈ V for every n >= N in the prefix."""
    return entry_index([contains(V, spec(r)) for r in residuals])
