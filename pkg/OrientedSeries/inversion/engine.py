"""
Certifying geometric-series inversion.

Ordered mode sums s_n = Σ_{k<=n} (1 − x)^k under the hypotheses
0 < x <= 1 and x·c >= 1 for some c > 0, checking the monotone-bound
invariants at every step. Seminormed mode sums the same series when
f(1 − x) < 1 and watches the residual 1 − x·u_n shrink under f.

Neither mode can compute a supremum or a limit; a run ends with an exact
inverse, evidence of convergence against a finite family of windows, or an
exhausted budget, and the certificate says which.
"""

import logging
from typing import List, Optional, Sequence

from ..core.powers import step_power
from ..models.certificate import (
    CertificateStatus,
    HypothesisCheck,
    InversionCertificate,
    InversionDirection,
    InversionMode,
    TraceEntry,
    WitnessProvenance,
)
from ..models.common import Comparison, PowerDirection
from ..rings.base import AlgebraError, Element
from ..topology.balls import cauchy_check, continuity_path, residual_entry
from ..topology.interval import BasicOpen
from ..topology.seminorm import SeminormSpec, check_seminorm_axioms
from .witness import archimedean_witness_search

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 64


class InvariantViolation(AlgebraError):
    """Exception raised when a step of the ordered series breaks a proof invariant."""

    def __init__(self, index: int, invariant: str, ring_name: Optional[str] = None):
        self.index = index
        self.invariant = invariant
        super().__init__(f"step {index}: {invariant}", ring_name)


class DirectionalMismatch(AlgebraError):
    """Exception raised when right and left series end at different inverses."""

    def __init__(self, right: str, left: str, ring_name: Optional[str] = None):
        self.right = right
        self.left = left
        super().__init__(f"right inverse {right} differs from left inverse {left}", ring_name)


class NotCauchy(AlgebraError):
    """Exception raised when the partial sums do not pass the Cauchy test."""

    def __init__(self, verdict, ring_name: Optional[str] = None):
        self.verdict = verdict
        super().__init__("partial sums fail the Cauchy test at this budget", ring_name)


def _direction(direction: PowerDirection) -> InversionDirection:
    if direction is PowerDirection.RIGHT_NESTED:
        return InversionDirection.RIGHT
    return InversionDirection.LEFT


def _product(x: Element, s: Element, direction: PowerDirection) -> Element:
    return x * s if direction is PowerDirection.RIGHT_NESTED else s * x


def _hypothesis(name: str, passed: bool, detail: str, *witness: Element) -> HypothesisCheck:
    return HypothesisCheck(
        name=name,
        passed=passed,
        detail=detail,
        witness=[str(w) for w in witness] if not passed and witness else None,
    )


def ordered_hypotheses(x: Element, c: Element, direction: PowerDirection) -> List[HypothesisCheck]:
    """Decide 1 >= 0, 0 < x <= 1, c > 0 and x·c >= 1 (c·x >= 1 for left)."""
    ring = x.ring
    one = ring.one
    cover = _product(x, c, direction)
    cover_name = "x*c >= 1" if direction is PowerDirection.RIGHT_NESTED else "c*x >= 1"
    return [
        _hypothesis(
            "1 >= 0",
            ring.unit_nonnegative and ring.is_nonnegative(one),
            "instance declares and satisfies 1 >= 0",
            one,
        ),
        _hypothesis("x > 0", ring.is_positive(x), f"x = {x}", x),
        _hypothesis("x <= 1", ring.le(x, one), f"compare(x, 1) = {ring.compare(x, one).value}", x),
        _hypothesis("c > 0", ring.is_positive(c), f"c = {c}", c),
        _hypothesis(cover_name, ring.le(one, cover), f"product = {cover}", cover),
    ]


def _convergence_evidence(terms: Sequence[Element], family: Sequence[Element]) -> bool:
    """Powers comparable, weakly decreasing and eventually below every family element."""
    if not family or not terms:
        return False
    ring = terms[0].ring
    for previous, current in zip(terms, terms[1:]):
        if ring.compare(current, previous) not in (Comparison.LESS, Comparison.EQUAL):
            return False
    return all(any(ring.le(t, epsilon) for t in terms) for epsilon in family)


def invert_ordered(
    x: Element,
    c: Optional[Element] = None,
    direction: PowerDirection = PowerDirection.RIGHT_NESTED,
    budget: int = DEFAULT_BUDGET,
    comparison_family: Sequence[Element] = (),
) -> InversionCertificate:
    """Invert x by the monotone series Σ (1 − x)^n under an upper-bound witness.

    Args:
        x: Element to invert
        c: Witness with x·c >= 1; searched by doubling when omitted
        direction: Right-nested powers give a right inverse, left-nested a left inverse
        budget: Maximal number of series terms
        comparison_family: Positive elements used as evidence that the
            powers decrease to 0

    Returns:
        InversionCertificate; HypothesisFailed when a hypothesis is refuted

    Raises:
        InvariantViolation: If s_n stops increasing, exceeds c or breaks the recurrence
    """
    ring = x.ring
    provenance = WitnessProvenance.SUPPLIED
    search_detail = None
    if c is None:
        provenance = WitnessProvenance.ARCHIMEDEAN_SEARCH
        if ring.is_positive(x):
            search = archimedean_witness_search(x, budget)
            c = search.element
            search_detail = search.detail
    base = dict(
        ring=ring.name,
        x=str(x),
        mode=InversionMode.ORDERED,
        direction=_direction(direction),
        budget=budget,
        witness_provenance=provenance,
    )
    if c is None:
        hypotheses = [
            HypothesisCheck(
                name="witness c exists",
                passed=False,
                detail=search_detail or "x is not > 0",
                witness=[str(x)],
            )
        ]
        return InversionCertificate(
            status=CertificateStatus.HYPOTHESIS_FAILED,
            hypothesis_report=hypotheses,
            detail="no witness c with x*c >= 1",
            **base,
        )

    ring.owns(c)
    hypotheses = ordered_hypotheses(x, c, direction)
    base["witness_used"] = str(c)
    if not all(h.passed for h in hypotheses):
        failed = ", ".join(h.name for h in hypotheses if not h.passed)
        return InversionCertificate(
            status=CertificateStatus.HYPOTHESIS_FAILED,
            hypothesis_report=hypotheses,
            detail=f"failed: {failed}",
            **base,
        )

    one = ring.one
    y = one - x
    term, partial = one, one
    terms: List[Element] = []
    sums: List[TraceEntry] = []
    residuals: List[TraceEntry] = []
    for n in range(budget):
        if n > 0:
            term = step_power(y, term, direction)
            previous = partial
            partial = previous + term
            if partial != _product(y, previous, direction) + one:
                raise InvariantViolation(n, "s_n = y*s_(n-1) + 1 fails", ring.name)
            if not ring.le(previous, partial):
                raise InvariantViolation(n, "s_n is not increasing", ring.name)
        if not ring.le(partial, c):
            raise InvariantViolation(n, f"s_n <= c fails for c = {c}", ring.name)
        terms.append(term)
        residual = one - _product(x, partial, direction)
        if residual != step_power(y, term, direction):
            raise InvariantViolation(n, "1 - x*s_n = y^(n+1) fails", ring.name)
        sums.append(TraceEntry(n=n, value=str(partial)))
        residuals.append(TraceEntry(n=n, value=str(residual)))
        logger.debug("ordered step %d: s=%s residual=%s", n, partial, residual)

        if residual.is_zero():
            return InversionCertificate(
                status=CertificateStatus.EXACT_INVERSE,
                iterations=n + 1,
                inverse_candidate=str(partial),
                inverse=partial,
                hypothesis_report=hypotheses,
                residual_trace=residuals,
                partial_sums=sums,
                detail=f"x*s = 1 exactly after {n + 1} terms",
                **base,
            )

    status = (
        CertificateStatus.CONVERGENT_EVIDENCE
        if _convergence_evidence(terms[1:], comparison_family)
        else CertificateStatus.BUDGET_EXHAUSTED
    )
    logger.info("ordered inversion of %s in %s: %s", x, ring.name, status.value)
    return InversionCertificate(
        status=status,
        iterations=len(sums),
        inverse_candidate=str(partial),
        inverse=partial,
        hypothesis_report=hypotheses,
        residual_trace=residuals,
        partial_sums=sums,
        detail=(
            "powers of 1 - x decrease below every family element"
            if status is CertificateStatus.CONVERGENT_EVIDENCE
            else f"no exact inverse within {budget} terms"
        ),
        **base,
    )


def _combine(
    x: Element, right: InversionCertificate, left: InversionCertificate, mode: InversionMode
) -> InversionCertificate:
    status = right.status.worse(left.status)
    inverse, detail = None, None
    if status is CertificateStatus.EXACT_INVERSE:
        if right.inverse != left.inverse:
            raise DirectionalMismatch(right.inverse_candidate, left.inverse_candidate, x.ring.name)
        inverse = right.inverse
        one = x.ring.one
        if x * inverse != one or inverse * x != one:
            raise DirectionalMismatch(right.inverse_candidate, left.inverse_candidate, x.ring.name)
        detail = "right and left series agree and both products equal 1"
    hypotheses = [
        check.model_copy(update={"name": f"right: {check.name}"}) for check in right.hypothesis_report
    ] + [check.model_copy(update={"name": f"left: {check.name}"}) for check in left.hypothesis_report]
    return InversionCertificate(
        ring=x.ring.name,
        x=str(x),
        mode=mode,
        status=status,
        direction=InversionDirection.TWO_SIDED,
        iterations=max(right.iterations, left.iterations),
        budget=right.budget,
        inverse_candidate=str(inverse) if inverse is not None else right.inverse_candidate,
        inverse=inverse if inverse is not None else right.inverse,
        witness_used=right.witness_used,
        witness_provenance=right.witness_provenance,
        hypothesis_report=hypotheses,
        residual_trace=right.residual_trace,
        partial_sums=right.partial_sums,
        path_note=right.path_note,
        detail=detail or f"right: {right.status.value}, left: {left.status.value}",
    )


def invert_two_sided(
    x: Element,
    c_right: Optional[Element] = None,
    c_left: Optional[Element] = None,
    budget: int = DEFAULT_BUDGET,
    comparison_family: Sequence[Element] = (),
) -> InversionCertificate:
    """Run right- and left-nested ordered series and reconcile them.

    Raises:
        DirectionalMismatch: If both reach exact inverses that differ
    """
    right = invert_ordered(x, c_right, PowerDirection.RIGHT_NESTED, budget, comparison_family)
    left = invert_ordered(
        x, c_left if c_left is not None else c_right, PowerDirection.LEFT_NESTED, budget, comparison_family
    )
    return _combine(x, right, left, InversionMode.ORDERED)


def invert_seminormed(
    x: Element,
    spec: SeminormSpec,
    windows: Sequence[BasicOpen],
    budget: int = DEFAULT_BUDGET,
    direction: PowerDirection = PowerDirection.RIGHT_NESTED,
    axiom_samples: int = 200,
    seed: int = 0,
) -> InversionCertificate:
    """Invert x by u_n = Σ_{k<=n} (1 − x)^k when f(1 − x) < 1.

    Args:
        x: Element of the seminorm's source ring
        spec: Seminorm f
        windows: Windows around 0 in the target used as convergence evidence
        budget: Maximal number of series terms
        direction: Right- or left-nested powers
        axiom_samples: Samples for the recorded seminorm-axiom hypothesis
        seed: Seed for that check

    Raises:
        NotCauchy: If the budget ends and the partial sums fail cauchy_check
    """
    ring, target = spec.source, spec.target
    ring.owns(x)
    one = ring.one
    y = one - x
    fy = spec(y)
    axioms = check_seminorm_axioms(spec, axiom_samples, seed)
    hypotheses = [
        HypothesisCheck(
            name="seminorm axioms",
            passed=axioms.ok,
            detail=f"{axiom_samples} samples",
            witness=axioms.failures[0].witness if axioms.failures else None,
        ),
        _hypothesis(
            "1 >= 0 in target",
            target.unit_nonnegative and target.is_nonnegative(target.one),
            target.name,
            target.one,
        ),
        _hypothesis("f(1 - x) < 1", target.lt(fy, target.one), f"f(1 - x) = {fy}", fy),
    ]
    base = dict(
        ring=ring.name,
        x=str(x),
        mode=InversionMode.SEMINORMED,
        direction=_direction(direction),
        budget=budget,
        path_note=continuity_path(spec, x).value,
    )
    if not all(h.passed for h in hypotheses):
        failed = ", ".join(h.name for h in hypotheses if not h.passed)
        return InversionCertificate(
            status=CertificateStatus.HYPOTHESIS_FAILED,
            hypothesis_report=hypotheses,
            detail=f"failed: {failed}",
            **base,
        )

    term, partial = one, one
    partials: List[Element] = []
    residual_elements: List[Element] = []
    sums: List[TraceEntry] = []
    residuals: List[TraceEntry] = []
    for n in range(budget):
        if n > 0:
            term = step_power(y, term, direction)
            partial = partial + term
        residual = one - _product(x, partial, direction)
        partials.append(partial)
        residual_elements.append(residual)
        sums.append(TraceEntry(n=n, value=str(partial)))
        residuals.append(TraceEntry(n=n, value=str(spec(residual))))
        logger.debug("seminormed step %d: u=%s f(r)=%s", n, partial, spec(residual))
        if residual.is_zero():
            return InversionCertificate(
                status=CertificateStatus.EXACT_INVERSE,
                iterations=n + 1,
                inverse_candidate=str(partial),
                inverse=partial,
                hypothesis_report=hypotheses,
                residual_trace=residuals,
                partial_sums=sums,
                detail=f"1 - x*u = 0 exactly after {n + 1} terms",
                **base,
            )

    if len(partials) >= 2:
        verdict = cauchy_check(spec, partials, windows)
        if not verdict.passed:
            raise NotCauchy(verdict, ring.name)
    entered = [residual_entry(spec, residual_elements, V) for V in windows]
    converged = bool(windows) and all(n is not None for n in entered)
    status = (
        CertificateStatus.CONVERGENT_EVIDENCE if converged else CertificateStatus.BUDGET_EXHAUSTED
    )
    logger.info("seminormed inversion of %s in %s: %s", x, ring.name, status.value)
    return InversionCertificate(
        status=status,
        iterations=len(partials),
        inverse_candidate=str(partial),
        inverse=partial,
        hypothesis_report=hypotheses,
        residual_trace=residuals,
        partial_sums=sums,
        detail=(
            "f(1 - x*u_n) entered every window"
            if converged
            else f"no exact inverse within {budget} terms"
        ),
        **base,
    )


def invert_seminormed_two_sided(
    x: Element,
    spec: SeminormSpec,
    windows: Sequence[BasicOpen],
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> InversionCertificate:
    """Seminormed inversion with both nestings, reconciled as in ``invert_two_sided``.

    Raises:
        DirectionalMismatch: If both reach exact inverses that differ
    """
    right = invert_seminormed(x, spec, windows, budget, PowerDirection.RIGHT_NESTED, seed=seed)
    left = invert_seminormed(x, spec, windows, budget, PowerDirection.LEFT_NESTED, seed=seed)
    return _combine(x, right, left, InversionMode.SEMINORMED)
