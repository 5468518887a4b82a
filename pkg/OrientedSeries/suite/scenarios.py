"""
Named, deterministic scenarios covering the worked examples, the remarks on
necessity and optimality of the hypotheses, and the two inversion theorems.

Every scenario owns its ring instances and seeds, so scenarios can run
concurrently and rerunning one yields an identical result.
"""

import asyncio
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from ..core.axioms import check_order_compatibility
from ..core.powers import oriented_power
from ..inversion.engine import invert_ordered, invert_seminormed, invert_seminormed_two_sided, invert_two_sided
from ..inversion.witness import archimedean_witness_search, dyadic_family, inf_power_zero_check
from ..models.certificate import CertificateStatus, InversionCertificate
from ..models.common import OrderKind, PowerDirection, ProductKind
from ..models.scenario import ScenarioResult, ScenarioVerdict
from ..rings.base import AlgebraError, Element
from ..rings.factory import ring_from_name
from ..rings.pairs import PairRing
from ..rings.scalars import RATIONALS
from ..topology.balls import NotDefinite, dyadic_windows, hausdorff_witness
from ..topology.convergence import separation_witness, sup_limit_check
from ..topology.interval import opens_containing
from ..topology.seminorm import make_seminorm

logger = logging.getLogger(__name__)


class UnknownScenario(AlgebraError):
    """Exception raised when a scenario id is not registered."""

    def __init__(self, scenario_id: str):
        self.scenario_id = scenario_id
        super().__init__(f"unknown scenario {scenario_id!r}; expected one of {', '.join(SCENARIOS)}")


@dataclass
class Evidence:
    """Mutable collector a scenario body fills in."""

    checks: Dict[str, bool] = field(default_factory=dict)
    artifacts: Dict[str, str] = field(default_factory=dict)
    certificates: List[InversionCertificate] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def check(self, name: str, ok: bool) -> bool:
        self.checks[name] = bool(ok)
        return bool(ok)

    def certificate(self, name: str, certificate: InversionCertificate) -> InversionCertificate:
        self.certificates.append(certificate.for_report())
        self.artifacts[f"{name}.status"] = certificate.status.value
        if certificate.inverse_candidate is not None:
            self.artifacts[f"{name}.candidate"] = certificate.inverse_candidate
        return certificate


@dataclass(frozen=True)
class Scenario:
    scenario_id: str
    expected: ScenarioVerdict
    summary: str
    body: Callable[[Evidence], None]


SCENARIOS: Dict[str, Scenario] = {}


def scenario(scenario_id: str, expected: ScenarioVerdict, summary: str):
    """Register a scenario body under ``scenario_id``."""

    def register(body: Callable[[Evidence], None]) -> Callable[[Evidence], None]:
        SCENARIOS[scenario_id] = Scenario(scenario_id, expected, summary, body)
        return body

    return register


def linear_solution(x: Element, target: Element) -> Optional[Tuple[Fraction, ...]]:
    """Solve x·y = target for a pair y, or return None when no y exists.

    Right multiplication by x is linear on the two coordinates, so the
    question is a 2×2 linear system, decided exactly by sympy.
    """
    ring = x.ring
    basis = [ring.element((1, 0)), ring.element((0, 1))]
    columns = [[sympy.Rational(str(c)) for c in (x * e).payload] for e in basis]
    matrix = sympy.Matrix(columns).T
    rhs = sympy.Matrix([sympy.Rational(str(c)) for c in target.payload])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return tuple(Fraction(int(v.p), int(v.q)) for v in solution)


def _in_unit_interval(x: Element, top: Element) -> bool:
    ring = x.ring
    return ring.is_positive(x) and ring.le(x, top)


@scenario(
    "example-lex-interval",
    ScenarioVerdict.PASS,
    "lex rational polynomials: ]0,1] holds only constants and those invert",
)
def _example_lex_interval(evidence: Evidence) -> None:
    ring = ring_from_name("poly:rat,lex")
    one, X = ring.one, ring.indeterminate
    rng = random.Random(0)
    members = [x for x in (ring.sample(rng) for _ in range(2000)) if _in_unit_interval(x, one)]
    evidence.artifacts["sampled_members"] = str(len(members))
    evidence.check("sampled members are constants", all(ring.degree(x) == 0 for x in members))

    nonconstant = [X, X - ring.from_int(5), ring.from_fraction(Fraction(1, 100)) * X * X]
    evidence.check(
        "nonconstant positives exceed 1",
        all(ring.is_positive(p) and not ring.le(p, one) for p in nonconstant),
    )

    family = dyadic_family(ring, 8)
    for q in ("1", "1/2", "1/3", "3/4", "1/7"):
        x = ring.from_fraction(Fraction(q))
        search = archimedean_witness_search(x)
        evidence.artifacts[f"witness[{q}]"] = search.witness or search.outcome.value
        certificate = evidence.certificate(
            f"invert[{q}]", invert_ordered(x, search.element, comparison_family=family)
        )
        evidence.check(f"inverts {q}", search.found and certificate.succeeded)


@scenario(
    "remark-q2-lex",
    ScenarioVerdict.FINDING,
    "lex pairs: (0,1/2) in ]0,1] is not invertible and (0,n) has no least upper bound",
)
def _remark_q2_lex(evidence: Evidence) -> None:
    for product in (ProductKind.DUAL, ProductKind.COMPONENTWISE):
        ring = PairRing(RATIONALS, OrderKind.LEXICOGRAPHIC, product)
        tag = product.value
        x = ring.element((0, Fraction(1, 2)))
        top = ring.element((1, 1))
        evidence.check(f"{tag}: x in ]0,(1,1)]", _in_unit_interval(x, top))
        evidence.check(f"{tag}: no y with x*y = 1", linear_solution(x, ring.one) is None)
        evidence.artifacts[f"{tag}.unit"] = str(ring.one)

        if product is ProductKind.COMPONENTWISE:
            report = check_order_compatibility(ring, 1000, 0)
            closed = report.check("cone-closed-under-product")
            p, q = ring.element((0, 1)), ring.element((1, -1))
            evidence.check(
                f"{tag}: cone not closed under products",
                not closed.passed and not ring.is_nonnegative(p * q),
            )
            evidence.artifacts[f"{tag}.cone_witness"] = f"{p} * {q} = {p * q}"

    ring = PairRing(RATIONALS, OrderKind.LEXICOGRAPHIC, ProductKind.DUAL)
    prefix = [ring.element((0, n)) for n in range(32)]
    rng = random.Random(0)
    refuted = 0
    for _ in range(100):
        bound = ring.element((Fraction(rng.randint(1, 50), rng.randint(1, 9)), rng.randint(-20, 20)))
        smaller = ring.element((bound.payload[0] / 2, bound.payload[1]))
        # (a/2, b) < (a, b) and a/2 > 0 keeps it above every (0, n)
        if all(ring.le(u, smaller) for u in prefix) and ring.lt(smaller, bound):
            refuted += 1
    evidence.artifacts["upper_bounds_refuted"] = f"{refuted}/100"
    evidence.check("every sampled upper bound has a smaller one", refuted == 100)
    evidence.check("(1,0) bounds the prefix", all(ring.le(u, ring.element((1, 0))) for u in prefix))
    evidence.notes.append(
        "lex order on Q^2 is not monotone sigma-complete here: bounded increasing "
        "(0,n) has no least upper bound and (0,1/2) has no inverse"
    )
    evidence.notes.append(
        "the remark's sentence about a sup-almost-inverse of (0,1/2) could not be "
        "matched by any bounded search; recorded without choosing an intent"
    )
    evidence.notes.append("lex order with the componentwise product is not a partially ordered ring")


@scenario(
    "remark-antilex",
    ScenarioVerdict.PASS,
    "antilex rational polynomials: X in ]0,1] has no upper-bound witness",
)
def _remark_antilex(evidence: Evidence) -> None:
    ring = ring_from_name("poly:rat,antilex")
    X, one = ring.indeterminate, ring.one
    evidence.check("X in ]0,1]", _in_unit_interval(X, one))

    search = archimedean_witness_search(X, budget=2**20)
    evidence.artifacts["witness_search"] = search.outcome.value
    evidence.artifacts["witness_tries"] = str(len(search.tried))
    evidence.check("witness search finds nothing", not search.found)

    # X·y has zero constant term for every basis monomial, hence for every y
    monomials = [oriented_power(X, k, PowerDirection.RIGHT_NESTED) for k in range(ring.max_degree_guard)]
    evidence.check(
        "X*y - 1 has constant coefficient -1",
        all((X * m - one).payload[0] == -1 for m in monomials),
    )
    evidence.artifacts["certificate"] = "constant coefficient of X*y - 1 is -1 < 0 for every y"

    certificate = evidence.certificate("invert", invert_ordered(X))
    evidence.check("inversion reports a failed hypothesis", certificate.status is CertificateStatus.HYPOTHESIS_FAILED)


@scenario(
    "remark-componentwise",
    ScenarioVerdict.PASS,
    "componentwise pairs: (1,0) in ]0,1] is a fixed point, so inf x^n is not 0",
)
def _remark_componentwise(evidence: Evidence) -> None:
    ring = ring_from_name("pair:rat,componentwise,componentwise")
    x = ring.element((1, 0))
    evidence.check("x in ]0,1]", _in_unit_interval(x, ring.one))
    evidence.check("no y with x*y = 1", linear_solution(x, ring.one) is None)

    family = dyadic_family(ring, 8)
    verdict = inf_power_zero_check(x, PowerDirection.RIGHT_NESTED, family)
    evidence.artifacts["fixed_point"] = verdict.fixed_point or "none"
    evidence.check("powers of (1,0) fix (1,0)", not verdict.passed and verdict.fixed_point == str(x))

    half = ring.element((1, Fraction(1, 2)))
    bounded = inf_power_zero_check(half, PowerDirection.RIGHT_NESTED, family)
    evidence.artifacts["fixed_point[(1,1/2)]"] = bounded.fixed_point or "none"
    evidence.check("powers of (1,1/2) settle on the fixed point (1,0)", bounded.fixed_point == str(x))


def _padic_run(evidence: Evidence) -> bool:
    ring = ring_from_name("padic:5,4")
    spec = make_seminorm("padic", ring)
    x = ring.parse("-4")
    certificate = evidence.certificate(
        "padic", invert_seminormed(x, spec, dyadic_windows(RATIONALS, 8))
    )
    return (
        certificate.status is CertificateStatus.EXACT_INVERSE
        and certificate.iterations == 4
        and certificate.inverse == ring.from_int(156)
        and x * certificate.inverse == ring.one
    )


@scenario(
    "theorem2-padic",
    ScenarioVerdict.PASS,
    "residues mod 5^4: -4 inverts to 156 under the 5-adic norm",
)
def _theorem2_padic(evidence: Evidence) -> None:
    evidence.check("inverse 156 in 4 terms", _padic_run(evidence))


@scenario(
    "theorem2-series",
    ScenarioVerdict.PASS,
    "series mod X^8: 1 - X inverts under 2^-ord; X fails f(1 - x) < 1",
)
def _theorem2_series(evidence: Evidence) -> None:
    ring = ring_from_name("series:8")
    spec = make_seminorm("ord2", ring)
    windows = dyadic_windows(RATIONALS, 8)
    X = ring.indeterminate
    x = ring.one - X
    certificate = evidence.certificate("one-minus-X", invert_seminormed(x, spec, windows))
    evidence.check(
        "inverse sum of X^k in 8 terms",
        certificate.status is CertificateStatus.EXACT_INVERSE
        and certificate.iterations == 8
        and certificate.inverse == ring.element([1] * 8),
    )
    failed = evidence.certificate("X", invert_seminormed(X, spec, windows))
    evidence.check("X fails the hypothesis", failed.status is CertificateStatus.HYPOTHESIS_FAILED)


@scenario(
    "optimality-z",
    ScenarioVerdict.PASS,
    "integers: 1 is the only invertible element of ]0,2]",
)
def _optimality_z(evidence: Evidence) -> None:
    ring = ring_from_name("integers")
    one, two = ring.one, ring.from_int(2)
    unit = evidence.certificate("invert[1]", invert_ordered(one, one))
    evidence.check("1 inverts to 1", unit.status is CertificateStatus.EXACT_INVERSE and unit.inverse == one)

    for c in (1, 2, 3):
        certificate = evidence.certificate(f"invert[2,c={c}]", invert_ordered(two, ring.from_int(c)))
        evidence.check(f"2 has no exact inverse (c={c})", certificate.status is not CertificateStatus.EXACT_INVERSE)

    s = sympy.Symbol("s")
    (solution,) = sympy.linsolve([2 * s - 1], s)
    value = solution[0]
    evidence.artifacts["divisibility"] = f"2*s = 1 forces s = {value}, not an integer"
    evidence.check("2*s = 1 has no integer solution", not value.is_integer)


@scenario(
    "oriented-asymmetry",
    ScenarioVerdict.PASS,
    "nonassociative algebra: a^(->3) = 1 while a^(<-3) = 0",
)
def _oriented_asymmetry(evidence: Evidence) -> None:
    ring = ring_from_name("algebra:nonassoc3")
    a = ring.basis(1)
    right = oriented_power(a, 3, PowerDirection.RIGHT_NESTED)
    left = oriented_power(a, 3, PowerDirection.LEFT_NESTED)
    evidence.artifacts["right"] = str(right)
    evidence.artifacts["left"] = str(left)
    evidence.check("right-nested cube is 1", right == ring.one)
    evidence.check("left-nested cube is 0", left.is_zero())


@scenario(
    "corollary-dual-two-sided",
    ScenarioVerdict.PASS,
    "dual numbers: (1,-1) has two-sided inverse (1,1) with witness (2,0)",
)
def _corollary_dual(evidence: Evidence) -> None:
    ring = ring_from_name("pair:rat,lex,dual")
    x, c = ring.element((1, -1)), ring.element((2, 0))
    certificate = evidence.certificate("two-sided", invert_two_sided(x, c, c))
    evidence.check(
        "two-sided inverse (1,1) in 2 terms",
        certificate.status is CertificateStatus.EXACT_INVERSE
        and certificate.iterations == 2
        and certificate.inverse == ring.element((1, 1)),
    )


@scenario(
    "theorem1-convergence",
    ScenarioVerdict.PASS,
    "rationals: 1/2 with witness 2 converges; budget 4 is exhausted",
)
def _theorem1_convergence(evidence: Evidence) -> None:
    ring = ring_from_name("rationals")
    x, c = ring.from_fraction(Fraction(1, 2)), ring.from_int(2)
    family = dyadic_family(ring, 16)
    long_run = evidence.certificate("budget-32", invert_ordered(x, c, budget=32, comparison_family=family))
    evidence.check(
        "convergent evidence with s = 2 - 2^-31",
        long_run.status is CertificateStatus.CONVERGENT_EVIDENCE
        and long_run.inverse == ring.from_fraction(2 - Fraction(1, 2**31)),
    )
    short_run = evidence.certificate("budget-4", invert_ordered(x, c, budget=4, comparison_family=family))
    evidence.check("budget 4 exhausted", short_run.status is CertificateStatus.BUDGET_EXHAUSTED)


@scenario(
    "lemma-sup-limit",
    ScenarioVerdict.PASS,
    "rationals: 1 - 2^-n converges to its supremum 1 and to nothing else",
)
def _lemma_sup_limit(evidence: Evidence) -> None:
    ring = ring_from_name("rationals")
    one = ring.one
    u = [one - ring.from_fraction(Fraction(1, 2**n)) for n in range(64)]
    verdict = sup_limit_check(u, one, opens_containing(ring, one, 100, seed=0))
    evidence.artifacts["sup_limit"] = "pass" if verdict.passed else f"fail at {verdict.failing_opens}"
    evidence.check("every open around 1 is eventually entered", verdict.passed)

    rng = random.Random(0)
    others = [p for p in (ring.sample(rng) for _ in range(150)) if p != one][:100]
    separated = sum(1 for other in others if separation_witness(one, other, u).found)
    evidence.artifacts["separated"] = f"{separated}/{len(others)}"
    evidence.check("every sampled non-limit is separated", separated == len(others))


@scenario(
    "hausdorff-ord2",
    ScenarioVerdict.PASS,
    "series mod X^8: 2^-ord separates points; the constant-term seminorm cannot",
)
def _hausdorff_ord2(evidence: Evidence) -> None:
    ring = ring_from_name("series:8")
    spec = make_seminorm("ord2", ring)
    rng = random.Random(0)
    pairs = []
    while len(pairs) < 100:
        a, b = ring.sample(rng), ring.sample(rng)
        if a != b:
            pairs.append((a, b))
    separated = 0
    for i, (a, b) in enumerate(pairs):
        witness = hausdorff_witness(spec, a, b, samples=200, seed=i, axiom_samples=200)
        if witness.certified and witness.shared_members == 0:
            separated += 1
    evidence.artifacts["separated"] = f"{separated}/100"
    evidence.check("every sampled pair is separated", separated == 100)

    const_term = make_seminorm("const-term", ring)
    try:
        hausdorff_witness(const_term, ring.zero, ring.indeterminate, samples=10)
        evidence.check("const-term reports NotDefinite", False)
    except NotDefinite as e:
        evidence.artifacts["not_definite"] = ", ".join(e.witness)
        evidence.check("const-term reports NotDefinite", True)


@scenario(
    "corollary-series-two-sided",
    ScenarioVerdict.PASS,
    "series mod X^8: 1 - X has the same inverse from both nestings in both modes",
)
def _corollary_series(evidence: Evidence) -> None:
    ring = ring_from_name("series:8")
    x = ring.one - ring.indeterminate
    expected = ring.element([1] * 8)
    ordered = evidence.certificate("ordered", invert_two_sided(x, ring.from_int(2), ring.from_int(2)))
    evidence.check(
        "ordered two-sided inverse",
        ordered.status is CertificateStatus.EXACT_INVERSE and ordered.inverse == expected,
    )
    spec = make_seminorm("ord2", ring)
    seminormed = evidence.certificate(
        "seminormed", invert_seminormed_two_sided(x, spec, dyadic_windows(RATIONALS, 8))
    )
    evidence.check(
        "seminormed two-sided inverse",
        seminormed.status is CertificateStatus.EXACT_INVERSE and seminormed.inverse == expected,
    )


def run_scenario(scenario_id: str) -> ScenarioResult:
    """Execute one scenario and compare its outcome to the expected verdict.

    Raises:
        UnknownScenario: If ``scenario_id`` is not registered
    """
    entry = SCENARIOS.get(scenario_id)
    if entry is None:
        raise UnknownScenario(scenario_id)
    evidence = Evidence()
    try:
        entry.body(evidence)
    except AlgebraError as e:
        logger.warning("scenario %s raised %s", scenario_id, e)
        evidence.check(f"raised {type(e).__name__}", False)
        evidence.notes.append(str(e))

    failed = [name for name, ok in evidence.checks.items() if not ok]
    observed = ScenarioVerdict.FAIL if failed else entry.expected
    for name in failed:
        evidence.notes.append(f"check failed: {name}")
    logger.info("scenario %s: %s", scenario_id, observed.value)
    return ScenarioResult(
        scenario_id=scenario_id,
        expected=entry.expected,
        observed=observed,
        summary=entry.summary,
        artifacts=evidence.artifacts,
        certificates=evidence.certificates,
        notes=evidence.notes,
    )


def _resolve(ids: Optional[Iterable[str]]) -> List[str]:
    selected = list(ids) if ids else list(SCENARIOS)
    for scenario_id in selected:
        if scenario_id not in SCENARIOS:
            raise UnknownScenario(scenario_id)
    return selected


async def run_suite_async(ids: Optional[Sequence[str]] = None) -> List[ScenarioResult]:
    """Run scenarios concurrently in worker threads, in the requested order.

    Raises:
        UnknownScenario: Before anything runs, if any id is unknown
    """
    selected = _resolve(ids)
    return list(await asyncio.gather(*(asyncio.to_thread(run_scenario, i) for i in selected)))


def run_suite(ids: Optional[Sequence[str]] = None) -> List[ScenarioResult]:
    """Synchronous wrapper around ``run_suite_async``."""
    return asyncio.run(run_suite_async(ids))
