"""
The ``ogsr`` command line.

Subcommands:
    axioms    sampled ring, order and seminorm axiom suites
    invert    ordered or seminormed geometric-series inversion
    topology  queries on basic opens and convergent sequences
    suite     the named scenario corpus

Exit codes: 0 success, 1 failed hypothesis/axiom/verdict or scenario
deviation, 2 configuration or query error, 3 inversion budget exhausted.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .config import Command, ConfigError, DirectionChoice, RunConfig, apply_overrides, load_config
from .core.axioms import check_order_compatibility, check_ring_axioms
from .inversion.engine import (
    DirectionalMismatch,
    InvariantViolation,
    NotCauchy,
    invert_ordered,
    invert_seminormed,
    invert_seminormed_two_sided,
    invert_two_sided,
)
from .inversion.witness import dyadic_family
from .models.certificate import CertificateStatus, InversionCertificate
from .models.common import PowerDirection
from .rings.base import (
    AlgebraError,
    Element,
    InvalidSpec,
    MixedRings,
    ParseError,
    RingInstance,
    UnsupportedCarrier,
    WrongArity,
)
from .rings.factory import ring_from_name
from .suite.scenarios import UnknownScenario, run_suite
from .topology.balls import dyadic_windows
from .topology.continuity import product_continuity_witness, split_neighborhood
from .topology.convergence import separation_witness, sup_limit_check
from .topology.interval import (
    BasicOpen,
    NotMember,
    PreconditionFailed,
    UnsupportedRing,
    contains,
    intersect,
    negate,
    opens_containing,
    parse_open,
    render_open,
    translate,
)
from .topology.seminorm import check_seminorm_axioms, make_seminorm
from .utils.converters import to_report_lines, write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3

STATUS_EXIT = {
    CertificateStatus.EXACT_INVERSE: EXIT_OK,
    CertificateStatus.CONVERGENT_EVIDENCE: EXIT_OK,
    CertificateStatus.HYPOTHESIS_FAILED: EXIT_FAILED,
    CertificateStatus.BUDGET_EXHAUSTED: EXIT_BUDGET,
}

Blocks = List[List[str]]


def _emit(config: RunConfig, blocks: Blocks) -> None:
    for i, block in enumerate(blocks):
        if i:
            print()
        print("\n".join(block))
    if config.report:
        write_report(config.report, blocks)


def _ring(config: RunConfig) -> RingInstance:
    config.require("ring")
    return ring_from_name(config.ring, config.algebra)


def _parse(ring: RingInstance, text: Optional[str], field: str) -> Element:
    if text is None:
        raise ConfigError(f"{field} is required for this query", field)
    return ring.parse(text)


def cmd_axioms(config: RunConfig) -> int:
    """Run the ring, order and (if selected) seminorm suites; 0 iff all pass."""
    ring = _ring(config)
    reports = [
        check_ring_axioms(ring, config.samples, config.seed),
        check_order_compatibility(ring, config.samples, config.seed),
    ]
    if config.seminorm:
        reports.append(check_seminorm_axioms(make_seminorm(config.seminorm, ring), config.samples, config.seed))
    blocks = [to_report_lines(report, f"axioms.{i}") for i, report in enumerate(reports)]
    failed = [report.subject for report in reports if not report.ok]
    blocks.append([f"result: {'fail' if failed else 'pass'}"])
    _emit(config, blocks)
    return EXIT_FAILED if failed else EXIT_OK


def _invert(config: RunConfig, ring: RingInstance, x: Element) -> InversionCertificate:
    if config.seminorm:
        spec = make_seminorm(config.seminorm, ring)
        windows = dyadic_windows(spec.target, config.window_depth)
        if config.direction is DirectionChoice.BOTH:
            return invert_seminormed_two_sided(x, spec, windows, config.budget, config.seed)
        direction = (
            PowerDirection.LEFT_NESTED
            if config.direction is DirectionChoice.LEFT
            else PowerDirection.RIGHT_NESTED
        )
        return invert_seminormed(x, spec, windows, config.budget, direction, seed=config.seed)

    c = ring.parse(config.witness) if config.witness else None
    family = (
        [ring.parse(text) for text in config.family]
        if config.family
        else dyadic_family(ring, config.family_depth)
    )
    if config.direction is DirectionChoice.BOTH:
        return invert_two_sided(x, c, c, config.budget, family)
    direction = (
        PowerDirection.LEFT_NESTED if config.direction is DirectionChoice.LEFT else PowerDirection.RIGHT_NESTED
    )
    return invert_ordered(x, c, direction, config.budget, family)


def cmd_invert(config: RunConfig) -> int:
    """Invert x and print the certificate; the exit code follows its status."""
    ring = _ring(config)
    config.require("x")
    x = ring.parse(config.x)
    try:
        certificate = _invert(config, ring, x)
    except (InvariantViolation, NotCauchy, DirectionalMismatch) as e:
        _emit(config, [[f"error: {type(e).__name__}", f"detail: {e}"]])
        return EXIT_FAILED
    _emit(config, [to_report_lines(certificate, "certificate")])
    return STATUS_EXIT[certificate.status]


def _sequence(config: RunConfig, ring: RingInstance) -> List[Element]:
    if config.terms:
        return [ring.parse(text) for text in config.terms]
    if config.sequence == "one-minus-dyadic":
        return [ring.one - ring.from_fraction(Fraction(1, 2**n)) for n in range(config.budget)]
    raise ConfigError("give --term values or --sequence one-minus-dyadic", "sequence")


def _opens(config: RunConfig, ring: RingInstance) -> List[BasicOpen]:
    return [parse_open(ring, text) for text in config.opens]


def _first_open(config: RunConfig, ring: RingInstance) -> BasicOpen:
    opens = _opens(config, ring)
    if not opens:
        raise ConfigError("at least one --open is required for this query", "opens")
    return opens[0]


def _topology_contains(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    V, a = _first_open(config, ring), _parse(ring, config.a, "a")
    return {"open": render_open(V), "point": str(a), "contains": str(contains(V, a)).lower()}


def _topology_translate(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    V, a = _first_open(config, ring), _parse(ring, config.a, "a")
    return {"open": render_open(V), "shift": str(a), "result": render_open(translate(V, a))}


def _topology_negate(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    V = _first_open(config, ring)
    return {"open": render_open(V), "result": render_open(negate(V))}


def _topology_intersect(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    opens = _opens(config, ring)
    if len(opens) != 2:
        raise ConfigError("intersect needs exactly two --open values", "opens")
    return {"result": render_open(intersect(*opens))}


def _topology_sup_limit(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    u = _sequence(config, ring)
    sup = _parse(ring, config.a, "a") if config.a else ring.one
    opens = _opens(config, ring) or opens_containing(ring, sup, 100, config.seed)
    verdict = sup_limit_check(u, sup, opens)
    return {
        "sup": str(sup),
        "prefix_length": str(verdict.prefix_length),
        "opens": str(len(opens)),
        "failing_opens": str(verdict.failing_opens),
        "verdict": "pass" if verdict.passed else "fail",
    }


def _topology_separation(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    u = _sequence(config, ring)
    limit = _parse(ring, config.a, "a") if config.a else ring.one
    witness = separation_witness(limit, _parse(ring, config.b, "b"), u)
    result = {
        "method": witness.method,
        "open": render_open(witness.open) if witness.open is not None else "null",
        "avoided_from": str(witness.avoided_from) if witness.avoided_from is not None else "null",
        "verdict": "pass" if witness.found else "fail",
    }
    result.update({f"evidence.{k}": v for k, v in witness.evidence.items()})
    return result


def _topology_split(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    V = _first_open(config, ring)
    a, b = _parse(ring, config.a, "a"), _parse(ring, config.b, "b")
    first, second = split_neighborhood(V, a, b)
    return {"first": render_open(first), "second": render_open(second)}


def _topology_product(config: RunConfig, ring: RingInstance) -> Dict[str, str]:
    V = _first_open(config, ring)
    a, b = _parse(ring, config.a, "a"), _parse(ring, config.b, "b")
    first, second = product_continuity_witness(V, a, b)
    return {"first": render_open(first), "second": render_open(second)}


# Malformed queries; any other AlgebraError is a failed check.
QUERY_ERRORS = (
    ParseError,
    WrongArity,
    MixedRings,
    InvalidSpec,
    UnsupportedCarrier,
    NotMember,
    PreconditionFailed,
    UnsupportedRing,
)

TOPOLOGY_OPS: Dict[str, Callable[[RunConfig, RingInstance], Dict[str, str]]] = {
    "contains": _topology_contains,
    "translate": _topology_translate,
    "negate": _topology_negate,
    "intersect": _topology_intersect,
    "sup-limit": _topology_sup_limit,
    "separation": _topology_separation,
    "split": _topology_split,
    "product-continuity": _topology_product,
}


def cmd_topology(config: RunConfig) -> int:
    """Answer one topology query.

    Returns 1 when a checked verdict fails or the check itself is refuted
    (e.g. NotIncreasing), and leaves malformed queries to exit 2.
    """
    ring = _ring(config)
    config.require("op")
    handler = TOPOLOGY_OPS.get(config.op)
    if handler is None:
        raise ConfigError(f"unknown operation {config.op!r}; expected one of {', '.join(TOPOLOGY_OPS)}", "op")
    try:
        result = handler(config, ring)
    except QUERY_ERRORS as e:
        raise ConfigError(str(e), "op") from e
    except AlgebraError as e:
        result = {"error": type(e).__name__, "detail": str(e), "verdict": "fail"}
    _emit(config, [to_report_lines({"op": config.op, **result}, "topology")])
    return EXIT_FAILED if result.get("verdict") == "fail" else EXIT_OK


def cmd_suite(config: RunConfig) -> int:
    """Run scenarios; 0 iff every observed verdict equals the expected one."""
    try:
        results = run_suite(config.scenario_ids)
    except UnknownScenario as e:
        raise ConfigError(e.message, "scenario_ids") from e
    _emit(config, [to_report_lines(result, result.scenario_id) for result in results])
    deviating = [result.scenario_id for result in results if not result.matches]
    if deviating:
        print(f"deviating scenarios: {', '.join(deviating)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


COMMANDS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.AXIOMS: cmd_axioms,
    Command.INVERT: cmd_invert,
    Command.TOPOLOGY: cmd_topology,
    Command.SUITE: cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--ring", help="ring selection, e.g. rationals, series:8, padic:5,4")
    common.add_argument("--seminorm", help="seminorm name: abs, ord2, padic, const-term")
    common.add_argument("--x", help="element to invert")
    common.add_argument("--witness", help="upper-bound witness c with x*c >= 1")
    common.add_argument("--budget", type=int, help="maximal number of series terms (default 64)")
    common.add_argument("--seed", type=int, help="seed for sampled checks (default 0)")
    common.add_argument("--samples", type=int, help="samples per check (default 1000)")
    common.add_argument("--direction", choices=[d.value for d in DirectionChoice])
    common.add_argument("--family", action="append", help="comparison-family element (repeatable)")
    common.add_argument("--family-depth", type=int, help="size of the default dyadic family")
    common.add_argument("--window-depth", type=int, help="number of dyadic windows")
    common.add_argument("--op", help=f"topology operation: {', '.join(TOPOLOGY_OPS)}")
    common.add_argument("--open", dest="opens", action="append", help="basic open (repeatable)")
    common.add_argument("--a", help="first element argument")
    common.add_argument("--b", help="second element argument")
    common.add_argument("--term", dest="terms", action="append", help="sequence term (repeatable)")
    common.add_argument("--sequence", choices=["one-minus-dyadic"], help="generated sequence")
    common.add_argument("--id", dest="scenario_ids", action="append", help="scenario id (repeatable)")
    common.add_argument("--report", help="also write the report to this path")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")

    parser = argparse.ArgumentParser(
        prog="ogsr", description="Geometric-series inversion in ordered and seminormed rings."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        subparsers.add_parser(command.value, parents=[common])
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    overrides = {
        key: value
        for key, value in vars(args).items()
        if key not in ("config", "verbose")
    }
    try:
        config = apply_overrides(load_config(args.config), overrides)
        return COMMANDS[config.command](config)
    except ConfigError as e:
        print(str(e), file=sys.stderr)
        return EXIT_CONFIG
    except AlgebraError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
