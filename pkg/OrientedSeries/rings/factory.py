"""
Instance construction from specs and from compact ring-name strings.
"""

from typing import Dict, List, Optional

from ..models.common import CarrierKind, OrderKind, ProductKind
from ..models.specs import (
    PairRingSpec,
    PolynomialRingSpec,
    ResidueRingSpec,
    RingSpec,
    ScalarRingSpec,
    StructureConstantAlgebraSpec,
    TruncatedSeriesSpec,
)
from .base import Element, InvalidSpec, RingInstance, UnsupportedCarrier
from .pairs import PairRing
from .polynomials import PolynomialRing
from .residues import ResidueRing
from .scalars import INTEGERS, RATIONALS, scalar_ring
from .series import TruncatedSeriesRing
from .structure import ALGEBRA_CATALOG, StructureConstantAlgebra

_BASES: Dict[str, CarrierKind] = {
    "int": CarrierKind.INTEGERS,
    "rat": CarrierKind.RATIONALS,
}
_ORDERS: Dict[str, OrderKind] = {
    "lex": OrderKind.LEXICOGRAPHIC,
    "antilex": OrderKind.ANTILEXICOGRAPHIC,
    "componentwise": OrderKind.COMPONENTWISE,
}
_PRODUCTS: Dict[str, ProductKind] = {
    "componentwise": ProductKind.COMPONENTWISE,
    "dual": ProductKind.DUAL,
}


def make_instance(spec: RingSpec) -> RingInstance:
    """Build a live ring instance from its spec.

    Args:
        spec: Any of the ring spec models

    Returns:
        The ring instance

    Raises:
        InvalidSpec: If the spec is not well-formed
    """
    try:
        if isinstance(spec, ScalarRingSpec):
            return scalar_ring(spec.carrier)
        if isinstance(spec, PolynomialRingSpec):
            return PolynomialRing(scalar_ring(spec.base), spec.order, spec.max_degree_guard)
        if isinstance(spec, PairRingSpec):
            return PairRing(scalar_ring(spec.base), spec.order, spec.product)
        if isinstance(spec, TruncatedSeriesSpec):
            return TruncatedSeriesRing(spec.precision)
        if isinstance(spec, ResidueRingSpec):
            return ResidueRing(spec.prime, spec.exponent)
        if isinstance(spec, StructureConstantAlgebraSpec):
            return StructureConstantAlgebra(spec.rank, spec.constants, spec.unit_index, spec.name)
    except UnsupportedCarrier as e:
        raise InvalidSpec(e.message)
    raise InvalidSpec(f"unknown spec type {type(spec).__name__}")


def _lookup(table: Dict[str, object], token: str, what: str):
    try:
        return table[token]
    except KeyError:
        raise InvalidSpec(f"unknown {what} {token!r}; expected one of {', '.join(table)}")


def _int_arg(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InvalidSpec(f"{what} must be an integer, got {token!r}")


def spec_from_name(
    name: str, inline: Optional[StructureConstantAlgebraSpec] = None
) -> RingSpec:
    """Parse a ring-name string such as ``poly:rat,lex`` or ``padic:5,4``.

    Args:
        name: Ring selection string
        inline: Structure-constant table used by ``algebra:inline``

    Raises:
        InvalidSpec: If the name is unknown or its parameters are malformed
    """
    family, _, rest = name.strip().partition(":")
    args = [token.strip() for token in rest.split(",")] if rest else []

    if family in ("integers", "rationals") and not args:
        carrier = CarrierKind.INTEGERS if family == "integers" else CarrierKind.RATIONALS
        return ScalarRingSpec(carrier=carrier)
    if family == "poly" and len(args) in (2, 3):
        order = _lookup(_ORDERS, args[1], "polynomial order")
        guard = _int_arg(args[2], "degree guard") if len(args) == 3 else 64
        return PolynomialRingSpec(
            base=_lookup(_BASES, args[0], "base"), order=order, max_degree_guard=guard
        )
    if family == "pair" and len(args) == 3:
        return PairRingSpec(
            base=_lookup(_BASES, args[0], "base"),
            order=_lookup(_ORDERS, args[1], "pair order"),
            product=_lookup(_PRODUCTS, args[2], "pair product"),
        )
    if family == "series" and len(args) == 1:
        return TruncatedSeriesSpec(precision=_int_arg(args[0], "precision"))
    if family == "padic" and len(args) == 2:
        return ResidueRingSpec(
            prime=_int_arg(args[0], "prime"), exponent=_int_arg(args[1], "exponent")
        )
    if family == "algebra" and len(args) == 1:
        if args[0] == "inline":
            if inline is None:
                raise InvalidSpec("algebra:inline needs a structure-constant table in the config")
            return inline
        entry = ALGEBRA_CATALOG.get(args[0])
        if entry is None:
            raise InvalidSpec(f"unknown algebra {args[0]!r}; expected one of {', '.join(ALGEBRA_CATALOG)}")
        return StructureConstantAlgebraSpec(name=args[0], **entry)
    raise InvalidSpec(f"unknown ring {name!r}")


def ring_from_name(
    name: str, inline: Optional[StructureConstantAlgebraSpec] = None
) -> RingInstance:
    """Build a ring instance from a selection string.

    Besides the spec model families, ``control:skew-add`` and
    ``control:all-positive`` select the negative-control instances.
    """
    if name.startswith("control:"):
        from ..testing.controls import CONTROLS

        factory = CONTROLS.get(name.partition(":")[2])
        if factory is None:
            raise InvalidSpec(f"unknown control instance {name!r}")
        return factory()
    return make_instance(spec_from_name(name, inline))


def parse_in(ring: RingInstance, literals: List[str]) -> List[Element]:
    return [ring.parse(text) for text in literals]


SHIPPED_RING_NAMES = (
    "integers",
    "rationals",
    "poly:int,lex",
    "poly:rat,lex",
    "poly:int,antilex",
    "poly:rat,antilex",
    "pair:rat,lex,dual",
    "pair:rat,componentwise,componentwise",
    "pair:rat,componentwise,dual",
    "series:8",
    "padic:5,4",
    "algebra:nonassoc3",
)


def shipped_instances() -> List[RingInstance]:
    """Every instance of the shipped catalog."""
    return [ring_from_name(name) for name in SHIPPED_RING_NAMES]


__all__ = [
    "INTEGERS",
    "RATIONALS",
    "SHIPPED_RING_NAMES",
    "make_instance",
    "parse_in",
    "ring_from_name",
    "shipped_instances",
    "spec_from_name",
]
