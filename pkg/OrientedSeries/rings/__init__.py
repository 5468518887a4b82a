"""
Exact-arithmetic ring instances.

This package provides the ring/element interface, the shipped carriers, the
element grammar and instance construction from specs or name strings.
"""

from .base import (
    AlgebraError,
    Element,
    GrowthExceeded,
    InvalidSpec,
    MixedRings,
    ParseError,
    RingInstance,
    UnsupportedCarrier,
    WrongArity,
)
from .factory import (
    SHIPPED_RING_NAMES,
    make_instance,
    ring_from_name,
    shipped_instances,
    spec_from_name,
)
from .grammar import parse_element, render_element
from .pairs import PairRing
from .polynomials import PolynomialRing
from .residues import ResidueRing
from .scalars import INTEGERS, RATIONALS, IntegerRing, RationalRing
from .series import TruncatedSeriesRing
from .structure import StructureConstantAlgebra


def ord_valuation(x: Element) -> int:
    """Valuation of a truncated-series or residue element.

    Returns:
        Least k with a nonzero coefficient of X^k for series, largest k <= N
        with p^k dividing the representative for residues; N for zero

    Raises:
        UnsupportedCarrier: For any other carrier
    """
    ring = x.ring
    if isinstance(ring, (TruncatedSeriesRing, ResidueRing)):
        return ring.valuation(x)
    raise UnsupportedCarrier("ord_valuation needs a truncated-series or residue element", ring.name)


__all__ = [
    # Errors
    "AlgebraError",
    "GrowthExceeded",
    "InvalidSpec",
    "MixedRings",
    "ParseError",
    "UnsupportedCarrier",
    "WrongArity",
    # Core types
    "Element",
    "RingInstance",
    # Carriers
    "INTEGERS",
    "RATIONALS",
    "IntegerRing",
    "RationalRing",
    "PolynomialRing",
    "PairRing",
    "TruncatedSeriesRing",
    "ResidueRing",
    "StructureConstantAlgebra",
    # Construction and grammar
    "SHIPPED_RING_NAMES",
    "make_instance",
    "ring_from_name",
    "shipped_instances",
    "spec_from_name",
    "parse_element",
    "render_element",
    "ord_valuation",
]
