"""
Test fixtures for OrientedSeries.

Reusable pytest fixtures that build the shipped ring instances, seminorms
and comparison families used across the test suite.
"""

from typing import Callable, Iterator, List

import pytest

from ..inversion.witness import dyadic_family
from ..rings.base import Element, RingInstance
from ..rings.factory import SHIPPED_RING_NAMES, ring_from_name
from ..rings.scalars import RATIONALS
from ..topology.balls import dyadic_windows
from ..topology.interval import BasicOpen
from ..topology.seminorm import SeminormSpec, make_seminorm


@pytest.fixture
def ring_named() -> Callable[[str], RingInstance]:
    """Factory fixture: ``ring_named("series:8")``."""
    return ring_from_name


@pytest.fixture
def parse_all() -> Callable[[RingInstance, List[str]], List[Element]]:
    """Parse several literals in one ring."""

    def parse(ring: RingInstance, literals: List[str]) -> List[Element]:
        return [ring.parse(text) for text in literals]

    return parse


@pytest.fixture(params=SHIPPED_RING_NAMES)
def shipped_ring(request) -> Iterator[RingInstance]:
    """Every shipped instance, one test per instance."""
    yield ring_from_name(request.param)


@pytest.fixture
def series8() -> RingInstance:
    return ring_from_name("series:8")


@pytest.fixture
def residues625() -> RingInstance:
    return ring_from_name("padic:5,4")


@pytest.fixture
def dual_pairs() -> RingInstance:
    return ring_from_name("pair:rat,lex,dual")


@pytest.fixture
def ord2(series8) -> SeminormSpec:
    return make_seminorm("ord2", series8)


@pytest.fixture
def dyadic_windows8() -> List[BasicOpen]:
    """Windows ]−2^{-j}, 2^{-j}[ in the rationals, j <= 8."""
    return dyadic_windows(RATIONALS, 8)


@pytest.fixture
def rational_family16() -> List[Element]:
    """Comparison family {2^{-k} : k <= 16} in the rationals."""
    return dyadic_family(RATIONALS, 16)
