"""
Tests for order comparison, sampled convexity, oriented powers and the axiom suites.
"""

import pytest

from OrientedSeries.core import (
    MalformedTriple,
    check_order_compatibility,
    check_ring_axioms,
    compare,
    is_convex_sampled,
    oriented_power,
)
from OrientedSeries.models.common import Comparison, PowerDirection
from OrientedSeries.rings import INTEGERS, RATIONALS, SHIPPED_RING_NAMES, MixedRings, ring_from_name
from OrientedSeries.testing.controls import AllPositiveRing, SkewAdditionRing


def test_compare_total_and_partial():
    assert compare(INTEGERS.from_int(3), INTEGERS.from_int(5)) is Comparison.LESS
    pairs = ring_from_name("pair:rat,componentwise,componentwise")
    assert compare(pairs.parse("(1,2)"), pairs.parse("(2,3)")) is Comparison.LESS
    assert compare(pairs.parse("(1,0)"), pairs.parse("(0,1)")) is Comparison.INCOMPARABLE
    assert compare(pairs.parse("(1,0)"), pairs.parse("(1,0)")) is Comparison.EQUAL


def test_compare_mixed_rings():
    with pytest.raises(MixedRings):
        compare(INTEGERS.one, RATIONALS.one)


def test_residue_order_is_trivial():
    ring = ring_from_name("padic:5,4")
    assert compare(ring.from_int(1), ring.from_int(2)) is Comparison.INCOMPARABLE
    assert not ring.unit_nonnegative


def test_convexity_gap_found():
    def member(x):
        return x.payload in (1, 3)

    triples = [(INTEGERS.from_int(1), INTEGERS.from_int(2), INTEGERS.from_int(3))]
    verdict = is_convex_sampled(member, triples)
    assert not verdict.passed
    assert verdict.witness == ["1", "2", "3"]
    assert verdict.evidence["gap"] == "2"


def test_convexity_of_an_interval():
    def member(x):
        return 0 < x.payload < 5

    values = [INTEGERS.from_int(n) for n in range(-2, 8)]
    triples = [(a, b, c) for a in values for b in values for c in values if a.payload <= b.payload <= c.payload]
    assert is_convex_sampled(member, triples).passed


def test_convexity_rejects_non_chains():
    triples = [(INTEGERS.from_int(3), INTEGERS.from_int(2), INTEGERS.from_int(5))]
    with pytest.raises(MalformedTriple) as excinfo:
        is_convex_sampled(lambda x: True, triples)
    assert excinfo.value.index == 0


def test_oriented_powers_differ_in_nonassociative_algebra():
    ring = ring_from_name("algebra:nonassoc3")
    a = ring.basis(1)
    assert oriented_power(a, 3, PowerDirection.RIGHT_NESTED) == ring.one
    assert oriented_power(a, 3, PowerDirection.LEFT_NESTED).is_zero()
    assert oriented_power(a, 0, PowerDirection.LEFT_NESTED) == ring.one


def test_oriented_powers_agree_when_associative():
    ring = ring_from_name("series:8")
    x = ring.parse("[1,2,-1/3]")
    for n in range(6):
        assert oriented_power(x, n, PowerDirection.RIGHT_NESTED) == oriented_power(x, n, PowerDirection.LEFT_NESTED)


def test_negative_exponent():
    with pytest.raises(ValueError):
        oriented_power(RATIONALS.one, -1, PowerDirection.RIGHT_NESTED)


@pytest.mark.parametrize("name", SHIPPED_RING_NAMES)
def test_shipped_rings_pass_ring_axioms(name):
    report = check_ring_axioms(ring_from_name(name), 1000, 0)
    assert report.ok, report.failures


@pytest.mark.parametrize("name", SHIPPED_RING_NAMES)
def test_shipped_rings_pass_order_axioms(name):
    report = check_order_compatibility(ring_from_name(name), 1000, 0)
    assert report.ok, report.failures


def test_nonassociative_algebra_reports_associativity_as_informational():
    report = check_ring_axioms(ring_from_name("algebra:nonassoc3"), 1000, 0)
    check = report.check("multiplicative-associativity")
    assert not check.required
    assert not check.passed
    assert check.witness is not None


def test_skew_addition_control_fails_with_witness():
    report = check_ring_axioms(SkewAdditionRing(), 1000, 0)
    assert not report.ok
    failure = report.check("additive-commutativity")
    assert not failure.passed
    assert len(failure.witness) == 2


def test_all_positive_control_fails_with_witness():
    report = check_order_compatibility(AllPositiveRing(), 1000, 0)
    assert not report.ok
    names = {check.name for check in report.failures}
    assert "proper-cone" in names
    assert "antisymmetry" in names


def test_lex_componentwise_pairs_are_not_an_ordered_ring():
    from OrientedSeries.models.common import OrderKind, ProductKind
    from OrientedSeries.rings import PairRing

    ring = PairRing(RATIONALS, OrderKind.LEXICOGRAPHIC, ProductKind.COMPONENTWISE)
    report = check_order_compatibility(ring, 1000, 0)
    assert not report.check("cone-closed-under-product").passed


def test_reports_are_deterministic():
    ring = ring_from_name("poly:rat,antilex")
    assert check_ring_axioms(ring, 200, 7) == check_ring_axioms(ring, 200, 7)


def test_sample_count_must_be_positive():
    with pytest.raises(ValueError):
        check_ring_axioms(RATIONALS, 0)
