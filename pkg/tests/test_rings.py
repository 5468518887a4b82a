"""
Tests for the ring instances, the element grammar and instance construction.
"""

import random
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from OrientedSeries.models.common import CarrierKind, Comparison, OrderKind, ProductKind
from OrientedSeries.models.specs import (
    PairRingSpec,
    ResidueRingSpec,
    StructureConstantAlgebraSpec,
    TruncatedSeriesSpec,
)
from OrientedSeries.rings import (
    INTEGERS,
    RATIONALS,
    SHIPPED_RING_NAMES,
    GrowthExceeded,
    InvalidSpec,
    MixedRings,
    ParseError,
    UnsupportedCarrier,
    WrongArity,
    make_instance,
    ord_valuation,
    ring_from_name,
    spec_from_name,
)
from OrientedSeries.rings.polynomials import PolynomialRing

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


class TestRingNames(unittest.TestCase):
    """Selection strings and specs."""

    def test_every_shipped_name_builds(self):
        for name in SHIPPED_RING_NAMES:
            ring = ring_from_name(name)
            self.assertTrue(ring.name)

    def test_spec_from_name(self):
        self.assertEqual(
            spec_from_name("pair:rat,lex,dual"),
            PairRingSpec(base=CarrierKind.RATIONALS, order=OrderKind.LEXICOGRAPHIC, product=ProductKind.DUAL),
        )
        self.assertEqual(spec_from_name("series:8"), TruncatedSeriesSpec(precision=8))
        self.assertEqual(spec_from_name("padic:5,4"), ResidueRingSpec(prime=5, exponent=4))

    def test_unknown_names(self):
        for name in ("reals", "poly:rat", "pair:rat,antilex,dual", "series:x", "algebra:octonions"):
            with self.assertRaises(InvalidSpec):
                ring_from_name(name)

    def test_residue_modulus_must_be_prime_power(self):
        with self.assertRaises(InvalidSpec):
            make_instance(ResidueRingSpec(prime=6, exponent=2))

    def test_inline_algebra_requires_identity(self):
        broken = StructureConstantAlgebraSpec(
            rank=2,
            constants=[[[0, 1], [0, 1]], [[0, 1], [0, 0]]],
        )
        with self.assertRaises(InvalidSpec):
            make_instance(broken)

    def test_inline_algebra_from_config(self):
        spec = StructureConstantAlgebraSpec(
            rank=2,
            constants=[[[1, 0], [0, 1]], [[0, 1], ["-1", 0]]],
            name="gaussian",
        )
        ring = ring_from_name("algebra:inline", spec)
        i = ring.basis(1)
        self.assertEqual(i * i, -ring.one)
        self.assertEqual(ring.name, "algebra:gaussian")


class TestGrammar(unittest.TestCase):
    """Parsing and rendering literals."""

    def test_round_trips_of_canonical_forms(self):
        cases = {
            "integers": "-42",
            "rationals": "-3/7",
            "poly:rat,lex": "[1,0,-1/2]",
            "pair:rat,lex,dual": "(1,-1)",
            "series:8": "[1,1,1]",
            "padic:5,4": "156",
            "algebra:nonassoc3": "{0,1,0}",
        }
        for name, text in cases.items():
            ring = ring_from_name(name)
            self.assertEqual(str(ring.parse(text)), text)

    def test_canonicalization(self):
        self.assertEqual(str(RATIONALS.parse("4/6")), "2/3")
        self.assertEqual(str(ring_from_name("poly:int,lex").parse("[1,2,0,0]")), "[1,2]")
        self.assertEqual(str(ring_from_name("padic:5,4").parse("-4")), "621")
        self.assertEqual(str(ring_from_name("series:4").parse("[1,2,3,4,5,6]")), "[1,2,3,4]")

    def test_bare_scalar_is_multiple_of_one(self):
        self.assertEqual(ring_from_name("pair:rat,lex,dual").parse("2"), ring_from_name("pair:rat,lex,dual").element((2, 0)))
        pairs = ring_from_name("pair:rat,componentwise,componentwise")
        self.assertEqual(pairs.parse("2"), pairs.element((2, 2)))

    def test_parse_errors_carry_position(self):
        with self.assertRaises(ParseError) as ctx:
            RATIONALS.parse("1/0")
        self.assertEqual(ctx.exception.position, 2)
        with self.assertRaises(ParseError):
            RATIONALS.parse("1 2")
        with self.assertRaises(ParseError):
            INTEGERS.parse("1/2")
        with self.assertRaises(ParseError):
            ring_from_name("pair:rat,lex,dual").parse("[1,2]")

    def test_wrong_arity(self):
        with self.assertRaises(WrongArity) as ctx:
            ring_from_name("pair:rat,lex,dual").parse("(1,2,3)")
        self.assertEqual(ctx.exception.expected, 2)
        self.assertEqual(ctx.exception.found, 3)


class TestCarriers(unittest.TestCase):
    """Arithmetic and order on specific carriers."""

    def test_mixed_rings(self):
        with self.assertRaises(MixedRings):
            INTEGERS.one + RATIONALS.one

    def test_dual_numbers(self):
        ring = ring_from_name("pair:rat,lex,dual")
        epsilon = ring.element((0, 1))
        self.assertTrue((epsilon * epsilon).is_zero())
        self.assertEqual(ring.element((1, -1)) * ring.element((1, 1)), ring.one)

    def test_lex_and_antilex_polynomials(self):
        lex = ring_from_name("poly:rat,lex")
        antilex = ring_from_name("poly:rat,antilex")
        self.assertEqual(lex.compare(lex.indeterminate, lex.one), Comparison.GREATER)
        self.assertEqual(antilex.compare(antilex.indeterminate, antilex.one), Comparison.LESS)
        self.assertTrue(antilex.is_positive(antilex.indeterminate))

    def test_componentwise_pairs_are_partial(self):
        ring = ring_from_name("pair:rat,componentwise,componentwise")
        self.assertEqual(ring.compare(ring.element((1, 0)), ring.element((0, 1))), Comparison.INCOMPARABLE)

    def test_growth_guard(self):
        ring = PolynomialRing(RATIONALS, OrderKind.LEXICOGRAPHIC, max_degree_guard=4)
        X = ring.indeterminate
        square = X * X
        with self.assertRaises(GrowthExceeded) as ctx:
            square * square * X
        self.assertEqual(ctx.exception.guard, 4)

    def test_series_truncation(self):
        ring = ring_from_name("series:8")
        X = ring.indeterminate
        self.assertEqual(ring.element([0] * 4 + [1]) * ring.element([0] * 4 + [1]), ring.zero)
        self.assertEqual((ring.one - X) * ring.element([1] * 8), ring.one)

    def test_residue_from_fraction(self):
        ring = ring_from_name("padic:5,4")
        half = ring.from_fraction(Fraction(1, 2))
        self.assertEqual(half * ring.from_int(2), ring.one)
        with self.assertRaises(UnsupportedCarrier):
            ring.from_fraction(Fraction(1, 5))

    def test_integers_not_divisible(self):
        with self.assertRaises(UnsupportedCarrier):
            INTEGERS.from_fraction(Fraction(1, 2))

    def test_ord_valuation(self):
        series = ring_from_name("series:8")
        residues = ring_from_name("padic:5,4")
        self.assertEqual(ord_valuation(series.parse("[0,0,3]")), 2)
        self.assertEqual(ord_valuation(series.zero), 8)
        self.assertEqual(ord_valuation(residues.from_int(50)), 2)
        self.assertEqual(ord_valuation(residues.zero), 4)
        with self.assertRaises(UnsupportedCarrier):
            ord_valuation(RATIONALS.one)

    def test_nonassociative_algebra(self):
        ring = ring_from_name("algebra:nonassoc3")
        a, b = ring.basis(1), ring.basis(2)
        self.assertEqual(a * a, b)
        self.assertEqual(a * b, ring.one)
        self.assertTrue((b * a).is_zero())
        self.assertNotEqual((a * a) * a, a * (a * a))


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_ring_laws(p, q, r):
    x, y, z = RATIONALS.element(p), RATIONALS.element(q), RATIONALS.element(r)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + (-x) == RATIONALS.zero


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_order_translation_invariant(p, q, r):
    x, y, z = RATIONALS.element(p), RATIONALS.element(q), RATIONALS.element(r)
    assert RATIONALS.compare(x + z, y + z) is RATIONALS.compare(x, y)


@settings(max_examples=100, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_integer_comparison_matches_python(m, n):
    expected = Comparison.EQUAL if m == n else Comparison.LESS if m < n else Comparison.GREATER
    assert INTEGERS.compare(INTEGERS.element(m), INTEGERS.element(n)) is expected


@settings(max_examples=100, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=8))
def test_series_literals_reparse(coefficients):
    ring = ring_from_name("series:8")
    x = ring.element(coefficients)
    assert ring.parse(str(x)) == x


@pytest.mark.parametrize("name", SHIPPED_RING_NAMES)
def test_multiple_is_repeated_addition(name):
    ring = ring_from_name(name)
    x = ring.one
    assert ring.multiple(x, 5) == x + x + x + x + x
    assert ring.multiple(x, -2) == -(x + x)


@pytest.mark.parametrize("name, cap", [("series:8", 8), ("padic:5,4", 4)])
def test_valuation_of_a_product(name, cap):
    ring = ring_from_name(name)
    rng = random.Random(17)
    for i in range(1000):
        x = ring.sample_small(rng, i % 3)
        y = ring.sample(rng) if i % 2 else ring.sample_small(rng, 1)
        assert ord_valuation(x * y) >= min(cap, ord_valuation(x) + ord_valuation(y))
