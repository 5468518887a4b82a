"""
Tests for ordered and seminormed series inversion and the hypothesis helpers.
"""

import unittest
from fractions import Fraction

import pytest

from OrientedSeries.inversion import (
    DirectionalMismatch,
    InvariantViolation,
    NotCauchy,
    NotPositive,
    WitnessOutcome,
    archimedean_witness_search,
    dyadic_family,
    inf_power_zero_check,
    invert_ordered,
    invert_seminormed,
    invert_seminormed_two_sided,
    invert_two_sided,
)
from OrientedSeries.inversion.witness import stable_part
from OrientedSeries.models.certificate import (
    CertificateStatus,
    InversionDirection,
    InversionMode,
    WitnessProvenance,
)
from OrientedSeries.models.common import PowerDirection
from OrientedSeries.rings import INTEGERS, RATIONALS, SHIPPED_RING_NAMES, ring_from_name
from OrientedSeries.testing.controls import SkewAdditionRing
from OrientedSeries.topology import dyadic_windows, make_seminorm


def q(value):
    return RATIONALS.from_fraction(Fraction(value))


class TestOrderedInversion(unittest.TestCase):
    """Monotone series under an upper-bound witness."""

    def test_unit_is_its_own_inverse(self):
        cert = invert_ordered(q(1))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.iterations, 1)
        self.assertEqual(cert.inverse_candidate, "1")
        self.assertEqual(cert.witness_provenance, WitnessProvenance.ARCHIMEDEAN_SEARCH)

    def test_half_converges(self):
        cert = invert_ordered(q("1/2"), q(2), budget=32, comparison_family=dyadic_family(RATIONALS, 16))
        self.assertEqual(cert.status, CertificateStatus.CONVERGENT_EVIDENCE)
        self.assertEqual(cert.iterations, 32)
        self.assertEqual(cert.inverse_candidate, "4294967295/2147483648")
        self.assertEqual(cert.witness_provenance, WitnessProvenance.SUPPLIED)
        self.assertEqual(cert.residual_trace[0].value, "1/2")
        self.assertEqual(cert.partial_sums[1].value, "3/2")

    def test_half_without_family_exhausts_budget(self):
        cert = invert_ordered(q("1/2"), q(2), budget=4)
        self.assertEqual(cert.status, CertificateStatus.BUDGET_EXHAUSTED)
        self.assertEqual(cert.iterations, 4)
        self.assertEqual(cert.inverse_candidate, "15/8")
        self.assertFalse(cert.succeeded)

    def test_witness_found_by_doubling(self):
        cert = invert_ordered(q("1/3"), comparison_family=dyadic_family(RATIONALS, 8))
        self.assertEqual(cert.witness_used, "4")
        self.assertEqual(cert.status, CertificateStatus.CONVERGENT_EVIDENCE)

    def test_left_nested_hypothesis_names(self):
        cert = invert_ordered(q("1/2"), q(2), PowerDirection.LEFT_NESTED, budget=8)
        self.assertEqual(cert.direction, InversionDirection.LEFT)
        names = [check.name for check in cert.hypothesis_report]
        self.assertEqual(names, ["1 >= 0", "x > 0", "x <= 1", "c > 0", "c*x >= 1"])

    def test_element_above_one(self):
        cert = invert_ordered(q(2), q(1))
        self.assertEqual(cert.status, CertificateStatus.HYPOTHESIS_FAILED)
        self.assertEqual([check.name for check in cert.failed_hypotheses], ["x <= 1"])
        self.assertEqual(cert.failed_hypotheses[0].witness, ["2"])

    def test_zero_has_no_witness(self):
        cert = invert_ordered(q(0))
        self.assertEqual(cert.status, CertificateStatus.HYPOTHESIS_FAILED)
        self.assertEqual(cert.hypothesis_report[0].name, "witness c exists")

    def test_insufficient_witness(self):
        cert = invert_ordered(q("1/2"), q(1))
        self.assertEqual(cert.status, CertificateStatus.HYPOTHESIS_FAILED)
        self.assertEqual([check.name for check in cert.failed_hypotheses], ["x*c >= 1"])

    def test_dual_numbers_invert_exactly(self):
        ring = ring_from_name("pair:rat,lex,dual")
        cert = invert_ordered(ring.parse("(1,-1)"), ring.parse("(2,0)"))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.iterations, 2)
        self.assertEqual(cert.inverse_candidate, "(1,1)")
        self.assertEqual(cert.inverse, ring.parse("(1,1)"))

    def test_antilex_indeterminate_has_no_witness(self):
        ring = ring_from_name("poly:rat,antilex")
        cert = invert_ordered(ring.indeterminate)
        self.assertEqual(cert.status, CertificateStatus.HYPOTHESIS_FAILED)
        self.assertEqual(cert.hypothesis_report[0].name, "witness c exists")
        self.assertIn("64", cert.hypothesis_report[0].detail)

    def test_residue_order_refutes_hypotheses(self):
        ring = ring_from_name("padic:5,4")
        cert = invert_ordered(ring.parse("-4"), ring.one)
        self.assertEqual(cert.status, CertificateStatus.HYPOTHESIS_FAILED)

    def test_broken_ring_breaks_an_invariant(self):
        ring = SkewAdditionRing()
        with self.assertRaises(InvariantViolation) as ctx:
            invert_ordered(ring.one, ring.one, budget=8)
        self.assertEqual(ctx.exception.index, 1)
        self.assertIn("y*s_(n-1)", ctx.exception.invariant)

    def test_report_copy_truncates_traces(self):
        cert = invert_ordered(q("1/2"), q(2), budget=64)
        short = cert.for_report()
        self.assertEqual(len(cert.residual_trace), 64)
        self.assertEqual(len(short.residual_trace), 33)
        self.assertEqual(short.residual_trace[-1].n, 63)


class TestTwoSided(unittest.TestCase):
    """Right and left series reconciled."""

    def test_dual_numbers(self):
        ring = ring_from_name("pair:rat,lex,dual")
        cert = invert_two_sided(ring.parse("(1,-1)"), ring.parse("(2,0)"))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.direction, InversionDirection.TWO_SIDED)
        self.assertEqual(cert.inverse_candidate, "(1,1)")
        self.assertTrue(cert.hypothesis_report[0].name.startswith("right: "))
        self.assertTrue(cert.hypothesis_report[-1].name.startswith("left: "))

    def test_status_is_the_worse_of_both(self):
        cert = invert_two_sided(q("1/2"), q(2), budget=4)
        self.assertEqual(cert.status, CertificateStatus.BUDGET_EXHAUSTED)
        self.assertEqual(cert.detail, "right: budget-exhausted, left: budget-exhausted")

    def test_series_with_constant_witness(self):
        ring = ring_from_name("series:8")
        cert = invert_two_sided(ring.parse("[1,-1]"), ring.from_int(2))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.inverse_candidate, "[1,1,1,1,1,1,1,1]")

    def test_mismatch_error_carries_both_inverses(self):
        error = DirectionalMismatch("{1,0,0}", "{0,1,0}", "algebra:nonassoc3")
        self.assertEqual(error.right, "{1,0,0}")
        self.assertEqual(error.left, "{0,1,0}")
        self.assertIn("differs", str(error))


class TestSeminormedInversion(unittest.TestCase):
    """Cauchy series under f(1 - x) < 1."""

    def test_padic_residue(self):
        ring = ring_from_name("padic:5,4")
        cert = invert_seminormed(ring.parse("-4"), make_seminorm("padic", ring), dyadic_windows(RATIONALS, 8))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.mode, InversionMode.SEMINORMED)
        self.assertEqual(cert.iterations, 4)
        self.assertEqual(cert.inverse_candidate, "156")
        self.assertEqual(cert.inverse * ring.parse("-4"), ring.one)

    def test_truncated_series(self):
        ring = ring_from_name("series:8")
        cert = invert_seminormed(ring.parse("[1,-1]"), make_seminorm("ord2", ring), dyadic_windows(RATIONALS, 8))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.iterations, 8)
        self.assertEqual(cert.inverse_candidate, "[1,1,1,1,1,1,1,1]")
        self.assertEqual(cert.residual_trace[0].value, "1/2")
        self.assertIsNotNone(cert.path_note)

    def test_long_series(self):
        ring = ring_from_name("series:64")
        cert = invert_seminormed(ring.parse("[1,-1]"), make_seminorm("ord2", ring), dyadic_windows(RATIONALS, 8))
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.iterations, 64)
        self.assertEqual(cert.inverse, ring.element([1] * 64))

    def test_indeterminate_fails_the_hypothesis(self):
        ring = ring_from_name("series:8")
        cert = invert_seminormed(ring.indeterminate, make_seminorm("ord2", ring), dyadic_windows(RATIONALS, 8))
        self.assertEqual(cert.status, CertificateStatus.HYPOTHESIS_FAILED)
        self.assertEqual([check.name for check in cert.failed_hypotheses], ["f(1 - x) < 1"])

    def test_rationals_converge(self):
        cert = invert_seminormed(q("1/2"), make_seminorm("abs", RATIONALS), dyadic_windows(RATIONALS, 8), budget=16)
        self.assertEqual(cert.status, CertificateStatus.CONVERGENT_EVIDENCE)
        self.assertEqual(cert.iterations, 16)
        self.assertEqual(cert.residual_trace[-1].value, "1/65536")

    def test_no_windows_means_no_evidence(self):
        cert = invert_seminormed(q("1/2"), make_seminorm("abs", RATIONALS), [], budget=16)
        self.assertEqual(cert.status, CertificateStatus.BUDGET_EXHAUSTED)

    def test_budget_too_short_for_windows(self):
        with self.assertRaises(NotCauchy) as ctx:
            invert_seminormed(q("1/2"), make_seminorm("abs", RATIONALS), dyadic_windows(RATIONALS, 8), budget=4)
        self.assertFalse(ctx.exception.verdict.passed)

    def test_two_sided(self):
        ring = ring_from_name("series:8")
        cert = invert_seminormed_two_sided(
            ring.parse("[1,-1]"), make_seminorm("ord2", ring), dyadic_windows(RATIONALS, 8)
        )
        self.assertEqual(cert.status, CertificateStatus.EXACT_INVERSE)
        self.assertEqual(cert.direction, InversionDirection.TWO_SIDED)


class TestWitnessHelpers(unittest.TestCase):
    """Archimedean search, comparison families and inf x^n = 0."""

    def test_doubling_search(self):
        search = archimedean_witness_search(q("1/3"))
        self.assertEqual(search.outcome, WitnessOutcome.FOUND)
        self.assertEqual(search.witness, "4")
        self.assertEqual(search.tried, [1, 2, 4])

    def test_search_needs_positive_element(self):
        with self.assertRaises(NotPositive):
            archimedean_witness_search(q(0))

    def test_search_exhausts_on_infinitesimal(self):
        ring = ring_from_name("poly:rat,antilex")
        search = archimedean_witness_search(ring.indeterminate, budget=2**20)
        self.assertEqual(search.outcome, WitnessOutcome.NOT_FOUND)
        self.assertEqual(len(search.tried), 21)

    def test_search_stops_on_incomparability(self):
        ring = ring_from_name("pair:rat,componentwise,componentwise")
        with pytest.warns(UserWarning):
            search = archimedean_witness_search(ring.parse("(1/2,0)"))
        self.assertEqual(search.outcome, WitnessOutcome.INCOMPARABILITY_HIT)
        self.assertEqual(search.multiplier, 4)

    def test_dyadic_family(self):
        self.assertEqual(len(dyadic_family(RATIONALS, 16)), 17)
        self.assertEqual(dyadic_family(INTEGERS, 16), [INTEGERS.one])

    def test_inf_power_of_half(self):
        verdict = inf_power_zero_check(q("1/2"), PowerDirection.RIGHT_NESTED, dyadic_family(RATIONALS, 8))
        self.assertTrue(verdict.passed)
        self.assertEqual(verdict.entry_indices, [1, 1, 2, 3, 4, 5, 6, 7, 8])

    def test_inf_power_of_zero(self):
        verdict = inf_power_zero_check(q(0), PowerDirection.RIGHT_NESTED, dyadic_family(RATIONALS, 4))
        self.assertTrue(verdict.passed)
        self.assertEqual(set(verdict.entry_indices), {1})

    def test_inf_power_of_one_has_fixed_point(self):
        verdict = inf_power_zero_check(q(1), PowerDirection.RIGHT_NESTED, dyadic_family(RATIONALS, 4))
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.fixed_point, "1")

    def test_inf_power_outside_unit_interval(self):
        verdict = inf_power_zero_check(q(2), PowerDirection.RIGHT_NESTED, dyadic_family(RATIONALS, 4))
        self.assertFalse(verdict.passed)
        self.assertIsNone(verdict.fixed_point)

    def test_componentwise_fixed_point(self):
        ring = ring_from_name("pair:rat,componentwise,componentwise")
        family = [ring.parse("(1/2,1/2)"), ring.parse("(1/4,1/4)")]
        verdict = inf_power_zero_check(ring.parse("(1,0)"), PowerDirection.RIGHT_NESTED, family)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.fixed_point, "(1,0)")
        verdict = inf_power_zero_check(
            ring.parse("(1,1/2)"), PowerDirection.LEFT_NESTED, family, lower_bound=ring.parse("(1,0)")
        )
        self.assertEqual(verdict.fixed_point, "(1,0)")

    def test_componentwise_fixed_point_found_from_powers(self):
        ring = ring_from_name("pair:rat,componentwise,componentwise")
        for direction in PowerDirection:
            verdict = inf_power_zero_check(ring.parse("(1,1/2)"), direction, dyadic_family(ring, 8))
            self.assertFalse(verdict.passed)
            self.assertEqual(verdict.fixed_point, "(1,0)")

    def test_stable_part_of_powers(self):
        ring = ring_from_name("pair:rat,componentwise,componentwise")
        powers = [ring.parse("(1,1/4)"), ring.parse("(1,1/8)"), ring.parse("(1,1/16)")]
        self.assertEqual(stable_part(powers), ring.parse("(1,0)"))
        self.assertIsNone(stable_part([q("1/4"), q("1/8")]))

    def test_shrinking_powers_have_no_fixed_point(self):
        ring = ring_from_name("pair:rat,componentwise,componentwise")
        verdict = inf_power_zero_check(ring.parse("(1/2,1/2)"), PowerDirection.RIGHT_NESTED, dyadic_family(ring, 8))
        self.assertTrue(verdict.passed)
        self.assertIsNone(verdict.fixed_point)


@pytest.mark.parametrize("value, witness", [("1", "1"), ("1/2", "2"), ("1/3", "4"), ("3/4", "2"), ("1/7", "8")])
def test_doubling_witnesses(value, witness):
    assert archimedean_witness_search(q(value)).witness == witness


@pytest.mark.parametrize("value", ["1/2", "1/3", "3/4", "1/7", "5/6"])
def test_ordered_runs_hold_every_invariant(value):
    cert = invert_ordered(q(value), budget=64, comparison_family=dyadic_family(RATIONALS, 8))
    assert cert.status is CertificateStatus.CONVERGENT_EVIDENCE
    assert all(check.passed for check in cert.hypothesis_report)


@pytest.mark.parametrize(
    "name, x, seminorm",
    [
        ("padic:5,4", "-4", "padic"),
        ("series:8", "[1,-1]", "ord2"),
        ("series:8", "[1,-1/2,3]", "ord2"),
        ("rationals", "1/2", "abs"),
    ],
)
def test_seminorm_of_residuals_never_grows(name, x, seminorm):
    ring = ring_from_name(name)
    for direction in PowerDirection:
        spec = make_seminorm(seminorm, ring)
        cert = invert_seminormed(ring.parse(x), spec, dyadic_windows(RATIONALS, 8), 32, direction)
        values = [Fraction(entry.value) for entry in cert.residual_trace]
        assert values, cert.detail
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))


# Exact inversions per shipped instance: (literal x, witness literal) in ordered mode,
# or (literal x, seminorm name) in seminormed mode.
EXACT_CASES = {
    "integers": ("1", "1", None),
    "rationals": ("1", "1", None),
    "poly:int,lex": ("1", "1", None),
    "poly:rat,lex": ("1", "1", None),
    "poly:int,antilex": ("1", "1", None),
    "poly:rat,antilex": ("1", "1", None),
    "pair:rat,lex,dual": ("(1,-1)", "(2,0)", None),
    "pair:rat,componentwise,componentwise": ("(1,1)", "(1,1)", None),
    "pair:rat,componentwise,dual": ("(1,0)", "(1,0)", None),
    "series:8": ("[1,-1]", "2", None),
    "padic:5,4": ("-4", None, "padic"),
}


@pytest.mark.parametrize(
    "name",
    [n for n in SHIPPED_RING_NAMES if ring_from_name(n).associative or ring_from_name(n).commutative],
)
def test_right_and_left_inverses_agree(name):
    ring = ring_from_name(name)
    literal, witness, seminorm = EXACT_CASES[name]
    x = ring.parse(literal)
    if seminorm is None:
        runs = [invert_ordered(x, ring.parse(witness), direction) for direction in PowerDirection]
    else:
        spec = make_seminorm(seminorm, ring)
        windows = dyadic_windows(RATIONALS, 8)
        runs = [invert_seminormed(x, spec, windows, 64, direction) for direction in PowerDirection]
    right, left = runs
    assert right.status is CertificateStatus.EXACT_INVERSE
    assert left.status is CertificateStatus.EXACT_INVERSE
    assert right.inverse == left.inverse
    assert x * right.inverse == ring.one
