"""
Tests for the report and serialization helpers.
"""

import json
import unittest
from fractions import Fraction

import pytest

from OrientedSeries.inversion import invert_ordered
from OrientedSeries.models.common import AxiomCheck, AxiomReport
from OrientedSeries.rings import RATIONALS
from OrientedSeries.utils import flatten, to_dict, to_json, to_report_lines, write_report


def half_certificate(budget):
    return invert_ordered(RATIONALS.from_fraction(Fraction(1, 2)), RATIONALS.from_int(2), budget=budget)


class TestConverters(unittest.TestCase):
    """Test cases for the converter functions."""

    def test_flatten(self):
        data = {"a": 1, "b": {"c": [True, None]}, "d": [], "e": {}}
        self.assertEqual(
            flatten(data),
            [("a", "1"), ("b.c.0", "true"), ("b.c.1", "null"), ("d", "[]"), ("e", "{}")],
        )

    def test_to_dict_uses_enum_values(self):
        cert = half_certificate(4)
        data = to_dict(cert)
        self.assertEqual(data["status"], "budget-exhausted")
        self.assertEqual(data["mode"], "ordered")
        self.assertNotIn("inverse", data)

    def test_to_json(self):
        report = AxiomReport(subject="rationals", sample_count=10, seed=0, checks=[AxiomCheck(name="x", passed=True)])
        parsed = json.loads(to_json(report))
        self.assertEqual(parsed["checks"][0]["name"], "x")
        self.assertEqual(json.loads(to_json({"q": Fraction(1, 3)})), {"q": "1/3"})

    def test_report_lines_for_certificate(self):
        lines = to_report_lines(half_certificate(64), "certificate")
        self.assertIn("certificate.ring: rationals", lines)
        self.assertIn("certificate.status: budget-exhausted", lines)
        self.assertIn("certificate.residual_trace.32.n: 63", lines)
        self.assertFalse(any(line.startswith("certificate.residual_trace.33.") for line in lines))

    def test_report_lines_for_mapping(self):
        self.assertEqual(to_report_lines({"op": "negate", "ok": False}, "topology"), ["topology.op: negate", "topology.ok: false"])

    def test_write_report(self):
        import tempfile
        import os

        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.txt")
            write_report(path, [["a: 1"], ["b: 2", "c: 3"]])
            with open(path, encoding="utf-8") as handle:
                self.assertEqual(handle.read(), "a: 1\n\nb: 2\nc: 3\n")


def test_to_dataframe():
    pd = pytest.importorskip("pandas")
    from OrientedSeries.utils import to_dataframe
    from OrientedSeries.utils.converters import trace_dataframe

    frame = to_dataframe([{"n": 0}, {"n": 1}])
    assert isinstance(frame, pd.DataFrame)
    assert list(frame["n"]) == [0, 1]

    trace = trace_dataframe(half_certificate(4))
    assert list(trace.columns) == ["n", "partial_sum", "residual"]
    assert trace.iloc[-1]["partial_sum"] == "15/8"
    assert trace.iloc[0]["residual"] == "1/2"
