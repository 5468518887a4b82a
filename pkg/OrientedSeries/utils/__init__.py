"""
Utility functions for OrientedSeries.
"""

from .converters import (
    flatten,
    to_dataframe,
    to_dict,
    to_json,
    to_report_lines,
    trace_dataframe,
    write_report,
)

__all__ = [
    "flatten",
    "to_dataframe",
    "to_dict",
    "to_json",
    "to_report_lines",
    "trace_dataframe",
    "write_report",
]
