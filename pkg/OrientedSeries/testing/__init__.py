"""
Testing utilities for OrientedSeries.

Negative-control ring instances that break one axiom each, and pytest
fixtures for the shipped instances.
"""

from .controls import CONTROLS, AllPositiveRing, SkewAdditionRing

__all__ = [
    "CONTROLS",
    "AllPositiveRing",
    "SkewAdditionRing",
]
