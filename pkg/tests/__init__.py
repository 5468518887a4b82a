"""
Test package for OrientedSeries.
"""
