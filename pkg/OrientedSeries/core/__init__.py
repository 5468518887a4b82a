"""
Order, oriented powers and axiom suites shared by every ring instance.
"""

from .axioms import check_order_compatibility, check_ring_axioms
from .order import MalformedTriple, compare, is_convex_sampled
from .powers import oriented_power

__all__ = [
    "MalformedTriple",
    "check_order_compatibility",
    "check_ring_axioms",
    "compare",
    "is_convex_sampled",
    "oriented_power",
]
