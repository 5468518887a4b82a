"""
Oriented powers in possibly nonassociative rings.
"""

from ..models.common import PowerDirection
from ..rings.base import Element


def oriented_power(x: Element, n: int, direction: PowerDirection) -> Element:
    """Compute x^{→n} = x·x^{→(n-1)} or x^{←n} = x^{←(n-1)}·x.

    Args:
        x: Base element
        n: Nonnegative exponent; n = 0 gives the unit
        direction: Nesting of the products

    Raises:
        ValueError: If n is negative
    """
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    result = x.ring.one
    for _ in range(n):
        result = step_power(x, result, direction)
    return result


def step_power(x: Element, previous: Element, direction: PowerDirection) -> Element:
    """Next oriented power from the previous one."""
    return x * previous if direction is PowerDirection.RIGHT_NESTED else previous * x
