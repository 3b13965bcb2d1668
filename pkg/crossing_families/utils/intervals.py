"""Certified comparisons of sums of square roots with mpmath interval arithmetic."""
from contextlib import contextmanager
from fractions import Fraction
from typing import Callable, Iterable, Optional

import mpmath
from mpmath import iv

START_DPS = 30
MAX_DPS = 480


@contextmanager
def interval_precision(dps: int):
    """Temporarily set the decimal precision of the interval context."""
    saved = iv.dps
    iv.dps = dps
    try:
        yield
    finally:
        iv.dps = saved


def to_interval(value: Fraction):
    """Tight interval enclosing an exact rational."""
    value = Fraction(value)
    return iv.mpf(value.numerator) / iv.mpf(value.denominator)


def sqrt_interval(value: Fraction):
    return iv.sqrt(to_interval(value))


def root_sum(squares: Iterable[Fraction]):
    """Interval enclosing the sum of the square roots of the given rationals."""
    total = iv.mpf(0)
    for square in squares:
        total += sqrt_interval(square)
    return total


def certified_sign(
    expression: Callable[[], "iv.mpf"], start_dps: int = START_DPS, max_dps: int = MAX_DPS
) -> Optional[int]:
    """Sign of an interval expression, doubling precision until it excludes zero.

    Args:
        expression: zero-argument callable evaluated inside the interval context
        start_dps: initial decimal precision
        max_dps: precision ceiling

    Returns:
        1 or -1 when certified, None when the ceiling is reached first

    Usage:
        >>> certified_sign(lambda: sqrt_interval(Fraction(2)) - to_interval(Fraction(7, 5)))
        1
    """
    dps = start_dps
    while dps <= max_dps:
        with interval_precision(dps):
            value = expression()
            if value > 0:
                return 1
            if value < 0:
                return -1
        dps *= 2
    return None


def approximate_root_sum(squares: Iterable[Fraction], dps: int = START_DPS) -> float:
    """Non-certified value of a sum of square roots, for reports."""
    with mpmath.workdps(dps):
        total = mpmath.fsum(mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator) for q in squares)
        return float(total)
