"""Exact integer comparison against the golden ratio phi = (1 + sqrt(5)) / 2.

Everything in the outcome classification reduces to deciding b >= phi * c for
non-negative integers b, c. Because phi is irrational, b = phi * c is
impossible for c > 0, and since phi is the positive root of
t*t - t - 1 = 0, we have b > phi * c exactly when b*b - b*c - c*c > 0.
That makes the comparison a pure integer test; floating point would start
lying near consecutive-Fibonacci ratios long before the coordinate bound.
"""

from __future__ import annotations

from .errors import DomainError


def geq_phi(b: int, c: int) -> bool:
    """True iff b >= phi * c, computed exactly in integers.

    c == 0 is a separate branch: the quadratic form gives b*b > 0 which is
    wrong for b == 0 although 0 >= phi * 0 holds.
    """
    if c == 0:
        return True
    return b * b > b * c + c * c


def phi_split_alternates(y: int, z: int) -> bool:
    """For the sum split x = y + z (with y >= z > 0), exactly one of
    x >= phi*y and y >= phi*z holds.

    Returns that XOR; it is True for every valid pair, and callers treat it as
    an executable witness of the fact. Raises DomainError when z <= 0 or y < z.
    """
    if z <= 0:
        raise DomainError(f"z must be positive, got {z}")
    if y < z:
        raise DomainError(f"require y >= z, got y={y} z={z}")
    return geq_phi(y + z, y) != geq_phi(y, z)
