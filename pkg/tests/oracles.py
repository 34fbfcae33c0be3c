"""Independent reference computations used only by the tests."""

from fractions import Fraction
from math import gcd


def inverse_by_scan(a, r):
    return next(b for b in range(1, r) if (a * b) % r == 1)


def l_direct(r, a, m):
    """Defining sum for l(1/r(a,-a,1), m), no shortcuts."""
    b = inverse_by_scan(a, r)
    total = Fraction(0)
    for j in range(1, m):
        x = (b * j) % r
        total += Fraction(x * (r - x), 2 * r)
    return total


def delta_direct(r, a, n):
    return n * n * l_direct(r, a, 2) + l_direct(r, a, n) - l_direct(r, a, n + 1)


def coprime_weights(r):
    return [a for a in range(1, r) if gcd(a, r) == 1]
