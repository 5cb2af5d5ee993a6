"""Degree functions on R[x1, x2, y]."""
from typing import NamedTuple

from skeinlab.algebra.skein_poly import STANDARD_GENERATORS, SkeinPoly


class Degrees(NamedTuple):
    left: int
    right: int
    double: int
    y: int


def _check(p: SkeinPoly):
    if p.gens != STANDARD_GENERATORS:
        raise ValueError(f"degrees are defined on {STANDARD_GENERATORS}, got {p.gens}")


def degrees(p: SkeinPoly) -> Degrees:
    """
    Maximal left, right, double and y-degree over the monomials of p.

    For x1^a1 x2^a2 y^b: left = a1 + b, right = a2 + b, double = a1 + a2 + 2b.
    The zero polynomial has all degrees 0.
    """
    _check(p)
    left = right = double = y = 0
    for (a1, a2, b), _ in p.terms():
        left = max(left, a1 + b)
        right = max(right, a2 + b)
        double = max(double, a1 + a2 + 2 * b)
        y = max(y, b)
    return Degrees(left, right, double, y)


def in_V_N(p: SkeinPoly, N: int) -> bool:
    """True iff every monomial has a1 + b <= N, a2 + b <= N and a1 + a2 even."""
    _check(p)
    for (a1, a2, b), _ in p.terms():
        if a1 + b > N or a2 + b > N or (a1 + a2) % 2:
            return False
    return True

