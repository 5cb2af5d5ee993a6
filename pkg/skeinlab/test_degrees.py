"""Tests for the degree functions on R[x1, x2, y]."""
import pytest

from skeinlab.algebra.laurent import T, T_INV
from skeinlab.algebra.skein_poly import X1, X2, Y, SkeinPoly
from skeinlab.utils.degrees import Degrees, degrees, in_V_N


def test_degrees_of_the_figure_eight_value():
    assert degrees(X1 * X2 * T + Y * T_INV) == Degrees(left=1, right=1, double=2, y=1)


def test_degrees_of_zero():
    assert degrees(SkeinPoly(('x1', 'x2', 'y'))) == Degrees(0, 0, 0, 0)


def test_mixed_monomial():
    assert degrees(X1 * X1 * Y + X2) == Degrees(left=3, right=1, double=4, y=1)


def test_V_N_membership():
    assert in_V_N(X1 * X2 + Y, 1)
    assert not in_V_N(X1, 1)
    assert not in_V_N(Y * Y, 1)
    assert in_V_N(Y * Y + X1 * X1, 2)
    assert not in_V_N(X1 ** 3 * X2, 2)


def test_other_generators_are_refused():
    with pytest.raises(ValueError):
        degrees(SkeinPoly(('x1',)))
