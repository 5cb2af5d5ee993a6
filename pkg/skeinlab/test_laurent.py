"""Tests for exact Laurent polynomial arithmetic."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.algebra.laurent import T, T_INV, LaurentInt

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentInt)


def test_zero_coefficients_are_dropped():
    assert LaurentInt({3: 0, 1: 2}) == LaurentInt.monomial(1, 2)
    assert LaurentInt() == 0
    assert not LaurentInt({2: 0})


def test_text_form_sorts_by_exponent():
    assert str(LaurentInt({2: -1, -2: -1})) == "-1*t^-2 + -1*t^2"
    assert str(LaurentInt()) == "0"


def test_square_of_t_plus_inverse():
    assert (T + T_INV) ** 2 == LaurentInt({2: 1, 0: 2, -2: 1})


def test_negative_power_of_a_unit():
    assert T ** -3 == LaurentInt.monomial(-3)
    with pytest.raises(ValueError):
        (T + 1) ** -1


def test_exact_divide():
    quotient = LaurentInt({4: 1, -4: -1}).exact_divide(LaurentInt({2: 1, -2: -1}))
    assert quotient == LaurentInt({2: 1, -2: 1})


def test_exact_divide_refuses_remainders():
    with pytest.raises(ValueError):
        (T + 1).exact_divide(T - 1)
    with pytest.raises(ZeroDivisionError):
        T.exact_divide(0)


def test_coerce_rejects_other_types():
    with pytest.raises(TypeError):
        LaurentInt.coerce(1.5)


@given(laurent, laurent, laurent)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * LaurentInt.one() == a
    assert a - a == 0


@given(laurent, laurent)
def test_mirror_is_a_ring_homomorphism(a, b):
    assert (a * b).mirror() == a.mirror() * b.mirror()
    assert (a + b).mirror() == a.mirror() + b.mirror()
    assert a.mirror().mirror() == a


@given(laurent, laurent)
def test_division_undoes_multiplication(a, b):
    if b:
        assert (a * b).exact_divide(b) == a
