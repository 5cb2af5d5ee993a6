"""Tests for Chebyshev polynomials, the T-basis and threading plans."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.algebra.chebyshev import (
    PolyZ, cheb_S, cheb_T, cheb_T_laurent_identity, from_T_basis, is_in_C_TN, t_basis_coefficients,
    thread_plan, to_T_basis,
)
from skeinlab.algebra.laurent import LaurentInt

int_polys = st.lists(st.integers(-6, 6), max_size=8).map(PolyZ)


def test_small_chebyshev_polynomials():
    assert cheb_T(0) == PolyZ([2])
    assert cheb_T(2) == PolyZ([-2, 0, 1])
    assert cheb_T(3) == PolyZ([0, -3, 0, 1])
    assert cheb_S(2) == PolyZ([-1, 0, 1])
    assert cheb_S(-1) == PolyZ()
    assert cheb_S(-2) == PolyZ([-1])


def test_negative_index_is_refused():
    with pytest.raises(ValueError):
        cheb_T(-1)
    with pytest.raises(ValueError):
        cheb_S(-3)


@given(st.integers(1, 10), st.integers(1, 10))
def test_product_formula(m, n):
    assert cheb_T(m) * cheb_T(n) == cheb_T(m + n) + cheb_T(abs(m - n))


@pytest.mark.parametrize('n', range(0, 16))
def test_laurent_substitution(n):
    assert cheb_T_laurent_identity(n)


def test_to_T_basis():
    p = cheb_T(3) + cheb_T(1) * 2 + 5
    assert to_T_basis(p) == [Fraction(5, 2), Fraction(2), Fraction(0), Fraction(1)]


@given(int_polys)
def test_T_basis_round_trip(p):
    assert from_T_basis(to_T_basis(p)) == p


def test_t_basis_keeps_laurent_coefficients():
    c = LaurentInt({1: 1, -1: -1})
    found, remainder = t_basis_coefficients(cheb_T(4) * c)
    assert found == {4: c}
    assert not remainder


def test_membership_in_C_TN():
    assert is_in_C_TN(cheb_T(2) * cheb_T(2), 2)
    assert is_in_C_TN(cheb_T(4) + cheb_T(2) + 7, 2)
    assert not is_in_C_TN(cheb_T(3), 2)
    assert is_in_C_TN(PolyZ.monomial(2), 2)
    assert not is_in_C_TN(PolyZ.z(), 2)
    assert not is_in_C_TN(PolyZ.monomial(3), 2)
    assert is_in_C_TN(PolyZ.monomial(5), 1)


def test_thread_plan_of_T2_on_two_components():
    plan = thread_plan(cheb_T(2), 2).as_dict()
    assert plan == {
        (0, 0): LaurentInt.constant(4),
        (0, 2): LaurentInt.constant(-2),
        (2, 0): LaurentInt.constant(-2),
        (2, 2): LaurentInt.constant(1),
    }


def test_thread_plan_without_components_keeps_the_constant():
    assert thread_plan(cheb_T(2), 0).as_dict() == {(): LaurentInt.constant(-2)}
    assert len(thread_plan(cheb_T(1), 0)) == 0


def test_evaluate_at_laurent():
    u = LaurentInt({1: 1, -1: 1})
    assert cheb_S(2).evaluate_at(u, LaurentInt.one()) == LaurentInt({2: 1, 0: 1, -2: 1})
