"""Tests for the annulus skein modules."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.algebra.annulus import (
    AioElt, AooElt, commutator_closed_form, core_bullet_left, core_bullet_right, hook_arc_closed_form,
    hook_arc_image, is_central, skew_test, symbolic_commutator, u_arc, v_arc,
)
from skeinlab.algebra.chebyshev import PolyZ, cheb_T
from skeinlab.algebra.cyclotomic import RootSpec
from skeinlab.algebra.laurent import T, T_INV, LaurentInt

int_polys = st.lists(st.integers(-5, 5), max_size=7).map(PolyZ)


def test_core_acts_on_the_straight_arc():
    z = PolyZ.z()
    assert core_bullet_left(z, AioElt.e()) == AioElt({1: T, -1: T_INV})
    assert core_bullet_right(AioElt.e(), z) == AioElt({1: T_INV, -1: T})


def test_commutator_of_the_core():
    scalar = T - T_INV
    assert symbolic_commutator(PolyZ.z()) == AioElt({1: scalar, -1: -scalar})


@pytest.mark.parametrize('j', range(1, 9))
def test_commutator_closed_form_on_T_basis(j):
    assert symbolic_commutator(cheb_T(j)) == commutator_closed_form(cheb_T(j))


@given(int_polys)
def test_commutator_closed_form(p):
    assert symbolic_commutator(p) - commutator_closed_form(p) == 0


@given(int_polys, int_polys)
def test_bullets_are_actions(p, q):
    e = AioElt.e()
    assert core_bullet_left(p * q, e) == core_bullet_left(p, core_bullet_left(q, e))
    assert core_bullet_right(e, p * q) == core_bullet_right(core_bullet_right(e, p), q)


def test_centrality_at_i():
    i = RootSpec(4, 1)
    assert is_central(cheb_T(2), i)
    assert is_central(cheb_T(2), i).order == 2
    assert not is_central(PolyZ.z(), i)


def test_skew_vanishing():
    assert not skew_test(1, RootSpec(4, 1))
    assert skew_test(1, RootSpec(8, 1))
    assert not skew_test(2, RootSpec(8, 1))
    with pytest.raises(ValueError):
        skew_test(0, RootSpec(8, 1))


def test_base_arcs():
    assert u_arc(1) == AooElt.u1()
    assert v_arc(0) == AooElt.u0()


def test_u0_is_not_given_by_the_closed_form():
    with pytest.raises(ValueError, match="framing"):
        u_arc(0)


@pytest.mark.parametrize('k', range(3, 10))
def test_u_recursion(k):
    z = PolyZ.z()
    expected = (u_arc(k - 1) * z).scale(T) - u_arc(k - 2).scale(T * T)
    assert u_arc(k) == expected


def test_u_recursion_breaks_at_two():
    z = PolyZ.z()
    assert u_arc(2) != (u_arc(1) * z).scale(T) - AooElt.u0().scale(T * T)


@pytest.mark.parametrize('k', range(2, 10))
def test_v_recursion(k):
    z = PolyZ.z()
    expected = (v_arc(k - 1) * z).scale(T_INV) - v_arc(k - 2).scale(T_INV * T_INV)
    assert v_arc(k) == expected


@pytest.mark.parametrize('k', range(1, 9))
def test_hook_arc_map(k):
    assert hook_arc_image(cheb_T(k)) == hook_arc_closed_form(k)


def test_hook_arc_map_of_T1():
    assert hook_arc_closed_form(1) == AooElt(PolyZ([LaurentInt({0: 1, 4: -1})]), PolyZ([0, LaurentInt({-2: 1})]))


def test_hook_arc_map_needs_no_constant_part():
    with pytest.raises(ValueError):
        hook_arc_image(PolyZ.constant(2))
    with pytest.raises(ValueError):
        hook_arc_image(cheb_T(0))
