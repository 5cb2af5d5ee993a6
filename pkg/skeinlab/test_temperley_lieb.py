"""Tests for the Temperley-Lieb algebra and the encircling operator."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.algebra.cyclotomic import UNKNOT, encircling_scalar
from skeinlab.algebra.temperley_lieb import (
    Matching, TLElement, all_matchings, compose, encircle, through_strands,
)


def test_catalan_counts():
    assert [len(all_matchings(k)) for k in range(0, 5)] == [1, 1, 2, 5, 14]


def test_identity_matching():
    assert Matching.identity(2).parens() == "(())"
    assert through_strands(Matching.identity(3)) == 3


def test_crossing_matching_is_rejected():
    with pytest.raises(ValueError):
        Matching(2, ((0, 2), (1, 3)))
    with pytest.raises(ValueError):
        Matching.from_parens("(()")


def test_cup_cap_squares_to_a_loop():
    e = Matching.from_parens("()()")
    m, loops = compose(e, e)
    assert m == e
    assert loops == 1
    E = TLElement.basis(e)
    assert E * E == E * UNKNOT


@pytest.mark.parametrize('k', [1, 2, 3])
def test_unit_law(k):
    for m in all_matchings(k):
        x = TLElement.basis(m)
        assert TLElement.unit(k) * x == x
        assert x * TLElement.unit(k) == x


@given(st.data())
def test_associativity(data):
    basis = all_matchings(3)
    a, b, c = (TLElement.basis(data.draw(st.sampled_from(basis))) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_encircled_empty_diagram_is_the_unknot():
    x = encircle(0)
    assert x.coefficient(Matching.identity(0)) == encircling_scalar(0)


def test_encircled_single_strand():
    assert encircle(1) == TLElement.unit(1) * encircling_scalar(1)


@pytest.mark.parametrize('k', [2, 3])
def test_encircled_identity(k):
    x = encircle(k)
    identity = Matching.identity(k)
    assert x.coefficient(identity) == encircling_scalar(k)
    for m, _ in x.terms():
        if m != identity:
            assert through_strands(m) < k


def test_reflection_is_an_involution():
    for m in all_matchings(3):
        assert m.reflect().reflect() == m


@pytest.mark.parametrize('k', range(0, 5))
def test_encircling_commutes_with_the_mirror(k):
    x = encircle(k)
    assert x.mirror_image() == x
