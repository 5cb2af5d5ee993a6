"""Tests for cyclotomic integers and roots of unity."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.algebra.cyclotomic import (
    CycNum, RootSpec, cyclotomic_polynomial, encircling_scalar, encircling_scalar_at, epsilon_of,
    order_of_power, roots_of_unity, specialize,
)
from skeinlab.algebra.laurent import LaurentInt

laurent = st.dictionaries(st.integers(-8, 8), st.integers(-4, 4), max_size=4).map(LaurentInt)
roots = st.integers(1, 16).flatmap(lambda n: st.integers(0, n - 1).map(lambda a: RootSpec(n, a)))


@pytest.mark.parametrize('n, coeffs', [
    (1, (-1, 1)),
    (2, (1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


def test_root_spec_parsing():
    xi = RootSpec.parse("8/11")
    assert (xi.n, xi.a) == (8, 3)
    assert str(xi) == "8/3"
    for bad in ("8", "8/x", "0/1", "a/b/c"):
        with pytest.raises(ValueError):
            RootSpec.parse(bad)


def test_powers_of_zeta4():
    i = RootSpec(4, 1)
    assert i.power(2).value() == -1
    assert i.power(4).value() == 1
    assert i.power(-1).value() == -i.value()


def test_unknot_value_at_i():
    assert encircling_scalar(0) == LaurentInt({2: -1, -2: -1})
    assert specialize(encircling_scalar(0), RootSpec(4, 1)) == 2


def test_orders():
    assert order_of_power(RootSpec(8, 1), 4) == 2
    assert order_of_power(RootSpec(12, 1), 4) == 3
    assert order_of_power(RootSpec(16, 1), 4) == 4
    assert order_of_power(RootSpec(4, 1), 2) == 2


def test_epsilon_at_zeta8():
    N, eps = epsilon_of(RootSpec(8, 1))
    assert N == 2
    assert eps == -1


def test_roots_of_unity_lists_each_root_once():
    listed = [(xi.n, xi.a) for xi in roots_of_unity(4)]
    assert listed == [(1, 0), (2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]


def test_levels_do_not_mix():
    with pytest.raises(ValueError):
        CycNum.root_power(4, 1) + CycNum.root_power(8, 1)


@given(laurent, laurent, roots)
def test_specialize_is_a_ring_homomorphism(a, b, xi):
    assert specialize(a * b, xi) == specialize(a, xi) * specialize(b, xi)
    assert specialize(a + b, xi) == specialize(a, xi) + specialize(b, xi)


@given(roots, st.integers(0, 30))
def test_encircling_scalar_at_matches_specialization(xi, k):
    assert encircling_scalar_at(k, xi) == specialize(encircling_scalar(k), xi)


def test_epsilon_has_order_dividing_four():
    for xi in roots_of_unity(24):
        _, eps = epsilon_of(xi)
        assert eps ** 4 == 1
