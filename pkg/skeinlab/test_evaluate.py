"""Tests for the state-sum engine and the diagram operations."""
import pytest

from skeinlab.algebra.chebyshev import cheb_T
from skeinlab.algebra.cyclotomic import encircling_scalar
from skeinlab.algebra.laurent import T, T_INV, LaurentInt
from skeinlab.algebra.skein_poly import X1, X2, Y, SkeinPoly, swap_sigma
from skeinlab.diagrams.builtins import BUILTIN_DIAGRAMS, FINGER, UnknownBuiltinError, builtin, builtin_names
from skeinlab.diagrams.diagram import (
    Diagram, DiagramError, PuncturedDisk, classify_component, mirror, rotate180, union,
)
from skeinlab.diagrams.evaluate import evaluate, thread_polynomial
from skeinlab.diagrams.geometry import point
from skeinlab.diagrams.operations import (
    ARC_LEFT, ARC_MIDDLE, ARC_VERTICAL, add_curl, arc_count, attach_loop, cable, smooth_crossing,
)
from skeinlab.diagrams.state_sum import StateSpaceTooLarge

UNKNOT_VALUE = LaurentInt({2: -1, -2: -1})


# Test 1: crossing-free curves evaluate to their classes

def test_simple_curves(builtin_diagram):
    assert evaluate(builtin_diagram('x1')) == X1
    assert evaluate(builtin_diagram('x2')) == X2
    assert evaluate(builtin_diagram('y')) == Y
    assert evaluate(builtin_diagram('x1x2')) == X1 * X2
    assert evaluate(builtin_diagram('unknot')) == SkeinPoly.constant(UNKNOT_VALUE)


def test_empty_diagram_is_one():
    assert evaluate(Diagram.empty()) == SkeinPoly.constant(1)


# Test 2: one-crossing diagrams

def test_figure_eight_curve(builtin_diagram):
    assert evaluate(builtin_diagram('eight')) == X1 * X2 * T + Y * T_INV
    assert evaluate(builtin_diagram('eight_mirror')) == X1 * X2 * T_INV + Y * T


def test_positive_curl(builtin_diagram):
    assert evaluate(builtin_diagram('curl')) == SkeinPoly.constant(LaurentInt({5: 1, 1: 1}))


@pytest.mark.parametrize('name', ['x1', 'y', 'eight', 'clasp'])
def test_added_curl_multiplies_by_minus_t_cubed(builtin_diagram, name):
    d = builtin_diagram(name)
    assert evaluate(add_curl(d, 0, 0)) == evaluate(d) * LaurentInt.monomial(3, -1)


# Test 3: isotopy invariance

def test_reidemeister_two(builtin_diagram):
    assert evaluate(builtin_diagram('finger')) == evaluate(builtin_diagram('finger_pulled'))
    assert evaluate(builtin_diagram('finger')) == X1 * X2


def test_reidemeister_three(builtin_diagram):
    assert evaluate(builtin_diagram('r3_before')) == evaluate(builtin_diagram('r3_after'))


@pytest.mark.parametrize('name', sorted(BUILTIN_DIAGRAMS))
def test_mirror_inverts_t(builtin_diagram, name):
    d = builtin_diagram(name)
    assert evaluate(mirror(d)) == evaluate(d).mirror()


@pytest.mark.parametrize('name', sorted(BUILTIN_DIAGRAMS))
def test_rotation_swaps_punctures(builtin_diagram, name):
    d = builtin_diagram(name)
    assert evaluate(rotate180(d)) == swap_sigma(evaluate(d))


def test_union_is_multiplicative(builtin_diagram):
    eight, unknot = builtin_diagram('eight'), builtin_diagram('unknot')
    assert evaluate(union(eight, unknot)) == evaluate(eight) * UNKNOT_VALUE


def test_union_refuses_overlapping_diagrams(builtin_diagram):
    with pytest.raises(DiagramError):
        union(builtin_diagram('x1'), Diagram.from_strands([FINGER]))


@pytest.mark.parametrize('name', ['eight', 'clasp'])
def test_smoothing_relation(builtin_diagram, name):
    d = builtin_diagram(name)
    expected = evaluate(smooth_crossing(d, 0, 'A')) * T + evaluate(smooth_crossing(d, 0, 'B')) * T_INV
    assert evaluate(d) == expected


def test_smoothing_arguments_are_checked(builtin_diagram):
    with pytest.raises(ValueError):
        smooth_crossing(builtin_diagram('eight'), 0, 'C')
    with pytest.raises(ValueError):
        smooth_crossing(builtin_diagram('eight'), 1, 'A')


# Test 4: cabling and threading

def test_cables_of_simple_curves(builtin_diagram):
    assert evaluate(cable(builtin_diagram('x1'), [3])) == X1 ** 3
    assert evaluate(cable(builtin_diagram('unknot'), [2])) == SkeinPoly.constant(UNKNOT_VALUE ** 2)
    assert cable(builtin_diagram('x1x2'), [0, 0]) == Diagram.empty()


def test_threading_on_a_simple_curve(builtin_diagram):
    assert thread_polynomial(builtin_diagram('x1'), cheb_T(2)) == X1 * X1 - 2


def test_threading_with_mixed_polynomials(builtin_diagram):
    value = thread_polynomial(builtin_diagram('x1x2'), [cheb_T(2), cheb_T(1)])
    assert value == (X1 * X1 - 2) * X2


def test_threading_checks_the_component_count(builtin_diagram):
    with pytest.raises(ValueError):
        thread_polynomial(builtin_diagram('x1x2'), [cheb_T(2)])


def test_threaded_figure_eight_at_N_1(builtin_diagram):
    assert thread_polynomial(builtin_diagram('eight'), cheb_T(1)) == evaluate(builtin_diagram('eight'))


# Test 5: loops around arcs

def test_arc_counts(builtin_diagram):
    assert arc_count(builtin_diagram('x1'), ARC_LEFT) == 1
    assert arc_count(builtin_diagram('x1x2'), ARC_MIDDLE) == 2
    assert arc_count(builtin_diagram('y'), ARC_VERTICAL) == 2
    assert arc_count(builtin_diagram('x1x2'), ARC_VERTICAL) == 0


def test_loop_around_a_single_strand(builtin_diagram):
    looped = evaluate(attach_loop(builtin_diagram('x1'), ARC_LEFT))
    assert looped == X1 * encircling_scalar(1)


def test_loop_on_the_empty_diagram_is_an_unknot():
    assert evaluate(attach_loop(Diagram.empty(), ARC_VERTICAL)) == SkeinPoly.constant(UNKNOT_VALUE)


def test_loop_side_must_be_a_sign(builtin_diagram):
    with pytest.raises(ValueError):
        attach_loop(builtin_diagram('x1'), ARC_LEFT, over_side=0)


# Test 6: limits, workers and validation

def test_state_space_limit(builtin_diagram):
    big = cable(builtin_diagram('eight'), [4])
    with pytest.raises(StateSpaceTooLarge, match="2\\^16 = 65536"):
        evaluate(big, max_states=2 ** 10)


def test_worker_count_does_not_change_the_value(builtin_diagram):
    d = cable(builtin_diagram('eight'), [3])
    assert evaluate(d, workers=2) == evaluate(d, workers=1)


def test_strand_through_a_puncture_is_rejected():
    d = Diagram.from_strands([[(-2, -1), (0, -1), (0, 1), (-2, 1)]])
    with pytest.raises(DiagramError, match="puncture"):
        evaluate(d)


def test_vertex_outside_the_disk_is_rejected():
    d = Diagram.from_strands([[(3, -1), (5, -1), (5, 1), (3, 1)]])
    with pytest.raises(DiagramError):
        evaluate(d)


def test_crossings_need_an_over_choice():
    with pytest.raises(DiagramError, match="over/under"):
        Diagram.from_strands([[(1, 1), (3, 1), (3, -1), (1, -1), (-1, 1), (-3, 1), (-3, -1), (-1, -1)]])


def test_builtin_lookup():
    assert 'eight' in builtin_names()
    assert 'arc_middle' in builtin_names()
    assert builtin('arc_left') == ARC_LEFT
    with pytest.raises(UnknownBuiltinError):
        builtin('trefoil')


# Test 7: component classes and cable geometry

def test_classify_component(builtin_diagram):
    disk = PuncturedDisk.standard()
    assert classify_component(builtin_diagram('y').strands[0], disk) == frozenset({1, 2})
    assert classify_component(builtin_diagram('x2').strands[0], disk) == frozenset({2})
    assert classify_component(builtin_diagram('x1').strands[0], disk) == frozenset({1})
    assert classify_component(builtin_diagram('unknot').strands[0], disk) == frozenset()


def test_classify_component_through_a_puncture():
    strand = [point(x, y) for x, y in ((-2, -1), (0, -1), (0, 1), (-2, 1))]
    with pytest.raises(DiagramError, match="puncture"):
        classify_component(strand, PuncturedDisk.standard())


@pytest.mark.parametrize('N', [2, 3, 4])
def test_figure_eight_cable_geometry(builtin_diagram, N):
    eight = builtin_diagram('eight')
    assert arc_count(eight, ARC_LEFT) == 1
    cabled = cable(eight, [N])
    assert cabled.crossing_count == N * N
    assert arc_count(cabled, ARC_LEFT) == N
