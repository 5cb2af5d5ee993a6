"""
Catalog of built-in diagrams and arcs in the standard twice-punctured disk.

Punctures sit at (-2, 0) and (2, 0) inside the disk of radius 4.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Union

from skeinlab.diagrams.diagram import (
    Arc, Diagram, SegmentRef, mirror, over_by_point, over_segments, over_strands,
    transform,
)
from skeinlab.diagrams.geometry import Point, point
from skeinlab.diagrams.operations import ARC_LEFT, ARC_MIDDLE, ARC_RIGHT, ARC_VERTICAL


class UnknownBuiltinError(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown built-in {name!r}; choose from {', '.join(builtin_names())}")


def _rect(x0, y0, x1, y1) -> List[Point]:
    """Counterclockwise rectangle."""
    return [point(x0, y0), point(x1, y0), point(x1, y1), point(x0, y1)]


F = Fraction

X1_CURVE = _rect(-3, -1, -1, 1)
X2_CURVE = _rect(1, -1, 3, 1)
Y_CURVE = _rect(F(-7, 2), F(-3, 2), F(7, 2), F(3, 2))

# One-crossing curve around both punctures; its right lobe is traversed clockwise
EIGHT_CURVE = [point(x, y) for x, y in (
    (1, 1), (3, 1), (3, -1), (1, -1), (-1, 1), (-3, 1), (-3, -1), (-1, -1),
)]

# Thin curve around the second puncture reaching into the first square
FINGER = _rect(F(-3, 2), F(-3, 5), 3, F(3, 5))
FINGER_PULLED = _rect(F(-1, 2), F(-3, 5), 3, F(3, 5))


def x1() -> Diagram:
    return Diagram.from_strands([X1_CURVE])


def x2() -> Diagram:
    return Diagram.from_strands([X2_CURVE])


def y() -> Diagram:
    return Diagram.from_strands([Y_CURVE])


def x1x2() -> Diagram:
    return Diagram.from_strands([X1_CURVE, X2_CURVE])


def eight() -> Diagram:
    """Its A-smoothing is x1 with x2, its B-smoothing is y."""
    return Diagram.from_strands([EIGHT_CURVE], over_segments([SegmentRef(0, 7)]))


def eight_mirror() -> Diagram:
    return mirror(eight())


def curl() -> Diagram:
    """The figure-eight shrunk away from the punctures: an unknot with one positive curl."""
    return transform(eight(), lambda p: (p[0] / 4, p[1] / 4 + F(5, 2)))


def unknot() -> Diagram:
    return Diagram.from_strands([_rect(F(-1, 2), 2, F(1, 2), 3)])


def finger() -> Diagram:
    """x1 with an x2 curve pushed over it; a Reidemeister II pair away from finger_pulled."""
    return Diagram.from_strands([X1_CURVE, FINGER], over_strands([1, 0]))


def finger_pulled() -> Diagram:
    return Diagram.from_strands([X1_CURVE, FINGER_PULLED])


def clasp() -> Diagram:
    """x1 and an x2 curve hooked through each other."""
    return Diagram.from_strands([X1_CURVE, FINGER], over_by_point({
        point(-1, F(-3, 5)): 0,
        point(-1, F(3, 5)): 1,
    }))


def _r3(offset: Fraction) -> Diagram:
    triangle = [point(-2, offset + 2), point(F(1, 2), offset - F(1, 2)), point(F(-1, 3), F(7, 2))]
    by_point = over_by_point({point(-1, F(3, 5)): 0, point(-1, F(-3, 5)): 1})

    def choose(at: Point, r1: SegmentRef, r2: SegmentRef) -> SegmentRef:
        if 2 in (r1.strand, r2.strand):
            return r1 if r1.strand == 2 else r2
        return by_point(at, r1, r2)

    return Diagram.from_strands([X1_CURVE, FINGER, triangle], choose)


def r3_before() -> Diagram:
    """A strand lying over the crossing at (-1, 3/5) on its lower left side."""
    return _r3(F(-3, 5))


def r3_after() -> Diagram:
    return _r3(F(-1, 5))


BUILTIN_DIAGRAMS: Dict[str, Callable[[], Diagram]] = {
    'x1': x1,
    'x2': x2,
    'y': y,
    'x1x2': x1x2,
    'eight': eight,
    'eight_mirror': eight_mirror,
    'curl': curl,
    'unknot': unknot,
    'finger': finger,
    'finger_pulled': finger_pulled,
    'clasp': clasp,
    'r3_before': r3_before,
    'r3_after': r3_after,
}

BUILTIN_ARCS: Dict[str, Arc] = {
    'arc_left': ARC_LEFT,
    'arc_middle': ARC_MIDDLE,
    'arc_right': ARC_RIGHT,
    'arc_vertical': ARC_VERTICAL,
}


def builtin_names() -> List[str]:
    return sorted(BUILTIN_DIAGRAMS) + sorted(BUILTIN_ARCS)


def builtin(name: str) -> Union[Diagram, Arc]:
    if name in BUILTIN_DIAGRAMS:
        return BUILTIN_DIAGRAMS[name]()
    if name in BUILTIN_ARCS:
        return BUILTIN_ARCS[name]
    raise UnknownBuiltinError(name)
