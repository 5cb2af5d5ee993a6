"""
Link diagrams in a punctured disk.

A diagram is a tuple of closed polylines (strands) with exact rational
vertices and the list of their crossings. Strand i has segments
0..len-1, segment k running from vertex k to vertex k+1 (cyclically).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterator, List, NamedTuple, Sequence, Tuple

from skeinlab.algebra.skein_poly import generator_names
from skeinlab.config import Config
from skeinlab.diagrams.geometry import (
    Contact, Number, Point, det, dot, format_fraction, format_point, intersect_segments,
    on_segment, orientation, point, polygon_mask, sub, to_fraction,
)


class DiagramError(ValueError):
    """Invalid diagram geometry; the message names the offending coordinates."""


@dataclass(frozen=True)
class PuncturedDisk:
    outer_radius: Fraction
    punctures: Tuple[Point, ...] = ()

    def __post_init__(self):
        radius = to_fraction(self.outer_radius)
        punctures = tuple(point(*p) for p in self.punctures)
        object.__setattr__(self, 'outer_radius', radius)
        object.__setattr__(self, 'punctures', punctures)
        if radius <= 0:
            raise DiagramError(f"outer radius must be positive, got {format_fraction(radius)}")
        if len(set(punctures)) != len(punctures):
            raise DiagramError("punctures must be pairwise distinct")
        for p in punctures:
            if not self.contains(p):
                raise DiagramError(f"puncture {format_point(p)} is not strictly inside the disk")

    @classmethod
    def standard(cls) -> 'PuncturedDisk':
        """Radius 4 with punctures at (-2, 0) and (2, 0)."""
        return cls(Config.DISK_RADIUS, Config.DISK_PUNCTURES)

    def contains(self, p: Point) -> bool:
        return p[0] * p[0] + p[1] * p[1] < self.outer_radius * self.outer_radius

    @property
    def puncture_count(self) -> int:
        return len(self.punctures)

    @property
    def class_count(self) -> int:
        return 2 ** len(self.punctures)

    @property
    def generators(self) -> Tuple[str, ...]:
        return generator_names(len(self.punctures))


class SegmentRef(NamedTuple):
    strand: int
    segment: int


@dataclass(frozen=True)
class Crossing:
    at: Point
    over: SegmentRef
    under: SegmentRef

    def mirrored(self) -> 'Crossing':
        return Crossing(self.at, self.under, self.over)


OverChooser = Callable[[Point, SegmentRef, SegmentRef], SegmentRef]


def _check_strand(index: int, strand: Sequence[Point]):
    if len(strand) < 3:
        raise DiagramError(f"strand {index} needs at least 3 vertices, has {len(strand)}")
    n = len(strand)
    for k in range(n):
        a, b, c = strand[k - 1], strand[k], strand[(k + 1) % n]
        if a == b:
            raise DiagramError(f"strand {index} has a zero-length segment at {format_point(b)}")
        if orientation(a, b, c) == 0 and dot(sub(b, a), sub(c, b)) < 0:
            raise DiagramError(f"strand {index} doubles back on itself at {format_point(b)}")


def segment_points(strands: Sequence[Sequence[Point]], ref: SegmentRef) -> Tuple[Point, Point]:
    strand = strands[ref.strand]
    return strand[ref.segment], strand[(ref.segment + 1) % len(strand)]


def iter_segments(strands: Sequence[Sequence[Point]]) -> Iterator[Tuple[SegmentRef, Point, Point]]:
    for i, strand in enumerate(strands):
        n = len(strand)
        for k in range(n):
            yield SegmentRef(i, k), strand[k], strand[(k + 1) % n]


def _adjacent(r1: SegmentRef, r2: SegmentRef, strands: Sequence[Sequence[Point]]) -> bool:
    if r1.strand != r2.strand:
        return False
    n = len(strands[r1.strand])
    return (r1.segment - r2.segment) % n in (1, n - 1)


def find_intersections(strands: Sequence[Sequence[Point]]) -> List[Tuple[Point, SegmentRef, SegmentRef]]:
    """
    All transversal intersections between segments, sorted by point.

    Raises:
        DiagramError: on any tangency, vertex contact, overlap or triple point
    """
    for i, strand in enumerate(strands):
        _check_strand(i, strand)
    segments = list(iter_segments(strands))
    found: Dict[Point, Tuple[SegmentRef, SegmentRef]] = {}
    for x, (r1, a1, b1) in enumerate(segments):
        for r2, a2, b2 in segments[x + 1:]:
            if _adjacent(r1, r2, strands):
                continue
            hit = intersect_segments(a1, b1, a2, b2)
            if hit.kind is Contact.NONE:
                continue
            if hit.kind is Contact.DEGENERATE:
                raise DiagramError(
                    f"segments {format_point(a1)}-{format_point(b1)} and "
                    f"{format_point(a2)}-{format_point(b2)} touch non-transversally"
                )
            if hit.at in found:
                raise DiagramError(f"triple point at {format_point(hit.at)}")
            found[hit.at] = (r1, r2)
    return [(at, r1, r2) for at, (r1, r2) in sorted(found.items())]


@dataclass(frozen=True)
class Diagram:
    strands: Tuple[Tuple[Point, ...], ...]
    crossings: Tuple[Crossing, ...] = ()

    @classmethod
    def from_strands(cls, strands: Sequence[Sequence[Sequence[Number]]],
                     over_of: OverChooser = None) -> 'Diagram':
        """
        Build a diagram, computing its crossings from the geometry.

        Args:
            strands: Closed polylines as vertex lists
            over_of: Picks the over segment at each intersection; required if there are any

        Raises:
            DiagramError: on degenerate geometry or an over choice that is neither segment
        """
        exact = tuple(tuple(point(*v) for v in strand) for strand in strands)
        crossings = []
        for at, r1, r2 in find_intersections(exact):
            if over_of is None:
                raise DiagramError(f"no over/under choice given for the crossing at {format_point(at)}")
            over = over_of(at, r1, r2)
            if over not in (r1, r2):
                raise DiagramError(f"over choice {over} is not one of {r1}, {r2} at {format_point(at)}")
            crossings.append(Crossing(at, over, r2 if over == r1 else r1))
        return cls(exact, tuple(crossings))

    @classmethod
    def empty(cls) -> 'Diagram':
        return cls(())

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.strands)

    def segment(self, ref: SegmentRef) -> Tuple[Point, Point]:
        return segment_points(self.strands, ref)

    def segments(self) -> Iterator[Tuple[SegmentRef, Point, Point]]:
        return iter_segments(self.strands)


def over_segments(over: Sequence[SegmentRef]) -> OverChooser:
    """Over chooser from a set of segments that are over wherever they cross."""
    chosen = frozenset(over)

    def choose(at: Point, r1: SegmentRef, r2: SegmentRef) -> SegmentRef:
        if (r1 in chosen) == (r2 in chosen):
            raise DiagramError(f"ambiguous over/under at {format_point(at)}")
        return r1 if r1 in chosen else r2

    return choose


def over_strands(order: Sequence[int]) -> OverChooser:
    """Over chooser for diagrams layered by strand; earlier strands in `order` lie on top."""
    rank = {s: i for i, s in enumerate(order)}

    def choose(at: Point, r1: SegmentRef, r2: SegmentRef) -> SegmentRef:
        if r1.strand == r2.strand or r1.strand not in rank or r2.strand not in rank:
            raise DiagramError(f"cannot layer the crossing at {format_point(at)}")
        return r1 if rank[r1.strand] < rank[r2.strand] else r2

    return choose


def over_by_point(choices: Dict[Point, int]) -> OverChooser:
    """Over chooser naming the over strand at each crossing point."""
    def choose(at: Point, r1: SegmentRef, r2: SegmentRef) -> SegmentRef:
        if at not in choices:
            raise DiagramError(f"no over strand given for the crossing at {format_point(at)}")
        strand = choices[at]
        if r1.strand == strand and r2.strand != strand:
            return r1
        if r2.strand == strand and r1.strand != strand:
            return r2
        raise DiagramError(f"strand {strand} does not decide the crossing at {format_point(at)}")

    return choose


def validate(d: Diagram, disk: PuncturedDisk):
    """
    Check every diagram invariant against the disk.

    Raises:
        DiagramError: naming the first violated condition and its coordinates
    """
    for i, strand in enumerate(d.strands):
        for v in strand:
            if not disk.contains(v):
                raise DiagramError(f"vertex {format_point(v)} of strand {i} is not inside the disk")
    for ref, a, b in d.segments():
        for p in disk.punctures:
            if on_segment(p, a, b):
                raise DiagramError(f"strand {ref.strand} passes through the puncture {format_point(p)}")
    expected = find_intersections(d.strands)
    if len(expected) != len(d.crossings):
        raise DiagramError(
            f"diagram lists {len(d.crossings)} crossings but its strands meet {len(expected)} times"
        )
    for (at, r1, r2), c in zip(expected, d.crossings):
        if c.at != at:
            raise DiagramError(f"crossing list does not match the intersection at {format_point(at)}")
        if {c.over, c.under} != {r1, r2}:
            raise DiagramError(f"crossing at {format_point(at)} names the wrong segments")


def curve_mask(strand: Sequence[Point], disk: PuncturedDisk) -> int:
    """Bitmask of the punctures an embedded closed curve encloses."""
    n = len(strand)
    for k in range(n):
        for p in disk.punctures:
            if on_segment(p, strand[k], strand[(k + 1) % n]):
                raise DiagramError(f"curve passes through the puncture {format_point(p)}")
    return polygon_mask(strand, disk.punctures)


def classify_component(strand: Sequence[Point], disk: PuncturedDisk) -> FrozenSet[int]:
    """Enclosed punctures as 1-based indices; the empty set is the trivial curve."""
    mask = curve_mask(strand, disk)
    return frozenset(i + 1 for i in range(disk.puncture_count) if mask >> i & 1)


def mirror(d: Diagram) -> Diagram:
    """Exchange over and under at every crossing."""
    return Diagram(d.strands, tuple(c.mirrored() for c in d.crossings))


def rotate180(d: Diagram) -> Diagram:
    strands = tuple(tuple((-x, -y) for x, y in strand) for strand in d.strands)
    crossings = sorted(
        (Crossing((-c.at[0], -c.at[1]), c.over, c.under) for c in d.crossings),
        key=lambda c: c.at,
    )
    return Diagram(strands, tuple(crossings))


def transform(d: Diagram, fn: Callable[[Point], Point]) -> Diagram:
    """Apply an orientation-preserving affine map; crossings are re-sorted."""
    strands = tuple(tuple(fn(v) for v in strand) for strand in d.strands)
    crossings = sorted((Crossing(fn(c.at), c.over, c.under) for c in d.crossings), key=lambda c: c.at)
    return Diagram(strands, tuple(crossings))


def union(first: Diagram, second: Diagram) -> Diagram:
    """
    Disjoint union; strands of `second` follow those of `first`.

    Raises:
        DiagramError: the two diagrams meet
    """
    shift = len(first.strands)
    strands = first.strands + second.strands
    moved = tuple(
        Crossing(c.at, SegmentRef(c.over.strand + shift, c.over.segment),
                 SegmentRef(c.under.strand + shift, c.under.segment))
        for c in second.crossings
    )
    expected = len(first.crossings) + len(second.crossings)
    if len(find_intersections(strands)) != expected:
        raise DiagramError("diagrams in a union must not meet")
    return Diagram(strands, tuple(sorted(first.crossings + moved, key=lambda c: c.at)))


@dataclass(frozen=True)
class Arc:
    """
    Properly embedded arc, given as an open polyline from one boundary
    component (a puncture or the outer circle) to another.
    """

    points: Tuple[Point, ...]

    def __post_init__(self):
        points = tuple(point(*v) for v in self.points)
        object.__setattr__(self, 'points', points)
        if len(points) < 2:
            raise DiagramError("an arc needs at least two points")
        for a, b in zip(points, points[1:]):
            if a == b:
                raise DiagramError(f"arc has a zero-length segment at {format_point(a)}")

    def segments(self) -> Iterator[Tuple[int, Point, Point]]:
        for k, (a, b) in enumerate(zip(self.points, self.points[1:])):
            yield k, a, b


def a_smoothing_partner(d: Diagram, c: Crossing) -> int:
    """
    Slot joined to the over strand's outgoing end by the A-smoothing.

    Slots are 0 over-out, 1 over-in, 2 under-out, 3 under-in. Turning the over
    strand counterclockwise onto the under strand sweeps the A regions.
    """
    o_a, o_b = d.segment(c.over)
    u_a, u_b = d.segment(c.under)
    return 3 if det(sub(o_b, o_a), sub(u_b, u_a)) > 0 else 2
