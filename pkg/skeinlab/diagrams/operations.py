"""
Geometric operations on diagrams: cabling, boundary loops over arcs, the hook
loop, crossing smoothings and curl insertion.

Every operation that has to pick a small offset starts from a coarse value
and halves it until the result is a valid diagram with the expected
crossing structure, so results are deterministic.
"""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from skeinlab.diagrams.diagram import (
    Arc, Crossing, Diagram, DiagramError, OverChooser, PuncturedDisk, SegmentRef,
    a_smoothing_partner, curve_mask, find_intersections, segment_points, validate,
)
from skeinlab.diagrams.geometry import (
    Contact, Point, add, det, format_point, inside_or_on, intersect_segments, l1_norm, lerp,
    offset_polyline, point, polygon_mask, rot90, scale, segment_param, sub,
)

logger = logging.getLogger(__name__)

HALVINGS = 40

ARC_LEFT = Arc(((-4, 0), (-2, 0)))
ARC_MIDDLE = Arc(((-2, 0), (2, 0)))
ARC_RIGHT = Arc(((2, 0), (4, 0)))
ARC_VERTICAL = Arc(((0, -4), (0, 4)))

# Hook loop: upper half from (x_r, 0) over the top to (x_l, 0); the lower half is its mirror
HOOK_UPPER = (
    (Fraction(3, 7), Fraction(17, 6)),
    (Fraction(-13, 6), Fraction(37, 13)),
    (Fraction(-47, 13), Fraction(9, 7)),
)

# Positive kink in the frame (along the segment, to its left); K3 -> K4 passes over K0 -> K1
KINK = ((-3, 0), (1, 0), (1, 2), (-1, 2), (-1, -1), (3, -1), (4, 0))
KINK_CROSSING = (-1, 0)


def _inherit(old: Diagram, strands: Sequence[Sequence[Point]],
             extra: Optional[Dict[Point, SegmentRef]] = None) -> OverChooser:
    """Over chooser that keeps the over strand of every old crossing at the same point."""
    by_point = {c.at: c for c in old.crossings}
    extra = extra or {}

    def choose(at: Point, r1: SegmentRef, r2: SegmentRef) -> SegmentRef:
        if at in extra:
            return extra[at]
        if at not in by_point:
            raise DiagramError(f"unexpected new crossing at {format_point(at)}")
        o_a, o_b = old.segment(by_point[at].over)
        direction = sub(o_b, o_a)
        parallel = []
        for ref in (r1, r2):
            a, b = segment_points(strands, ref)
            if det(direction, sub(b, a)) == 0:
                parallel.append(ref)
        if len(parallel) != 1:
            raise DiagramError(f"cannot carry the crossing at {format_point(at)} over")
        return parallel[0]

    return choose


def _rebuild(strands: Sequence[Sequence[Point]], old: Diagram,
             extra: Optional[Dict[Point, SegmentRef]] = None) -> Diagram:
    return Diagram.from_strands(strands, _inherit(old, strands, extra))


def _box_contains(points: Sequence[Point], p: Point) -> bool:
    xs = [q[0] for q in points]
    ys = [q[1] for q in points]
    return min(xs) <= p[0] <= max(xs) and min(ys) <= p[1] <= max(ys)


# Cabling

def _cable_at(d: Diagram, mult: Sequence[int], disk: PuncturedDisk, delta: Fraction,
              masks: Sequence[int]) -> Optional[Diagram]:
    strands: List[Tuple[Point, ...]] = []
    origin: List[int] = []
    for s, (strand, j) in enumerate(zip(d.strands, mult)):
        for c in range(j):
            strands.append(tuple(offset_polyline(strand, delta * (2 * c - (j - 1)) / 2)))
            origin.append(s)
        if j >= 2:
            low = offset_polyline(strand, -delta * (j - 1) / 2)
            high = offset_polyline(strand, delta * (j - 1) / 2)
            n = len(strand)
            for k in range(n):
                quad = (low[k], low[(k + 1) % n], high[(k + 1) % n], high[k])
                if any(inside_or_on(quad, p) for p in disk.punctures):
                    return None

    over_of = {frozenset((c.over, c.under)): c.over for c in d.crossings}
    expected = Counter({frozenset((c.over, c.under)): mult[c.over.strand] * mult[c.under.strand]
                        for c in d.crossings})
    found: Counter = Counter()
    crossings = []
    for at, r1, r2 in find_intersections(strands):
        k1 = SegmentRef(origin[r1.strand], r1.segment)
        k2 = SegmentRef(origin[r2.strand], r2.segment)
        pair = frozenset((k1, k2))
        if k1 == k2 or pair not in over_of:
            return None
        found[pair] += 1
        over = r1 if k1 == over_of[pair] else r2
        crossings.append(Crossing(at, over, r2 if over == r1 else r1))
    if found != expected:
        return None
    for i, strand in enumerate(strands):
        if curve_mask(strand, disk) != masks[origin[i]]:
            return None
    result = Diagram(tuple(strands), tuple(crossings))
    validate(result, disk)
    return result


def cable(d: Diagram, multiplicities: Sequence[int], disk: Optional[PuncturedDisk] = None) -> Diagram:
    """
    Replace every component by parallel copies (blackboard framing).

    Args:
        d: Diagram to cable
        multiplicities: Copies per component; 0 deletes the component

    Returns:
        Diagram whose crossings between copies inherit the over strand of the original crossing

    Raises:
        DiagramError: no offset small enough gives an embedded cable
    """
    disk = disk or PuncturedDisk.standard()
    mult = list(multiplicities)
    if len(mult) != d.component_count:
        raise ValueError(f"{len(mult)} multiplicities for {d.component_count} components")
    if any(j < 0 for j in mult):
        raise ValueError(f"multiplicities must be non-negative, got {mult}")
    if all(j == 1 for j in mult):
        return d
    masks = [curve_mask(strand, disk) for strand in d.strands]
    delta = Fraction(1, 8)
    for _ in range(HALVINGS):
        try:
            result = _cable_at(d, mult, disk, delta, masks)
        except DiagramError as exc:
            logger.debug(f"Cable offset {delta} rejected: {exc}")
            result = None
        if result is not None:
            logger.debug(f"Cabled {d.component_count} components {mult} with offset {delta}")
            return result
        delta /= 2
    raise DiagramError(f"no cable offset works for multiplicities {mult}")


# Loops over arcs

def _arc_hits(d: Diagram, arc: Arc) -> List[Tuple[int, Fraction, Point]]:
    hits = []
    for k, a, b in arc.segments():
        for ref, c, e in d.segments():
            hit = intersect_segments(a, b, c, e)
            if hit.kind is Contact.DEGENERATE:
                raise DiagramError(
                    f"arc segment {format_point(a)}-{format_point(b)} is not transversal to strand "
                    f"{ref.strand} at {format_point(c)}-{format_point(e)}"
                )
            if hit.kind is Contact.PROPER:
                hits.append((k, hit.s, hit.at))
    return sorted(hits)


def arc_count(d: Diagram, arc: Arc) -> int:
    """Intersections of the diagram with the arc; an arc through a double point meets it twice."""
    return len(_arc_hits(d, arc))


def _trim(arc: Arc, hits: Sequence[Tuple[int, Fraction, Point]]) -> List[Point]:
    pts = list(arc.points)
    last = len(pts) - 2
    first_hits = [s for k, s, _ in hits if k == 0]
    last_hits = [s for k, s, _ in hits if k == last]
    start = min(first_hits) / 2 if first_hits else Fraction(1, 4)
    end = (max(last_hits) + 1) / 2 if last_hits else Fraction(3, 4)
    return [lerp(pts[0], pts[1], start)] + pts[1:-1] + [lerp(pts[-2], pts[-1], end)]


def _band_at(d: Diagram, spine: Sequence[Point], h: Fraction, over_side: int, hit_count: int,
             disk: PuncturedDisk) -> Optional[Diagram]:
    m = len(spine)
    left = offset_polyline(spine, h, is_closed=False)
    right = offset_polyline(spine, -h, is_closed=False)
    loop = tuple(left + right[::-1])
    if polygon_mask(loop, disk.punctures) != 0:
        return None
    index = len(d.strands)
    strands = d.strands + (loop,)
    old = {c.at: c for c in d.crossings}
    crossings = []
    band_crossings = 0
    for at, r1, r2 in find_intersections(strands):
        if at in old:
            crossings.append(old[at])
            continue
        band, other = (r1, r2) if r1.strand == index else (r2, r1)
        if band.strand != index or band.segment in (m - 1, 2 * m - 1):
            return None
        band_crossings += 1
        band_over = (band.segment < m - 1) == (over_side > 0)
        crossings.append(Crossing(at, band, other) if band_over else Crossing(at, other, band))
    if band_crossings != 2 * hit_count:
        return None
    result = Diagram(strands, tuple(crossings))
    validate(result, disk)
    return result


def attach_loop(d: Diagram, arc: Arc, disk: Optional[PuncturedDisk] = None,
                over_side: int = 1) -> Diagram:
    """
    Add the boundary loop of a thin band around the arc.

    One side of the band passes over every strand it meets and the other
    side under; over_side = 1 puts the left side (seen along the arc) on top.

    Raises:
        DiagramError: the arc is not transversal to d, or no band width works
    """
    if over_side not in (1, -1):
        raise ValueError(f"over_side must be 1 or -1, got {over_side}")
    disk = disk or PuncturedDisk.standard()
    hits = _arc_hits(d, arc)
    spine = _trim(arc, hits)
    h = Fraction(1, 16)
    for _ in range(HALVINGS):
        try:
            result = _band_at(d, spine, h, over_side, len(hits), disk)
        except DiagramError as exc:
            logger.debug(f"Loop width {h} rejected: {exc}")
            result = None
        if result is not None:
            logger.debug(f"Attached a loop crossing {len(hits)} strands twice with width {h}")
            return result
        h /= 2
    raise DiagramError(f"no loop width works around the arc from {format_point(arc.points[0])}")


def hook_loop(d: Diagram) -> Tuple[Point, ...]:
    """The hook polygon for d, tucked between the arcs' outermost hits and the punctures."""
    middle = [p[0] for _, _, p in _arc_hits(d, ARC_MIDDLE)]
    left = [p[0] for _, _, p in _arc_hits(d, ARC_LEFT)]
    x_right = (max(middle) + 2) / 2 if middle else Fraction(1)
    x_left = (min(left) - 4) / 2 if left else Fraction(-3)
    upper = [point(x_right, 0)] + list(HOOK_UPPER) + [point(x_left, 0)]
    lower = [(x, -y) for x, y in reversed(HOOK_UPPER)]
    return tuple(upper + lower)


def attach_hook_loop(d: Diagram, disk: Optional[PuncturedDisk] = None) -> Diagram:
    """
    Add the hook loop: a curve around the first puncture that passes over d
    above the horizontal axis and under it below.
    """
    disk = disk or PuncturedDisk.standard()
    loop = hook_loop(d)
    index = len(d.strands)
    strands = d.strands + (loop,)
    old = {c.at: c for c in d.crossings}
    crossings = []
    for at, r1, r2 in find_intersections(strands):
        if at in old:
            crossings.append(old[at])
            continue
        hook, other = (r1, r2) if r1.strand == index else (r2, r1)
        upper = hook.segment < len(HOOK_UPPER) + 1
        crossings.append(Crossing(at, hook, other) if upper else Crossing(at, other, hook))
    result = Diagram(strands, tuple(crossings))
    validate(result, disk)
    return result


# Smoothing and curls

def _retrace(sequences: Sequence[Sequence[Point]], cut: Sequence[Tuple[Point, Point]],
             chords: Sequence[Tuple[Point, Point]]) -> List[Tuple[Point, ...]]:
    """Re-read a degree-2 point graph as closed polylines, in strand order."""
    neighbours: Dict[Point, List[Point]] = {}
    order: List[Point] = []
    removed = {frozenset(pair) for pair in cut}

    def link(a: Point, b: Point):
        neighbours.setdefault(a, []).append(b)
        neighbours.setdefault(b, []).append(a)

    for seq in sequences:
        order.extend(seq)
        for i, a in enumerate(seq):
            b = seq[(i + 1) % len(seq)]
            if frozenset((a, b)) not in removed:
                link(a, b)
    for a, b in chords:
        link(a, b)

    seen = set()
    strands = []
    for start in order:
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = start, neighbours[start][0]
        while cur != start:
            walk.append(cur)
            seen.add(cur)
            a, b = neighbours[cur]
            prev, cur = cur, (b if a == prev else a)
        strands.append(tuple(walk))
    return strands


def _smooth_at(d: Diagram, k: int, joins: Sequence[Tuple[int, int]], eta: Fraction,
               disk: PuncturedDisk) -> Diagram:
    c = d.crossings[k]
    ends: Dict[int, Point] = {}
    inserts: Dict[SegmentRef, Tuple[Point, Point]] = {}
    for ref, slot_out, slot_in in ((c.over, 0, 1), (c.under, 2, 3)):
        a, b = d.segment(ref)
        s = segment_param(c.at, a, b)
        ends[slot_in] = lerp(a, b, s - eta)
        ends[slot_out] = lerp(a, b, s + eta)
        inserts[ref] = (ends[slot_in], ends[slot_out])

    sequences = []
    for i, strand in enumerate(d.strands):
        seq: List[Point] = []
        for v, vertex in enumerate(strand):
            seq.append(vertex)
            if SegmentRef(i, v) in inserts:
                seq.extend(inserts[SegmentRef(i, v)])
        sequences.append(seq)
    chords = [(ends[p], ends[q]) for p, q in joins]
    strands = _retrace(sequences, list(inserts.values()), chords)
    result = _rebuild(strands, d)
    if result.crossing_count != d.crossing_count - 1:
        raise DiagramError(f"smoothing the crossing at {format_point(c.at)} changed other crossings")
    validate(result, disk)
    return result


def smooth_crossing(d: Diagram, k: int, kind: str, disk: Optional[PuncturedDisk] = None) -> Diagram:
    """
    Resolve crossing k geometrically.

    Args:
        kind: 'A' for the smoothing weighted t, 'B' for the one weighted t^-1

    Returns:
        The diagram with crossing k replaced by two short chords; the other crossings keep their over strands
    """
    if kind not in ('A', 'B'):
        raise ValueError(f"smoothing kind must be 'A' or 'B', got {kind!r}")
    if not 0 <= k < d.crossing_count:
        raise ValueError(f"crossing index {k} out of range for {d.crossing_count} crossings")
    disk = disk or PuncturedDisk.standard()
    c = d.crossings[k]
    s = a_smoothing_partner(d, c)
    joins = ((0, s), (1, 5 - s)) if kind == 'A' else ((0, 5 - s), (1, s))

    gaps = []
    for ref in (c.over, c.under):
        a, b = d.segment(ref)
        here = segment_param(c.at, a, b)
        gaps.extend([here, 1 - here])
        for other in d.crossings:
            if other is not c and ref in (other.over, other.under):
                gaps.append(abs(segment_param(other.at, a, b) - here))
    eta = min(gaps) / 2
    for _ in range(HALVINGS):
        try:
            return _smooth_at(d, k, joins, eta, disk)
        except DiagramError as exc:
            logger.debug(f"Smoothing width {eta} rejected: {exc}")
        eta /= 2
    raise DiagramError(f"cannot smooth the crossing at {format_point(c.at)}")


def add_curl(d: Diagram, strand: int, segment: int, disk: Optional[PuncturedDisk] = None) -> Diagram:
    """Insert one positive kink at the midpoint of a segment; its value factor is -t^3."""
    disk = disk or PuncturedDisk.standard()
    points = d.strands[strand]
    a, b = d.segment(SegmentRef(strand, segment))
    direction = sub(b, a)
    length = l1_norm(direction)
    along = scale(direction, 1 / length)
    left = rot90(along)
    middle = lerp(a, b, Fraction(1, 2))

    def place(size: Fraction, p: int, q: int) -> Point:
        return add(middle, add(scale(along, size * p), scale(left, size * q)))

    e = length / 16
    for _ in range(HALVINGS):
        kink = [place(e, p, q) for p, q in KINK]
        if not any(_box_contains(kink, p) for p in disk.punctures):
            strands = list(d.strands)
            strands[strand] = tuple(points[:segment + 1]) + tuple(kink) + tuple(points[segment + 1:])
            over = {place(e, *KINK_CROSSING): SegmentRef(strand, segment + 4)}
            try:
                result = _rebuild(strands, d, over)
                if result.crossing_count == d.crossing_count + 1:
                    validate(result, disk)
                    return result
            except DiagramError as exc:
                logger.debug(f"Curl size {e} rejected: {exc}")
        e /= 2
    raise DiagramError(f"cannot place a curl on segment {segment} of strand {strand}")
