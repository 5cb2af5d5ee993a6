"""
Exact planar geometry on rational points.

All coordinates are Fractions; floats are refused so that every
intersection and containment test is decided exactly.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

Number = Union[int, str, Fraction]
Point = Tuple[Fraction, Fraction]


def to_fraction(value: Number) -> Fraction:
    """Parse an int, a Fraction or 'p/q' text. Floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"coordinates must be exact (int, Fraction or 'p/q' text), got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if '.' in text or 'e' in text.lower():
            raise ValueError(f"coordinate text must be 'p/q', got {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"coordinate text must be 'p/q', got {value!r}") from None
    raise TypeError(f"cannot read a coordinate from {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def point(x: Number, y: Number) -> Point:
    return (to_fraction(x), to_fraction(y))


def format_point(p: Point) -> str:
    return f"({format_fraction(p[0])}, {format_fraction(p[1])})"


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Point, s: Fraction) -> Point:
    return (a[0] * s, a[1] * s)


def det(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def orientation(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of (o, a, b); positive for a left turn."""
    return det(sub(a, o), sub(b, o))


def l1_norm(v: Point) -> Fraction:
    return abs(v[0]) + abs(v[1])


def rot90(v: Point) -> Point:
    return (-v[1], v[0])


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if p lies on the closed segment ab."""
    if orientation(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_param(p: Point, a: Point, b: Point) -> Fraction:
    """Parameter of p on ab, assuming p lies on the line."""
    d = sub(b, a)
    return dot(sub(p, a), d) / dot(d, d)


def lerp(a: Point, b: Point, s: Fraction) -> Point:
    return (a[0] + (b[0] - a[0]) * s, a[1] + (b[1] - a[1]) * s)


class Contact(Enum):
    NONE = 'none'
    PROPER = 'proper'
    DEGENERATE = 'degenerate'


class Intersection(NamedTuple):
    kind: Contact
    at: Optional[Point] = None
    s: Optional[Fraction] = None
    t: Optional[Fraction] = None


def intersect_segments(p1: Point, p2: Point, q1: Point, q2: Point) -> Intersection:
    """
    Classify how the closed segments p1p2 and q1q2 meet.

    PROPER means one transversal crossing interior to both segments; any
    touching at an endpoint or collinear overlap is DEGENERATE.
    """
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        s = d1 / (d1 - d2)
        t = d3 / (d3 - d4)
        return Intersection(Contact.PROPER, lerp(p1, p2, s), s, t)
    if (d1 == 0 and on_segment(p1, q1, q2)) or (d2 == 0 and on_segment(p2, q1, q2)) \
            or (d3 == 0 and on_segment(q1, p1, p2)) or (d4 == 0 and on_segment(q2, p1, p2)):
        return Intersection(Contact.DEGENERATE)
    return Intersection(Contact.NONE)


def ray_parity(a: Point, b: Point, c: Point) -> int:
    """1 if segment ab crosses the rightward horizontal ray from c (half-open rule)."""
    if (a[1] > c[1]) == (b[1] > c[1]):
        return 0
    x_cross = a[0] + (c[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
    return 1 if x_cross > c[0] else 0


def path_mask(points: Sequence[Point], centers: Sequence[Point]) -> int:
    """
    Bitmask of ray parities of an open path, bit i for centers[i].

    Masks add (xor) over concatenated paths, and a closed path's mask is the
    set of centers it winds around an odd number of times.
    """
    mask = 0
    for i, c in enumerate(centers):
        parity = 0
        for a, b in zip(points, points[1:]):
            parity ^= ray_parity(a, b, c)
        if parity:
            mask |= 1 << i
    return mask


def closed(points: Sequence[Point]) -> List[Point]:
    return list(points) + [points[0]]


def polygon_mask(points: Sequence[Point], centers: Sequence[Point]) -> int:
    return path_mask(closed(points), centers)


def inside_or_on(polygon: Sequence[Point], p: Point) -> bool:
    ring = closed(polygon)
    if any(on_segment(p, a, b) for a, b in zip(ring, ring[1:])):
        return True
    return path_mask(ring, [p]) == 1


def _normal(a: Point, b: Point) -> Tuple[Point, Point]:
    d = sub(b, a)
    n = scale(rot90(d), 1 / l1_norm(d))
    return d, n


def offset_polyline(points: Sequence[Point], s: Fraction, is_closed: bool = True) -> List[Point]:
    """
    Push a polyline sideways by s along its left normals, with mitred corners.

    Normals are L1-normalized so the result stays rational. The vertex count
    is preserved, which keeps segment indices aligned with the original.
    """
    if s == 0:
        return list(points)
    n_pts = len(points)
    if is_closed:
        segs = [_normal(points[i], points[(i + 1) % n_pts]) for i in range(n_pts)]
    else:
        segs = [_normal(points[i], points[i + 1]) for i in range(n_pts - 1)]
    out = []
    for i, v in enumerate(points):
        if is_closed:
            before, after = segs[i - 1], segs[i]
        elif i == 0:
            before = after = segs[0]
        elif i == n_pts - 1:
            before = after = segs[-1]
        else:
            before, after = segs[i - 1], segs[i]
        (d_prev, n_prev), (d_next, n_next) = before, after
        turn = det(d_prev, d_next)
        if turn == 0:
            out.append(add(v, scale(n_next, s)))
            continue
        lam = s * det(sub(n_next, n_prev), d_next) / turn
        out.append(add(add(v, scale(n_prev, s)), scale(d_prev, lam)))
    return out
