"""Exact rational plane geometry: points, segments, intersections, cylinder lifting.

Everything here works on :class:`fractions.Fraction` coordinates; no
floating point value ever reaches a predicate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

Number = Union[int, Fraction, str]


def as_rational(value: Number) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"`` (or ``"p"`` for integers)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "Point":
        return cls(as_rational(x), as_rational(y))

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def shifted(self, dx: Fraction) -> "Point":
        return Point(self.x + dx, self.y)


def cross(o, a, b) -> Fraction:
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(o, a, b) -> int:
    c = cross(o, a, b)
    return (c > 0) - (c < 0)


def on_segment(p, a, b) -> bool:
    """True if ``p`` lies on the closed segment ``ab`` (collinearity assumed checked)."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_on_segment(p, a, b) -> bool:
    return orientation(a, b, p) == 0 and on_segment(p, a, b)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("degenerate segment: endpoints coincide")

    def shifted(self, dx: Fraction) -> "Segment":
        return Segment(self.a.shifted(dx), self.b.shifted(dx))


class Kind(enum.Enum):
    NONE = "none"
    PROPER = "proper-point"
    SHARED_ENDPOINT = "shared-endpoint"
    TOUCH = "touch"
    OVERLAP = "degenerate-overlap"


class IntersectionResult(NamedTuple):
    kind: Kind
    point: Optional[Point] = None


def segment_intersection(s1: Segment, s2: Segment) -> IntersectionResult:
    """Classify how two closed segments meet.

    ``PROPER`` means the relative interiors meet in exactly one point.
    ``TOUCH`` covers an endpoint of one segment lying in the interior of
    the other; the drawing layer treats it as degenerate.
    """
    return classify(s1.a, s1.b, s2.a, s2.b)


def classify(p1, p2, q1, q2) -> IntersectionResult:
    """:func:`segment_intersection` on raw coordinate pairs (ints or Fractions)."""
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)

    if d1 == d2 == d3 == d4 == 0:
        if p1[0] != p2[0]:
            lo1, hi1 = sorted((p1[0], p2[0]))
            lo2, hi2 = sorted((q1[0], q2[0]))
        else:
            lo1, hi1 = sorted((p1[1], p2[1]))
            lo2, hi2 = sorted((q1[1], q2[1]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return IntersectionResult(Kind.NONE)
        if lo < hi:
            return IntersectionResult(Kind.OVERLAP)
        shared = p1 if (p1 == q1 or p1 == q2) else p2
        return IntersectionResult(Kind.SHARED_ENDPOINT, _pt(shared))

    if p1 == q1 or p1 == q2:
        return IntersectionResult(Kind.SHARED_ENDPOINT, _pt(p1))
    if p2 == q1 or p2 == q2:
        return IntersectionResult(Kind.SHARED_ENDPOINT, _pt(p2))

    if d1 * d2 < 0 and d3 * d4 < 0:
        return IntersectionResult(Kind.PROPER, _line_meet(p1, p2, q1, q2))

    for p, a, b, flag in ((p1, q1, q2, d1), (p2, q1, q2, d2), (q1, p1, p2, d3), (q2, p1, p2, d4)):
        if flag == 0 and on_segment(p, a, b):
            return IntersectionResult(Kind.TOUCH, _pt(p))
    return IntersectionResult(Kind.NONE)


def _pt(p) -> Point:
    return Point(Fraction(p[0]), Fraction(p[1]))


def _line_meet(p1, p2, q1, q2) -> Point:
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    denom = rx * sy - ry * sx
    t = Fraction((q1[0] - p1[0]) * sy - (q1[1] - p1[1]) * sx) / denom
    return Point(p1[0] + t * rx, p1[1] + t * ry)


def segment_parameter(p, a, b) -> Fraction:
    """Position of ``p`` along ``ab`` as a fraction of its length (p assumed on the line)."""
    if a[0] != b[0]:
        return Fraction(p[0] - a[0]) / (b[0] - a[0])
    return Fraction(p[1] - a[1]) / (b[1] - a[1])


@dataclass(frozen=True)
class CylinderMetric:
    """x-periodic metric: the point (x, y) is identified with (x + width, y)."""

    width: Fraction

    def __post_init__(self):
        object.__setattr__(self, "width", as_rational(self.width))
        if self.width <= 0:
            raise ValueError("cylinder width must be positive")

    def canonical(self, p: Point) -> Point:
        """Representative of ``p`` with x in [0, width)."""
        w = self.width
        q = (p.x / w).__floor__()
        return Point(p.x - q * w, p.y)


def lift_to_strip(seg: Segment, metric: CylinderMetric) -> list[Segment]:
    """Pieces of the x-translates of ``seg`` (by -W, 0, +W) lying in the strip [0, W).

    A segment inside the strip comes back unchanged; one that spans the seam
    is split into two clipped pieces, one on each side of the strip.
    """
    w = metric.width
    pieces: list[Segment] = []
    for shift in (-w, Fraction(0), w):
        s = seg.shifted(shift)
        clipped = _clip_to_strip(s, Fraction(0), w)
        if clipped is not None:
            pieces.append(clipped)
    return pieces


def _clip_to_strip(s: Segment, lo: Fraction, hi: Fraction) -> Optional[Segment]:
    a, b = s.a, s.b
    if a.x > b.x:
        a, b = b, a
    if b.x <= lo or a.x >= hi:
        return None
    if a.x == b.x:
        return s
    def at(x):
        t = (x - a.x) / (b.x - a.x)
        return Point(x, a.y + t * (b.y - a.y))
    start = a if a.x >= lo else at(lo)
    end = b if b.x <= hi else at(hi)
    if start == end:
        return None
    return Segment(start, end)
