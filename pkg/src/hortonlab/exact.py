"""Exact geometric kernel: integer orientation tests and rational line intersections.

Everything here runs on Python's arbitrary-precision integers and
``fractions.Fraction``; no operation ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Point = tuple[int, int]
Line = tuple[Point, Point]


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of (o, a, b); positive iff o->a->b turns counterclockwise."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(p: Point, q: Point, r: Point) -> int:
    """Orientation of the triple (p, q, r): -1 when r lies to the left of the
    directed line from p to q, +1 when it lies to the right, 0 when collinear.

    Left is -1 on purpose.  This is the negation of the common
    counterclockwise-positive convention; every module in this package relies
    on this sign choice.
    """
    c = cross(p, q, r)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def _eastward(line: Line) -> tuple[Point, Point]:
    a, b = line
    if a == b:
        raise ValueError("degenerate line: the two defining points coincide")
    if a[0] == b[0]:
        raise ValueError("vertical line has no above/below")
    return (a, b) if a[0] < b[0] else (b, a)


def point_strictly_below(line: Line, r: Point) -> bool:
    """True iff r lies strictly below the non-vertical line through the given pair."""
    a, b = _eastward(line)
    return orientation(a, b, r) == 1


def point_strictly_above(line: Line, r: Point) -> bool:
    """True iff r lies strictly above the non-vertical line through the given pair."""
    a, b = _eastward(line)
    return orientation(a, b, r) == -1


def line_meet_vertical(line: Line, x0: Fraction | int) -> Fraction:
    """Exact y-coordinate of the intersection of ``line`` with the vertical line x = x0."""
    a, b = line
    if a == b:
        raise ValueError("degenerate line: the two defining points coincide")
    if a[0] == b[0]:
        raise ValueError("vertical line does not meet a vertical line in a single point")
    x0 = Fraction(x0)
    return Fraction(a[1]) + Fraction(b[1] - a[1], b[0] - a[0]) * (x0 - a[0])


def find_collinear_triple(points: Sequence[Point]) -> Optional[tuple[int, int, int]]:
    """First (i, j, k) with points[i], points[j], points[k] collinear, or None."""
    pts = list(points)
    n = len(pts)
    for i in range(n - 2):
        px, py = pts[i]
        for j in range(i + 1, n - 1):
            dx = pts[j][0] - px
            dy = pts[j][1] - py
            for k in range(j + 1, n):
                if dx * (pts[k][1] - py) == dy * (pts[k][0] - px):
                    return (i, j, k)
    return None


def general_position(points: Sequence[Point]) -> bool:
    """True iff no three of the points are collinear."""
    return find_collinear_triple(points) is None
