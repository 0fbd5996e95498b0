"""Generators for the two Horton-set drawings and their size bookkeeping."""

from __future__ import annotations

from typing import Sequence

from .errors import ResourceLimitError
from .exact import Point

MAX_SMALL_K = 16
MAX_CLASSIC_K = 8


def peak_height(i: int) -> int:
    """Largest y-coordinate of the compact drawing on 2^i points.

    0 for i = 1, else 2^(i(i-1)/2 - 1).
    """
    if i < 1:
        raise ValueError("peak_height is defined for i >= 1")
    if i == 1:
        return 0
    return 2 ** (i * (i - 1) // 2 - 1)


def level_lift(i: int) -> int:
    """Vertical offset applied to the odd half at doubling step i.

    0 for i = 1, else peak_height(i) - peak_height(i-1).
    """
    if i < 1:
        raise ValueError("level_lift is defined for i >= 1")
    if i == 1:
        return 0
    return peak_height(i) - peak_height(i - 1)


def small_horton(k: int, max_k: int = MAX_SMALL_K) -> list[Point]:
    """Compact Horton drawing on 2^k points.

    Built bottom-up from {(0, 0)}: step i replaces each point (x, y) by an
    even copy (2x, y) and an odd copy (2x+1, y + level_lift(i)).  The result
    has x-coordinates exactly 0..2^k-1 and peak y equal to peak_height(k),
    and comes out sorted by x because the two copies interleave.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > max_k:
        raise ResourceLimitError(f"small_horton cap exceeded: k={k} > max_k={max_k}")
    pts: list[Point] = [(0, 0)]
    for step in range(1, k + 1):
        lift = level_lift(step)
        nxt: list[Point] = []
        for x, y in pts:
            nxt.append((2 * x, y))
            nxt.append((2 * x + 1, y + lift))
        pts = nxt
    return pts


def classic_horton(k: int, max_k: int = MAX_CLASSIC_K) -> list[Point]:
    """Classical Horton drawing on 2^k points, with 3^(2^(i-1)) vertical offsets.

    Coordinates grow doubly exponentially, hence the low default cap.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > max_k:
        raise ResourceLimitError(f"classic_horton cap exceeded: k={k} > max_k={max_k}")
    if k == 0:
        return [(1, 1)]
    pts: list[Point] = [(1, 1), (2, 2)]
    for step in range(2, k + 1):
        lift = 3 ** (2 ** (step - 1))
        nxt: list[Point] = []
        for x, y in pts:
            nxt.append((2 * x - 1, y))
            nxt.append((2 * x, y + lift))
        pts = nxt
    return pts


def drawing_size(points: Sequence[Point]) -> int:
    """Maximum absolute value over all coordinates of the drawing."""
    if not points:
        raise ValueError("size of an empty drawing is undefined")
    return max(max(abs(x), abs(y)) for x, y in points)


def predicted_small_size(k: int) -> int:
    """Closed-form size of the compact drawing, 2^(k(k-1)/2 - 1), valid for k >= 4.

    For n = 2^k this equals (1/2) * n^((1/2) log2(n/2)).
    """
    if k < 4:
        raise ValueError("the size formula is only claimed for k >= 4 (n >= 16)")
    return 2 ** (k * (k - 1) // 2 - 1)
