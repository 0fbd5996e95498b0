import random

import pytest

from hortonlab import (
    ResourceLimitError,
    count_empty_triangles,
    cross,
    largest_empty_hole,
    min_drawing_search,
    order_type,
    small_horton,
)
from oracles import naive_empty_triangles, random_general_position, subset_hole_oracle


def test_triangle_count_trivia():
    assert count_empty_triangles([(0, 0), (5, 1), (2, 9)]) == 1
    assert count_empty_triangles([(0, 0), (4, 0), (4, 4), (0, 4)]) == 4
    assert count_empty_triangles([(0, 0), (1, 5)]) == 0


def test_triangle_count_matches_naive_on_compact_drawings(small):
    for k in range(2, 5):
        pts = small(k)
        assert count_empty_triangles(pts) == naive_empty_triangles(pts)


def test_triangle_count_matches_naive_on_random_sets():
    rng = random.Random(97)
    for _ in range(10):
        pts = random_general_position(rng.randint(4, 24), rng)
        assert count_empty_triangles(pts) == naive_empty_triangles(pts)


def test_triangle_count_handles_shared_x():
    pts = [(0, 0), (0, 5), (3, 1), (5, 2), (2, -4)]
    assert count_empty_triangles(pts) == naive_empty_triangles(pts)


def test_triangle_count_frozen_values(small):
    assert count_empty_triangles(small(4)) == 256
    assert count_empty_triangles(small(6)) == 6336


def test_triangle_count_collinear_rejected():
    with pytest.raises(ValueError):
        count_empty_triangles([(0, 0), (1, 1), (2, 2), (5, 0)])


def test_hole_trivia():
    assert largest_empty_hole([(0, 0), (5, 1), (2, 9)]).max_hole == 3
    with pytest.raises(ValueError):
        largest_empty_hole([(0, 0), (1, 1)])
    with pytest.raises(ResourceLimitError):
        largest_empty_hole([(0, 0), (5, 1), (2, 9), (9, 9)], max_n=3)
    with pytest.raises(ValueError):
        largest_empty_hole([(0, 0), (1, 1), (2, 2), (5, 0)])


def test_hole_matches_subset_oracle_on_random_sets():
    rng = random.Random(11)
    for _ in range(8):
        pts = random_general_position(rng.randint(5, 11), rng, lim=40)
        assert largest_empty_hole(pts).max_hole == subset_hole_oracle(pts)


def test_hole_matches_subset_oracle_on_compact_prefix(small):
    pts = small(4)[:10]
    assert largest_empty_hole(pts).max_hole == subset_hole_oracle(pts)


def test_hole_witness_is_an_empty_convex_polygon(small):
    pts = small(5)
    report = largest_empty_hole(pts)
    w = [pts[i] for i in report.witness]
    m = len(w)
    assert m == report.max_hole
    # counterclockwise convex position
    for i in range(m):
        assert cross(w[i], w[(i + 1) % m], w[(i + 2) % m]) > 0
    # strictly empty
    for i, p in enumerate(pts):
        if i in report.witness:
            continue
        assert not all(cross(w[j], w[(j + 1) % m], p) > 0 for j in range(m))


def test_hole_report_carries_triangle_count(small):
    pts = small(4)
    assert largest_empty_hole(pts).empty_triangle_count == 256


def test_compact_drawings_have_no_seven_hole(small):
    assert largest_empty_hole(small(2)).max_hole == 4
    assert largest_empty_hole(small(3)).max_hole == 6
    for k in (4, 5):
        assert largest_empty_hole(small(k)).max_hole == 6


def test_min_drawing_search_three_points():
    target = order_type([(0, 0), (2, 1), (1, 3)])
    found = min_drawing_search(target, 1)
    assert found is not None
    assert max(max(abs(x), abs(y)) for x, y in found) == 1
    assert order_type(found) == target


def test_min_drawing_search_radius_zero_absent():
    target = order_type([(0, 0), (2, 1), (1, 3)])
    assert min_drawing_search(target, 0) is None


def test_min_drawing_search_four_point_horton():
    target = order_type(small_horton(2))
    found = min_drawing_search(target, 1)
    assert found is not None
    assert order_type(found) == target
    assert max(max(abs(x), abs(y)) for x, y in found) == 1


def test_min_drawing_search_caps():
    target = order_type(small_horton(2))
    with pytest.raises(ResourceLimitError):
        min_drawing_search(target, 4)
    big = order_type([(0, 0), (1, 3), (2, 1), (4, 9), (5, 2), (7, 11)])
    with pytest.raises(ResourceLimitError):
        min_drawing_search(big, 1)
