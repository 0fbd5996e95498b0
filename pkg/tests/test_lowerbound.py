import random
from fractions import Fraction

import pytest

from hortonlab import (
    SizeCertificate,
    SlabConfig,
    bounding_lines,
    build_tree,
    check_growth_inequality,
    choose_slab_lines,
    drawing_size,
    first_level_noncrossing,
    girth_at,
    girth_at_x,
    is_horton,
    isotheticize,
    lower_bound_report,
    prune_level,
    slab_bounds,
    small_horton,
    width_at,
    width_at_x,
    window_counts,
)
from oracles import random_general_position


def stretched_compact(k, t):
    """Compact drawing with x stretched so measuring-line gaps quadruple."""
    pts = small_horton(k)
    n = len(pts)
    q = 2 ** (k - t)
    lo, hi = n // 4, 3 * n // 4
    xs = [0]
    for j in range(1, n):
        if lo < j <= hi:
            block = (j - 1 - lo) // q
            step = 4**block
        else:
            step = 1
        xs.append(xs[-1] + step)
    return [(xs[j], pts[j][1]) for j in range(n)]


# -- tree ------------------------------------------------------------------


def test_tree_two_points():
    tree = build_tree([(0, 0), (1, 1)])
    assert (tree.root.offset, tree.root.stride) == (0, 1)
    leaves = tree.level(0)
    assert [(nd.offset, nd.stride) for nd in leaves] == [(0, 2), (1, 2)]


def test_leaf_to_root_labels_spell_rank_bits(small):
    for k in (2, 3, 4):
        tree = build_tree(small(k))
        for i in range(2**k):
            node = tree.leaf(i)
            labels = []
            while node.parent is not None:
                labels.append(node.edge_label)
                node = node.parent
            assert "".join(labels) == format(i, f"0{k}b")


def test_leaf_to_root_labels_structural_large():
    # structural property of the tree alone; skip the drawing verification
    for k in (8, 10):
        tree = build_tree(small_horton(k), verify=False)
        for leaf in tree.level(0):
            node = leaf
            labels = []
            while node.parent is not None:
                labels.append(node.edge_label)
                node = node.parent
            assert "".join(labels) == format(leaf.offset, f"0{k}b")


def test_first_level_nodes_pair_opposite_halves(small):
    tree = build_tree(small(3))
    pairs = [tuple(nd.indices(8)) for nd in tree.level(1)]
    assert sorted(pairs) == [(0, 4), (1, 5), (2, 6), (3, 7)]


def test_consecutive_node_points_have_fixed_gap(small):
    for k in (3, 5):
        tree = build_tree(small(k))
        for l in range(1, k + 1):
            for nd in tree.level(l):
                ranks = list(nd.indices(tree.n))
                assert all(b - a - 1 == 2 ** (k - l) - 1 for a, b in zip(ranks, ranks[1:]))


def test_build_tree_rejects_non_horton():
    with pytest.raises(ValueError):
        build_tree([(0, 0), (1, -1), (2, 0), (3, -1)])


# -- slab and bounding lines -----------------------------------------------


def test_slab_examples(small):
    assert slab_bounds(small(2)) == (1, 2)
    assert slab_bounds(small(3)) == (2, 5)
    lo, hi = slab_bounds(small(6))
    assert lo <= hi
    with pytest.raises(ValueError):
        slab_bounds([(0, 0), (1, 1)])


def test_bounding_lines_examples(small):
    tree = build_tree(small(2))
    lower, upper = bounding_lines(tree, tree.root)
    assert lower == ((0, 0), (2, 0))
    assert upper == ((1, 1), (3, 1))
    pair = tree.level(1)[0]
    assert bounding_lines(tree, pair)[0] == bounding_lines(tree, pair)[1]

    tree4 = build_tree(small(4))
    lower, upper = bounding_lines(tree4, tree4.root)
    assert lower == (tree4.points[0], tree4.points[8])
    assert upper == (tree4.points[7], tree4.points[15])


def test_bounding_lines_match_explicit_tree_walk(small):
    for k in (3, 4, 5):
        tree = build_tree(small(k))
        for l in range(1, k + 1):
            for nd in tree.level(l):
                walker = nd
                while walker.level > 1:
                    walker = walker.left
                leftmost = tuple(tree.points[i] for i in walker.indices(tree.n))
                walker = nd
                while walker.level > 1:
                    walker = walker.right
                rightmost = tuple(tree.points[i] for i in walker.indices(tree.n))
                assert bounding_lines(tree, nd) == (leftmost, rightmost)


def test_bounding_lines_reject_leaf(small):
    tree = build_tree(small(2))
    with pytest.raises(ValueError):
        bounding_lines(tree, tree.level(0)[0])


# -- non-crossing diagnostic -------------------------------------------------


def test_noncrossing_on_compact_drawings(small):
    for k in range(2, 7):
        assert first_level_noncrossing(small(k))


def test_noncrossing_two_points():
    assert first_level_noncrossing([(0, 0), (1, 1)])


def test_noncrossing_rejects_non_horton():
    with pytest.raises(ValueError):
        first_level_noncrossing([(0, 0), (1, -1), (2, 0), (3, -1)])


def test_noncrossing_on_pruned_drawings(small):
    for k in (4, 5):
        for level in (1, k - 1):
            for side in ("left", "right"):
                assert first_level_noncrossing(prune_level(small(k), level, side))


def test_noncrossing_with_sloped_lines():
    # lines y=x and y=3x+3 meet at x=-3/2, left of the slab [1, 2]
    assert first_level_noncrossing([(0, 0), (1, 6), (2, 2), (3, 12)])


def test_noncrossing_detects_crossing_inside_slab():
    # pair-lines (0,0)-(2,4) and (1,5)-(3,0) meet at x=5/3, inside the slab;
    # such a drawing cannot be Horton, so skip the input verification
    assert not first_level_noncrossing([(0, 0), (1, 5), (2, 4), (3, 0)], verify=False)


# -- measuring lines ----------------------------------------------------------


def test_slab_lines_compact_k6_t2(small):
    cfg = choose_slab_lines(small(6), 2)
    assert isinstance(cfg, SlabConfig)
    assert (cfg.l1, cfg.l2, cfg.l3, cfg.l4) == (
        Fraction(31, 2),
        Fraction(63, 2),
        Fraction(63, 2),
        Fraction(95, 2),
    )
    assert cfg.d1 == cfg.d2 == 16
    assert window_counts(small(6), cfg) == (16, 16)


def test_slab_lines_window_counts_t3(small):
    for k in (5, 6, 7):
        cfg = choose_slab_lines(small(k), 3, verify=False)
        q = 2 ** (k - 3)
        assert window_counts(small(k), cfg) == (q, q)


def test_slab_lines_t_out_of_range(small):
    with pytest.raises(ValueError):
        choose_slab_lines(small(6), 1)
    with pytest.raises(ValueError):
        choose_slab_lines(small(6), 5)


def test_certificate_branch_triggers_for_doubling_gaps():
    drawing = stretched_compact(16, 8)
    res = choose_slab_lines(drawing, 8, verify=False)
    assert isinstance(res, SizeCertificate)
    assert res.bound == 2**128


def test_certificate_branch_needs_its_hypotheses():
    drawing = stretched_compact(8, 6)
    with pytest.raises(ValueError):
        choose_slab_lines(drawing, 6, verify=False)


# -- width and girth ----------------------------------------------------------


def test_width_and_girth_of_four_point_root(small):
    tree = build_tree(small(2))
    for x in (Fraction(1, 2), 1, Fraction(3, 2), 2, Fraction(5, 2)):
        assert width_at_x(tree, tree.root, x) == 1
        assert girth_at_x(tree, tree.root, x) == 1


def test_width_girth_misuse_rejected(small):
    tree = build_tree(small(3))
    cfg = SlabConfig(t=2, l1=Fraction(5, 2), l2=3, l3=4, l4=Fraction(9, 2))
    with pytest.raises(ValueError):
        girth_at(tree, tree.level(1)[0], 1, cfg)
    with pytest.raises(ValueError):
        width_at(tree, tree.level(0)[0], 1, cfg)
    with pytest.raises(ValueError):
        cfg.line(5)


def test_width_dominates_girth(small):
    for k in (4, 5, 6):
        tree = build_tree(small(k), verify=False)
        cfg = choose_slab_lines(small(k), 2, verify=False)
        for l in range(2, k + 1):
            for nd in tree.level(l):
                for i in (1, 2, 3, 4):
                    assert width_at(tree, nd, i, cfg) >= girth_at(tree, nd, i, cfg)


def test_width_and_girth_positive_on_isothetic_drawings(small):
    tree = build_tree(small(5), verify=False)
    cfg = choose_slab_lines(small(5), 2, verify=False)
    for l in range(2, 6):
        for nd in tree.level(l):
            for i in (1, 4):
                assert girth_at(tree, nd, i, cfg) > 0
                assert width_at(tree, nd, i, cfg) > 0


def test_slab_config_invariant():
    with pytest.raises(ValueError):
        SlabConfig(t=2, l1=3, l2=2, l3=4, l4=5)


# -- pruning -------------------------------------------------------------------


def test_prune_examples(small):
    assert prune_level(small(2), 1, "left") == [(1, 1), (3, 1)]
    for k in (2, 3, 4, 5):
        pts = small(k)
        assert prune_level(pts, k - 1, "left") == pts[1::2]
        assert prune_level(pts, k - 1, "right") == pts[0::2]


def test_prune_halves_and_stays_horton(small):
    for k in range(2, 6):
        pts = small(k)
        for l in range(1, k):
            for side in ("left", "right"):
                out = prune_level(pts, l, side)
                assert len(out) == 2 ** (k - 1)
                assert is_horton(out)


def test_prune_is_alternating_blocks(small):
    for k in (3, 4, 5):
        pts = small(k)
        for l in range(1, k):
            block = 2 ** (k - l - 1)
            for side, first_kept in (("left", False), ("right", True)):
                out = prune_level(pts, l, side)
                expected = [
                    p
                    for j, p in enumerate(pts)
                    if ((j // block) % 2 == 0) == first_kept
                ]
                assert out == expected


def test_prune_matches_tree_deletion_algorithm(small):
    # delete the subtrees rooted at the chosen level's left children, strip
    # the removed points from every surviving vertex, drop the contracted
    # level, and compare the surviving node point-sets with the pruned
    # drawing's own tree
    for k in (3, 4, 5):
        pts = small(k)
        for l in range(1, k):
            out = prune_level(pts, l, "left")
            kept = set(out)
            pruned_tree = build_tree(out, verify=False)
            tree = build_tree(pts, verify=False)

            surviving = {lev: [] for lev in range(k + 1)}

            def walk(node, lev):
                if lev == l and node.is_left_child:
                    return
                stripped = tuple(
                    p for p in (tree.points[i] for i in node.indices(tree.n)) if p in kept
                )
                surviving[lev].append(stripped)
                if node.left is not None:
                    walk(node.left, lev - 1)
                    walk(node.right, lev - 1)

            walk(tree.root, k)
            for new_level in range(0, k):
                adjusted = new_level + 1 if new_level >= l else new_level
                expected = [
                    tuple(pruned_tree.points[i] for i in nd.indices(pruned_tree.n))
                    for nd in pruned_tree.level(new_level)
                ]
                assert surviving[adjusted] == expected


def test_prune_level_out_of_range(small):
    with pytest.raises(ValueError):
        prune_level(small(3), 3, "left")
    with pytest.raises(ValueError):
        prune_level(small(3), 0, "left")
    with pytest.raises(ValueError):
        prune_level(small(3), 1, "up")


# -- growth inequality ----------------------------------------------------------


def test_growth_inequality_holds_for_compact_drawing(small):
    pts = small(6)
    tree = build_tree(pts, verify=False)
    for t in (2, 3):
        cfg = choose_slab_lines(pts, t, verify=False)
        for l in range(t + 1, 6):
            for nd in tree.level(l):
                assert check_growth_inequality(tree, nd, cfg)


def test_growth_inequality_level_range(small):
    pts = small(6)
    tree = build_tree(pts, verify=False)
    cfg = choose_slab_lines(pts, 2, verify=False)
    with pytest.raises(ValueError):
        check_growth_inequality(tree, tree.level(2)[0], cfg)
    with pytest.raises(ValueError):
        check_growth_inequality(tree, tree.root, cfg)


def test_growth_inequality_validates_config(small):
    pts = small(6)
    tree = build_tree(pts, verify=False)
    bogus = SlabConfig(t=2, l1=Fraction(1, 2), l2=1, l3=2, l4=Fraction(5, 2))
    with pytest.raises(ValueError):
        check_growth_inequality(tree, tree.level(4)[0], bogus)


# -- isotheticize -----------------------------------------------------------------


SHEARS = [
    ((1, 1), (0, 1)),
    ((1, 3), (0, 1)),
    ((1, 0), (1, 1)),
    ((2, 1), (1, 1)),
    ((1, -2), (0, 1)),
]


def apply_map(M, pts):
    (a, b), (c, d) = M
    assert a * d - b * c > 0
    return [(a * x + b * y, c * x + d * y) for x, y in pts]


def test_isotheticize_identity(small):
    for k in (2, 3, 4, 5):
        out = isotheticize(small(k))
        assert len(out) == 2 ** (k - 1)
        assert is_horton(out)


def test_isotheticize_sheared_drawings(small):
    for k in (3, 4):
        for M in SHEARS:
            out = isotheticize(apply_map(M, small(k)))
            assert len(out) == 2 ** (k - 1)
            assert is_horton(out)


def test_isotheticize_output_size_is_linearly_bounded(small):
    # |ax+by| and |ay-bx| are at most (|a|+|b|) <= a^2+b^2 times the input size
    for M in SHEARS:
        pts = apply_map(M, small(4))
        out = isotheticize(pts)
        assert drawing_size(out) <= (2 * drawing_size(pts)) ** 2 * drawing_size(pts)


def test_isotheticize_rejects_other_order_types():
    rng = random.Random(5)
    pts = random_general_position(8, rng)
    with pytest.raises(ValueError):
        isotheticize(pts)
    with pytest.raises(ValueError):
        isotheticize(small_horton(3)[:6])


# -- report -----------------------------------------------------------------------


def test_report_compact_k4(small):
    rep = lower_bound_report(small(4), 2)
    assert rep.size == 32
    assert rep.inequalities_hold is True
    assert rep.slab is not None and rep.certificate is None
    assert rep.levels[-1].width4_max > 0
    d = rep.to_dict()
    assert d["size"] == "32"
    assert d["slab"]["d1"] == d["slab"]["d2"]


def test_report_compact_k6_all_inequalities(small):
    rep = lower_bound_report(small(6), 2)
    assert rep.inequalities_hold is True
    assert rep.failing_nodes == ()
    assert rep.isothetic_reference == pytest.approx(2.0 ** (36 / 8))
    assert rep.general_reference == pytest.approx(2.0 ** (30 / 24))


def test_report_rejects_non_horton():
    with pytest.raises(ValueError):
        lower_bound_report([(0, 0), (1, -1), (2, 0), (3, -1)], 2)


def test_report_certificate_case():
    rep = lower_bound_report(stretched_compact(16, 8), 8, verify=False)
    assert rep.certificate is not None
    assert rep.slab is None
    assert rep.inequalities_hold is None
    assert rep.to_dict()["certificate"]["bound"] == str(2**128)
