"""Machinery for probing how small an isothetic Horton drawing can be.

Takes an isothetic drawing apart into its recursive even/odd tree, places
vertical measuring lines inside the central slab, and evaluates the girth and
width growth inequalities level by level.  Also hosts the pruning operation,
the gap-pattern size certificate, and the change-of-basis step that turns a
labeled drawing of the Horton order type into an isothetic one on half the
points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from .analysis import horton_violation, same_labeled_order_type
from .constructions import drawing_size, small_horton
from .exact import Line, Point, line_meet_vertical


# ---------------------------------------------------------------------------
# the even/odd tree


@dataclass(eq=False)
class TreeNode:
    """Node of the even/odd tree: the subset {p_j : j = offset (mod stride)}.

    A node at level l holds 2^l points.  The left child keeps the even ranks
    within the node, the right child the odd ranks.
    """

    offset: int
    stride: int
    level: int
    parent: Optional["TreeNode"] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    def indices(self, n: int) -> range:
        return range(self.offset, n, self.stride)

    @property
    def is_left_child(self) -> bool:
        return self.parent is not None and self.parent.left is self

    @property
    def is_right_child(self) -> bool:
        return self.parent is not None and self.parent.right is self

    @property
    def edge_label(self) -> Optional[str]:
        if self.parent is None:
            return None
        return "0" if self.is_left_child else "1"


class HortonTree:
    """Drawing plus its complete even/odd tree; level l holds the 2^(k-l) nodes of 2^l points."""

    def __init__(self, points: Sequence[Point]):
        pts = sorted(points)
        n = len(pts)
        if n == 0 or n & (n - 1):
            raise ValueError(f"point count {n} is not a power of two")
        self.points: tuple[Point, ...] = tuple(pts)
        self.n = n
        self.k = n.bit_length() - 1
        self._levels: dict[int, list[TreeNode]] = {l: [] for l in range(self.k + 1)}
        self.root = self._build(0, 1, self.k)

    def _build(self, offset: int, stride: int, level: int) -> TreeNode:
        node = TreeNode(offset, stride, level)
        self._levels[level].append(node)
        if level > 0:
            node.left = self._build(offset, 2 * stride, level - 1)
            node.right = self._build(offset + stride, 2 * stride, level - 1)
            node.left.parent = node
            node.right.parent = node
        return node

    def level(self, l: int) -> list[TreeNode]:
        """Nodes with 2^l points, in left-to-right tree order."""
        if l not in self._levels:
            raise ValueError(f"no level {l} in a tree of {self.n} points")
        return list(self._levels[l])

    def leaf(self, i: int) -> TreeNode:
        for node in self._levels[0]:
            if node.offset == i:
                return node
        raise ValueError(f"no leaf for rank {i}")

    def node_points(self, node: TreeNode) -> list[Point]:
        return [self.points[i] for i in node.indices(self.n)]

    def sibling_of_child(self, node: TreeNode) -> TreeNode:
        """The child of ``node`` on the same side as ``node`` is NOT.

        When the node is a left child this is its right child, and vice
        versa; undefined for the root.
        """
        if node.parent is None:
            raise ValueError("the root has no defined inner sibling")
        if node.left is None or node.right is None:
            raise ValueError("leaves have no children")
        return node.right if node.is_left_child else node.left


def build_tree(points: Sequence[Point], verify: bool = True) -> HortonTree:
    """Even/odd tree of an isothetic drawing.

    With ``verify`` (default) the drawing is first checked against the
    recursive high-above definition and a ValueError names the first witness
    otherwise.
    """
    if verify:
        v = horton_violation(points)
        if v is not None:
            raise ValueError(f"input is not an isothetic Horton drawing: {v.describe()}")
    return HortonTree(points)


# ---------------------------------------------------------------------------
# slab, bounding lines, girth and width


def slab_bounds(points: Sequence[Point]) -> tuple[Fraction, Fraction]:
    """x-positions of the vertical slab boundaries: through p_{n/4} and p_{3n/4-1}."""
    pts = sorted(points)
    n = len(pts)
    if n < 4:
        raise ValueError("the slab needs at least 4 points")
    return Fraction(pts[n // 4][0]), Fraction(pts[3 * n // 4 - 1][0])


def bounding_lines(tree: HortonTree, node: TreeNode) -> tuple[Line, Line]:
    """(lower, upper) bounding lines of a node: the pair-lines of its leftmost
    and rightmost first-level descendants."""
    if node.level < 1:
        raise ValueError("a single point has no bounding lines")
    n, pts = tree.n, tree.points
    o, s = node.offset, node.stride
    lower = (pts[o], pts[o + n // 2])
    upper = (pts[o + n // 2 - s], pts[o + n - s])
    return lower, upper


def width_at_x(tree: HortonTree, node: TreeNode, x: Fraction | int) -> Fraction:
    """Vertical distance between the node's two bounding lines at x."""
    lower, upper = bounding_lines(tree, node)
    return abs(line_meet_vertical(upper, x) - line_meet_vertical(lower, x))


def girth_at_x(tree: HortonTree, node: TreeNode, x: Fraction | int) -> Fraction:
    """Vertical distance at x between the upper line of the left child and the
    lower line of the right child."""
    if node.level < 2:
        raise ValueError("girth needs a node with more than two points")
    _, left_upper = bounding_lines(tree, node.left)
    right_lower, _ = bounding_lines(tree, node.right)
    return abs(line_meet_vertical(right_lower, x) - line_meet_vertical(left_upper, x))


# ---------------------------------------------------------------------------
# first-level non-crossing diagnostic


def first_level_noncrossing(points: Sequence[Point], verify: bool = True) -> bool:
    """True iff no two first-level pair-lines intersect strictly inside the
    slab, and their bottom-up order at the slab midpoint matches their
    left-to-right order in the tree."""
    tree = build_tree(points, verify=verify)
    if tree.k < 1:
        return True
    pairs = tree.level(1)
    if len(pairs) < 2:
        return True
    lo, hi = slab_bounds(tree.points)
    lines = []
    for node in pairs:
        a = tree.points[node.offset]
        b = tree.points[node.offset + tree.n // 2]
        lines.append((a, b))
    for i in range(len(lines)):
        (ax, ay), (bx, by) = lines[i]
        d1x, d1y = bx - ax, by - ay
        c1 = d1y * ax - d1x * ay
        for j in range(i + 1, len(lines)):
            (cx, cy), (dx_, dy_) = lines[j]
            d2x, d2y = dx_ - cx, dy_ - cy
            den = d1y * d2x - d2y * d1x
            if den == 0:
                continue  # parallel lines never cross
            c2 = d2y * cx - d2x * cy
            # solve d1y*x - d1x*y = c1, d2y*x - d2x*y = c2
            x_meet = Fraction(c1 * d2x - c2 * d1x, den)
            if lo < x_meet < hi:
                return False
    mid = (lo + hi) / 2
    heights = [line_meet_vertical(line, mid) for line in lines]
    return all(heights[i] < heights[i + 1] for i in range(len(heights) - 1))


# ---------------------------------------------------------------------------
# measuring-line placement and the gap-ratio certificate


@dataclass(frozen=True)
class SlabConfig:
    """Four vertical measuring lines l1 < l2 <= l3 < l4 with exactly 2^(k-t)
    drawing points strictly inside each of the two outer gaps."""

    t: int
    l1: Fraction
    l2: Fraction
    l3: Fraction
    l4: Fraction

    def __post_init__(self):
        if not (self.l1 < self.l2 <= self.l3 < self.l4):
            raise ValueError("measuring lines must satisfy l1 < l2 <= l3 < l4")

    @property
    def d1(self) -> Fraction:
        return self.l2 - self.l1

    @property
    def d2(self) -> Fraction:
        return self.l4 - self.l3

    @property
    def span(self) -> Fraction:
        return self.l4 - self.l1

    def line(self, i: int) -> Fraction:
        if i not in (1, 2, 3, 4):
            raise ValueError("line index must be 1..4")
        return (self.l1, self.l2, self.l3, self.l4)[i - 1]


@dataclass(frozen=True)
class SizeCertificate:
    """Proven lower bound on the drawing size, with the reason it applies."""

    bound: int
    reason: str


def _ceil_2log2(k: int) -> int:
    # smallest t with 2^t >= k^2
    return (k * k - 1).bit_length()


def window_counts(points: Sequence[Point], cfg: SlabConfig) -> tuple[int, int]:
    """Number of points strictly inside (l1, l2) and inside (l3, l4)."""
    xs = [p[0] for p in points]
    c1 = sum(1 for x in xs if cfg.l1 < x < cfg.l2)
    c2 = sum(1 for x in xs if cfg.l3 < x < cfg.l4)
    return c1, c2


def choose_slab_lines(points: Sequence[Point], t: int, verify: bool = True):
    """Place the measuring lines for parameter t, or certify a large drawing.

    The slab's n/2 points are cut into 2^(t-1) consecutive blocks of exactly
    2^(k-t) points by midlines between neighbouring x-coordinates.  Among all
    block pairs the one with gap widths closest in ratio (ties to the left) is
    returned as a SlabConfig when the ratio lies in [1/2, 2].  When no pair
    qualifies and t = ceil(2 log2 k) with k >= 16, a SizeCertificate for
    floor(n^{(1/2) log2 n}) is returned instead; for smaller k that situation
    is out of the certificate's hypotheses and raises.
    """
    tree = build_tree(points, verify=verify)
    pts, n, k = tree.points, tree.n, tree.k
    if not 2 <= t <= k - 2:
        raise ValueError(f"t={t} out of range: need 2 <= t <= k-2 = {k - 2}")
    q = 2 ** (k - t)
    blocks = 2 ** (t - 1)
    # midline m sits between ranks n/4 + m*q - 1 and n/4 + m*q
    mids = []
    for m in range(blocks + 1):
        j = n // 4 + m * q
        mids.append(Fraction(pts[j - 1][0] + pts[j][0], 2))
    gaps = [mids[m + 1] - mids[m] for m in range(blocks)]

    best: Optional[tuple[Fraction, int, int]] = None
    for i in range(blocks):
        for j in range(i + 1, blocks):
            ratio = max(Fraction(gaps[i], gaps[j]), Fraction(gaps[j], gaps[i]))
            if ratio > 2:
                continue
            if best is None or ratio < best[0]:
                best = (ratio, i, j)
    if best is not None:
        _, i, j = best
        return SlabConfig(t=t, l1=mids[i], l2=mids[i + 1], l3=mids[j], l4=mids[j + 1])

    if t == _ceil_2log2(k) and k >= 16:
        bound = math.isqrt(2 ** (k * k))
        return SizeCertificate(
            bound=bound,
            reason=(
                "consecutive measuring-line gaps at least double pairwise, so the "
                "largest gap forces a coordinate of at least n^((1/2) log2 n)"
            ),
        )
    raise ValueError(
        "no gap pair with width ratio in [1/2, 2]; the size certificate requires "
        f"t = ceil(2 log2 k) = {_ceil_2log2(k)} and k >= 16 (got t={t}, k={k})"
    )


def width_at(tree: HortonTree, node: TreeNode, i: int, cfg: SlabConfig) -> Fraction:
    """Width of the node at measuring line i (1..4)."""
    return width_at_x(tree, node, cfg.line(i))


def girth_at(tree: HortonTree, node: TreeNode, i: int, cfg: SlabConfig) -> Fraction:
    """Girth of the node at measuring line i (1..4)."""
    return girth_at_x(tree, node, cfg.line(i))


# ---------------------------------------------------------------------------
# pruning


def prune_level(points: Sequence[Point], level: int, side: str, verify: bool = True) -> list[Point]:
    """Drop every node of the given tree level that is a left (or right) child.

    Keeps n/2 points; the survivors form alternating runs of 2^(k-level-1)
    consecutive ranks.  With ``verify`` the input is checked and the result is
    asserted to be an isothetic Horton drawing again.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    tree = build_tree(points, verify=verify)
    n, k = tree.n, tree.k
    if not 1 <= level <= k - 1:
        raise ValueError(f"level {level} out of range: need 1 <= level <= k-1 = {k - 1}")
    stride = 2 ** (k - level)
    half = stride // 2
    if side == "left":
        kept = [p for j, p in enumerate(tree.points) if j % stride >= half]
    else:
        kept = [p for j, p in enumerate(tree.points) if j % stride < half]
    if verify:
        v = horton_violation(kept)
        if v is not None:
            raise AssertionError(
                f"pruning produced a non-Horton drawing, which the halving "
                f"structure rules out: {v.describe()}"
            )
    return kept


# ---------------------------------------------------------------------------
# the growth inequality


def growth_inequality_terms(tree: HortonTree, node: TreeNode, cfg: SlabConfig):
    """Both sides of the two girth growth inequalities for a node.

    Returns ((lhs1, rhs1), (lhs2, rhs2)) where each inequality asserts
    lhs >= rhs.
    """
    k = tree.k
    l = node.level
    if not cfg.t < l < k:
        raise ValueError(f"node level {l} out of range: need t={cfg.t} < level < k={k}")
    parent = node.parent
    inner_sib = tree.sibling_of_child(node)
    d1, d2 = cfg.d1, cfg.d2
    factor = 2 ** (l - cfg.t - 1)
    coef1 = d1 * d1 / ((d1 + d2) * d2)
    coef2 = d2 * d2 / ((d1 + d2) * d1)
    lhs1 = girth_at(tree, parent, 1, cfg)
    rhs1 = coef1 * factor * girth_at(tree, node, 4, cfg) - width_at(tree, inner_sib, 1, cfg)
    lhs2 = girth_at(tree, parent, 4, cfg)
    rhs2 = coef2 * factor * girth_at(tree, node, 1, cfg) - width_at(tree, inner_sib, 4, cfg)
    return (lhs1, rhs1), (lhs2, rhs2)


def check_growth_inequality(tree: HortonTree, node: TreeNode, cfg: SlabConfig) -> bool:
    """Exact evaluation of both girth growth inequalities for one node."""
    q = 2 ** (tree.k - cfg.t)
    counts = window_counts(tree.points, cfg)
    if counts != (q, q):
        raise ValueError(
            f"measuring-line config does not fit the drawing: window counts {counts}, expected {(q, q)}"
        )
    (lhs1, rhs1), (lhs2, rhs2) = growth_inequality_terms(tree, node, cfg)
    return lhs1 >= rhs1 and lhs2 >= rhs2


# ---------------------------------------------------------------------------
# isotheticizing a labeled drawing of the Horton order type


def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = math.gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _vcross(u: tuple[int, int], w: tuple[int, int]) -> int:
    return u[0] * w[1] - u[1] * w[0]


def _vdot(u: tuple[int, int], w: tuple[int, int]) -> int:
    return u[0] * w[0] + u[1] * w[1]


def _most_ccw(vectors):
    return reduce(lambda best, c: c if _vcross(best, c) > 0 else best, vectors)


def _most_cw(vectors):
    return reduce(lambda best, c: c if _vcross(best, c) < 0 else best, vectors)


def isotheticize(points: Sequence[Point]) -> list[Point]:
    """Map the odd-labeled half of a Horton-order-type drawing to an isothetic one.

    The input is a labeled sequence (labels are positions, not x-ranks) whose
    order type must equal the compact drawing's.  A direction v = (a, b) is
    chosen so that the odd-labeled points project onto v strictly in label
    order: the feasible directions form an open arc cut out by one open
    half-circle per odd pair.  Rotating a feasible direction, the events that
    matter are the perpendiculars of point-pair directions (crossing one
    either reorders the projection or aligns the projection rays with a
    pair), and the arc's endpoints are themselves such perpendiculars; v is
    the sum of the two event directions flanking the arc's interior witness,
    which always lands strictly inside the arc.  The odd half is then mapped
    by (x, y) -> (ax + by, ay - bx), the change of basis to {v, v_perp}
    scaled by a^2 + b^2, and the integer image is checked to be an isothetic
    Horton drawing before being returned.
    """
    pts = list(points)
    n = len(pts)
    if n < 4 or n & (n - 1):
        raise ValueError(f"point count {n} is not a power of two >= 4")
    k = n.bit_length() - 1
    if not same_labeled_order_type(pts, small_horton(k)):
        raise ValueError("input does not have the labeled Horton order type")

    odd = pts[1::2]
    cons = [
        (odd[j][0] - odd[i][0], odd[j][1] - odd[i][1])
        for i in range(len(odd))
        for j in range(i + 1, len(odd))
    ]
    # feasible arc: all directions d with dot(d, u) > 0 for every constraint u.
    # Its clockwise end is the most-counterclockwise of the vectors u rotated
    # -90 degrees, the counterclockwise end the most-clockwise of the +90 ones.
    arc_cw = _most_ccw([(u[1], -u[0]) for u in cons])
    arc_ccw = _most_cw([(-u[1], u[0]) for u in cons])
    turn = _vcross(arc_cw, arc_ccw)
    if turn > 0:
        witness = (arc_cw[0] + arc_ccw[0], arc_cw[1] + arc_ccw[1])
    elif turn == 0 and _vdot(arc_cw, arc_ccw) < 0:
        # a single binding constraint leaves a full open half-circle
        witness = (-arc_cw[1], arc_cw[0])
    else:
        raise ValueError("degenerate feasible arc; cannot happen in general position")

    # perpendiculars of every pair direction; closed under negation because
    # ordered pairs contribute both signs, and the arc endpoints are members
    events = {
        _primitive((-(pts[b][1] - pts[a][1]), pts[b][0] - pts[a][0]))
        for a in range(n)
        for b in range(n)
        if a != b
    }
    inside = [d for d in events if _vcross(arc_cw, d) > 0 and _vcross(d, arc_ccw) > 0]
    lower = [
        d for d in inside
        if _vcross(d, witness) > 0 or (_vcross(d, witness) == 0 and _vdot(d, witness) > 0)
    ]
    upper = [d for d in inside if _vcross(witness, d) > 0]
    flank_cw = _most_ccw(lower) if lower else _primitive(arc_cw)
    flank_ccw = _most_cw(upper) if upper else _primitive(arc_ccw)
    v = (flank_cw[0] + flank_ccw[0], flank_cw[1] + flank_ccw[1])
    if any(_vdot(v, u) <= 0 for u in cons):
        raise ValueError(
            "flanking event directions straddle the feasible arc; degenerate configuration"
        )
    a, b = v
    image = [(a * x + b * y, a * y - b * x) for x, y in odd]
    v2 = horton_violation(image)
    if v2 is not None:
        raise ValueError(f"transformed half is not an isothetic Horton drawing: {v2.describe()}")
    return sorted(image)


# ---------------------------------------------------------------------------
# aggregate report


@dataclass(frozen=True)
class LevelStats:
    level: int
    nodes: int
    girth1_min: Optional[Fraction]
    girth1_max: Optional[Fraction]
    girth4_min: Optional[Fraction]
    girth4_max: Optional[Fraction]
    width1_min: Fraction
    width1_max: Fraction
    width4_min: Fraction
    width4_max: Fraction


@dataclass(frozen=True)
class LowerBoundReport:
    """Everything the lower-bound diagnostics computed for one drawing."""

    n: int
    k: int
    t: int
    size: int
    slab: Optional[SlabConfig]
    certificate: Optional[SizeCertificate]
    levels: tuple[LevelStats, ...]
    inequalities_hold: Optional[bool]
    failing_nodes: tuple[tuple[int, int], ...]
    isothetic_reference: float
    general_reference: float

    def to_dict(self) -> dict:
        def fr(x):
            return None if x is None else str(x)

        d = {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "size": str(self.size),
            "inequalities_hold": self.inequalities_hold,
            "failing_nodes": [list(fn) for fn in self.failing_nodes],
            "isothetic_reference": self.isothetic_reference,
            "general_reference": self.general_reference,
            "levels": [
                {
                    "level": ls.level,
                    "nodes": ls.nodes,
                    "girth1_min": fr(ls.girth1_min),
                    "girth1_max": fr(ls.girth1_max),
                    "girth4_min": fr(ls.girth4_min),
                    "girth4_max": fr(ls.girth4_max),
                    "width1_min": fr(ls.width1_min),
                    "width1_max": fr(ls.width1_max),
                    "width4_min": fr(ls.width4_min),
                    "width4_max": fr(ls.width4_max),
                }
                for ls in self.levels
            ],
        }
        if self.slab is not None:
            d["slab"] = {
                "l1": str(self.slab.l1),
                "l2": str(self.slab.l2),
                "l3": str(self.slab.l3),
                "l4": str(self.slab.l4),
                "d1": str(self.slab.d1),
                "d2": str(self.slab.d2),
                "span": str(self.slab.span),
            }
        if self.certificate is not None:
            d["certificate"] = {
                "bound": str(self.certificate.bound),
                "reason": self.certificate.reason,
            }
        return d


def lower_bound_report(points: Sequence[Point], t: int, verify: bool = True) -> LowerBoundReport:
    """Slab placement, per-level girth/width extremes, growth-inequality verdict,
    actual size, and the two reference curves, in one record."""
    tree = build_tree(points, verify=verify)
    n, k = tree.n, tree.k
    size = drawing_size(tree.points)
    iso_ref = 2.0 ** (k * k / 8)
    gen_ref = 2.0 ** (k * (k - 1) / 24)

    placed = choose_slab_lines(tree.points, t, verify=False)
    if isinstance(placed, SizeCertificate):
        return LowerBoundReport(
            n=n, k=k, t=t, size=size, slab=None, certificate=placed,
            levels=(), inequalities_hold=None, failing_nodes=(),
            isothetic_reference=iso_ref, general_reference=gen_ref,
        )

    cfg = placed
    levels = []
    for l in range(1, k + 1):
        nodes = tree.level(l)
        w1 = [width_at(tree, nd, 1, cfg) for nd in nodes]
        w4 = [width_at(tree, nd, 4, cfg) for nd in nodes]
        if l >= 2:
            g1 = [girth_at(tree, nd, 1, cfg) for nd in nodes]
            g4 = [girth_at(tree, nd, 4, cfg) for nd in nodes]
        else:
            g1 = g4 = []
        levels.append(
            LevelStats(
                level=l,
                nodes=len(nodes),
                girth1_min=min(g1) if g1 else None,
                girth1_max=max(g1) if g1 else None,
                girth4_min=min(g4) if g4 else None,
                girth4_max=max(g4) if g4 else None,
                width1_min=min(w1),
                width1_max=max(w1),
                width4_min=min(w4),
                width4_max=max(w4),
            )
        )

    failing = []
    for l in range(t + 1, k):
        for nd in tree.level(l):
            (lhs1, rhs1), (lhs2, rhs2) = growth_inequality_terms(tree, nd, cfg)
            if not (lhs1 >= rhs1 and lhs2 >= rhs2):
                failing.append((nd.offset, nd.stride))

    return LowerBoundReport(
        n=n, k=k, t=t, size=size, slab=cfg, certificate=None,
        levels=tuple(levels),
        inequalities_hold=not failing,
        failing_nodes=tuple(failing),
        isothetic_reference=iso_ref,
        general_reference=gen_ref,
    )
