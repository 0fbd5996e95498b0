"""Order types, the recursive Horton verifier, and empty-polygon analysis."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Optional, Sequence

import numpy as np

from .errors import ResourceLimitError
from .exact import Point, find_collinear_triple, orientation

MAX_HOLE_POINTS = 128

# Chebyshev bound under which pair-line tests fit int64: the test value is a
# sum of four products of one x-like and one y-like term, so 8*Mx*My must stay
# below 2^62.
_INT64_PRODUCT_CAP = 2**59


# ---------------------------------------------------------------------------
# order types


@dataclass(frozen=True)
class OrderTypeVector:
    """Orientation of every triple (i < j < k), in lexicographic order."""

    n: int
    signs: tuple[int, ...]


def order_type(points: Sequence[Point]) -> OrderTypeVector:
    """Orientation vector of the labeled point sequence.

    Labels are the positions in ``points``; no sorting is applied.  Raises on
    a collinear triple, naming it.
    """
    pts = list(points)
    n = len(pts)
    if n < 3:
        raise ValueError("order type needs at least 3 points")
    signs = []
    for i, j, k in itertools.combinations(range(n), 3):
        s = orientation(pts[i], pts[j], pts[k])
        if s == 0:
            raise ValueError(f"collinear triple ({i}, {j}, {k}): order type undefined")
        signs.append(s)
    return OrderTypeVector(n, tuple(signs))


def same_labeled_order_type(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """True iff the two sequences have identical orientation for every triple.

    Compares under the label bijection i <-> i; no relabeling is attempted.
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)} points")
    if len(a) < 3:
        return True
    return order_type(a) == order_type(b)


# ---------------------------------------------------------------------------
# the high-above relation and the recursive Horton test


@dataclass(frozen=True)
class HortonViolation:
    """Witness that a drawing is not a Horton set.

    ``kind`` is "line-not-above" when a line through two odd-half points fails
    to pass strictly above an even-half point, "line-not-below" for the dual.
    Labels are x-ranks in the full drawing.
    """

    kind: str
    line_labels: tuple[int, int]
    point_label: int
    line_points: tuple[Point, Point]
    point: Point

    def describe(self) -> str:
        a, b = self.line_labels
        rel = "strictly above" if self.kind == "line-not-above" else "strictly below"
        return (
            f"line through p{a}={self.line_points[0]} and p{b}={self.line_points[1]} "
            f"is not {rel} p{self.point_label}={self.point}"
        )


def _coordinate_bounds(*point_lists: Sequence[Point]) -> tuple[int, int]:
    mx = my = 0
    for pts in point_lists:
        for x, y in pts:
            ax, ay = abs(x), abs(y)
            if ax > mx:
                mx = ax
            if ay > my:
                my = ay
    return mx, my


def _clearance_violation_py(lines_pts, probe_pts, probe_below):
    """First (a, b, r) such that probe r is not strictly below (above) line (a, b)."""
    m = len(lines_pts)
    for a in range(m):
        ax, ay = lines_pts[a]
        for b in range(a + 1, m):
            bx, by = lines_pts[b]
            if ax > bx:
                dx, dy = ax - bx, ay - by
                c = dx * by - dy * bx
            else:
                dx, dy = bx - ax, by - ay
                c = dx * ay - dy * ax
            # dx > 0, so "strictly below" is dx*ry - dy*rx < c
            if probe_below:
                for r, (rx, ry) in enumerate(probe_pts):
                    if dx * ry - dy * rx >= c:
                        return (a, b, r)
            else:
                for r, (rx, ry) in enumerate(probe_pts):
                    if dx * ry - dy * rx <= c:
                        return (a, b, r)
    return None


def _clearance_violation_np(lines_pts, probe_pts, probe_below):
    m = len(lines_pts)
    lp = np.asarray(lines_pts, dtype=np.int64)
    px = np.asarray([p[0] for p in probe_pts], dtype=np.int64)
    py = np.asarray([p[1] for p in probe_pts], dtype=np.int64)
    ia, ib = np.triu_indices(m, 1)
    ax, ay = lp[ia, 0], lp[ia, 1]
    bx, by = lp[ib, 0], lp[ib, 1]
    swap = ax > bx
    ax2 = np.where(swap, bx, ax)
    ay2 = np.where(swap, by, ay)
    bx2 = np.where(swap, ax, bx)
    by2 = np.where(swap, ay, by)
    dx = bx2 - ax2
    dy = by2 - ay2
    c = dx * ay2 - dy * ax2
    npairs = dx.shape[0]
    chunk = max(1, 4_000_000 // max(1, len(probe_pts)))
    for start in range(0, npairs, chunk):
        end = min(start + chunk, npairs)
        lhs = dx[start:end, None] * py[None, :] - dy[start:end, None] * px[None, :]
        bad = lhs >= c[start:end, None] if probe_below else lhs <= c[start:end, None]
        if bad.any():
            i, r = np.argwhere(bad)[0]
            pair = start + int(i)
            return (int(ia[pair]), int(ib[pair]), int(r))
    return None


def _clearance_violation(lines_pts, probe_pts, probe_below):
    if len(lines_pts) < 2 or not probe_pts:
        return None
    if len(lines_pts) >= 8:
        mx, my = _coordinate_bounds(lines_pts, probe_pts)
        if mx * my < _INT64_PRODUCT_CAP:
            return _clearance_violation_np(lines_pts, probe_pts, probe_below)
    return _clearance_violation_py(lines_pts, probe_pts, probe_below)


def _require_distinct_x(points: Sequence[Point], what: str) -> None:
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError(f"duplicate x-coordinate within {what}")


def high_above_violation(upper: Sequence[Point], lower: Sequence[Point]):
    """None when ``upper`` is high above ``lower``; otherwise a witness tuple.

    The witness is (kind, (a, b), r): indices of the offending pair within its
    own set and of the probed point in the other set.
    """
    if not upper or not lower:
        raise ValueError("high-above needs two nonempty sets")
    _require_distinct_x(upper, "the upper set")
    _require_distinct_x(lower, "the lower set")
    v = _clearance_violation(list(upper), list(lower), probe_below=True)
    if v is not None:
        return ("line-not-above", (v[0], v[1]), v[2])
    v = _clearance_violation(list(lower), list(upper), probe_below=False)
    if v is not None:
        return ("line-not-below", (v[0], v[1]), v[2])
    return None


def is_high_above(upper: Sequence[Point], lower: Sequence[Point]) -> bool:
    """Exhaustive check that every line through two points of ``upper`` passes
    strictly above every point of ``lower`` and every line through two points
    of ``lower`` passes strictly below every point of ``upper``."""
    return high_above_violation(upper, lower) is None


def _sorted_power_of_two(points: Sequence[Point]) -> list[Point]:
    n = len(points)
    if n == 0 or n & (n - 1):
        raise ValueError(f"point count {n} is not a power of two")
    _require_distinct_x(points, "the drawing")
    return sorted(points)


def horton_violation(points: Sequence[Point]) -> Optional[HortonViolation]:
    """Full recursive verification of the Horton structure; None when it holds.

    Points are ranked by x internally; witness labels refer to those ranks.
    """
    pts = _sorted_power_of_two(points)
    n = len(pts)

    def rec(idx: list[int]) -> Optional[HortonViolation]:
        if len(idx) < 2:
            return None
        even = idx[0::2]
        odd = idx[1::2]
        upper = [pts[i] for i in odd]
        lowr = [pts[i] for i in even]
        v = _clearance_violation(upper, lowr, probe_below=True)
        if v is not None:
            a, b, r = v
            return HortonViolation(
                "line-not-above", (odd[a], odd[b]), even[r],
                (pts[odd[a]], pts[odd[b]]), pts[even[r]],
            )
        v = _clearance_violation(lowr, upper, probe_below=False)
        if v is not None:
            a, b, r = v
            return HortonViolation(
                "line-not-below", (even[a], even[b]), odd[r],
                (pts[even[a]], pts[even[b]]), pts[odd[r]],
            )
        return rec(even) or rec(odd)

    return rec(list(range(n)))


def is_horton(points: Sequence[Point]) -> bool:
    """True iff the set (2^k points, distinct x) satisfies the recursive
    even/odd high-above structure."""
    return horton_violation(points) is None


# ---------------------------------------------------------------------------
# empty triangles


def _distinct_x_or_shear(points: list[Point]) -> list[Point]:
    """Return points with pairwise distinct x, shearing (x, y) -> (x + t*y, y)
    if needed.  A unimodular shear preserves every orientation, so counts based
    on the sheared set are counts for the original."""
    xs = [p[0] for p in points]
    if len(set(xs)) == len(points):
        return points
    coord_max = max(max(abs(x), abs(y)) for x, y in points)
    t = 2 * coord_max + 1
    sheared = [(x + t * y, y) for x, y in points]
    if len({p[0] for p in sheared}) != len(sheared):
        raise ValueError("duplicate points in input")
    return sheared

def _below_table_py(pts: list[Point]) -> list[list[int]]:
    n = len(pts)
    below = [[0] * n for _ in range(n)]
    for i in range(n):
        ax, ay = pts[i]
        for j in range(i + 2, n):
            bx, by = pts[j]
            dx, dy = bx - ax, by - ay
            cnt = 0
            for r in range(i + 1, j):
                s = dx * (pts[r][1] - ay) - dy * (pts[r][0] - ax)
                if s == 0:
                    raise ValueError(f"collinear triple ({i}, {r}, {j}): emptiness undefined")
                if s < 0:
                    cnt += 1
            below[i][j] = cnt
    return below


def _count_empty_triangles_py(pts: list[Point]) -> int:
    n = len(pts)
    below = _below_table_py(pts)
    total = 0
    for i in range(n):
        ax, ay = pts[i]
        bi = below[i]
        for k in range(i + 2, n):
            kx, ky = pts[k]
            dx, dy = kx - ax, ky - ay
            bik = bi[k]
            for j in range(i + 1, k):
                inside_below = bi[j] + below[j][k] - bik
                if dx * (pts[j][1] - ay) - dy * (pts[j][0] - ax) > 0:
                    # j above the line (i, k)
                    if inside_below == 0:
                        total += 1
                elif inside_below == -1:
                    # j below: inside = above(i,j) + above(j,k) - above(i,k),
                    # which resolves to below(i,k) - below(i,j) - below(j,k) - 1
                    total += 1
    return total


def _count_empty_triangles_np(pts: list[Point]) -> int:
    n = len(pts)
    P = np.asarray(pts, dtype=np.int64)
    xs, ys = P[:, 0], P[:, 1]
    idx = np.arange(n)
    below = np.zeros((n, n), dtype=np.int64)
    # below[i][j] = points strictly between i and j in x-rank and strictly
    # under the line through points i and j
    for i in range(n - 2):
        dx = xs[i + 1 :] - xs[i]
        dy = ys[i + 1 :] - ys[i]
        s = dx[:, None] * (ys[None, :] - ys[i]) - dy[:, None] * (xs[None, :] - xs[i])
        between = (idx[None, :] > i) & (idx[None, :] < idx[i + 1 :, None])
        if (np.where(between, s, 1) == 0).any():
            j_off, r = np.argwhere(between & (s == 0))[0]
            raise ValueError(
                f"collinear triple ({i}, {int(r)}, {int(j_off) + i + 1}): emptiness undefined"
            )
        below[i, i + 1 :] = np.sum(between & (s < 0), axis=1)
        # reuse s for the triple pass below
    total = 0
    for i in range(n - 2):
        dx = xs[i + 1 :] - xs[i]
        dy = ys[i + 1 :] - ys[i]
        s = dx[:, None] * (ys[None, :] - ys[i]) - dy[:, None] * (xs[None, :] - xs[i])
        for k in range(i + 2, n):
            js = np.arange(i + 1, k)
            inside_below = below[i, js] + below[js, k] - below[i, k]
            above = s[k - i - 1, js] > 0
            total += int(np.count_nonzero(np.where(above, inside_below == 0, inside_below == -1)))
    return total


def count_empty_triangles(points: Sequence[Point]) -> int:
    """Number of triples whose triangle contains no other input point strictly inside.

    Counting is O(n^3): a below-the-chord table turns each triple into an
    inclusion-exclusion lookup.
    """
    n = len(points)
    if n < 3:
        return 0
    pts = sorted(_distinct_x_or_shear(list(points)))
    mx, my = _coordinate_bounds(pts)
    if n >= 24 and mx * my < _INT64_PRODUCT_CAP:
        return _count_empty_triangles_np(pts)
    return _count_empty_triangles_py(pts)


# ---------------------------------------------------------------------------
# largest empty hole


@dataclass(frozen=True)
class HoleReport:
    """Largest empty convex polygon found, a witness, and the empty-triangle count.

    ``witness`` holds labels (positions in the input sequence) in convex
    (counterclockwise) order.
    """

    max_hole: int
    witness: tuple[int, ...]
    empty_triangle_count: int


def largest_empty_hole(points: Sequence[Point], max_n: int = MAX_HOLE_POINTS) -> HoleReport:
    """Largest h such that some h points are in convex position with no other
    input point strictly inside their hull.

    Search: every point in turn is the (y, x)-lexicographically lowest vertex;
    the remaining candidates are swept in angular order and extended into
    empty convex chains, longest-first via dynamic programming over chain
    edges.  Chains that cannot stay convex and empty are never extended.
    """
    pts = list(points)
    n = len(pts)
    if n < 3:
        raise ValueError("hole search needs at least 3 points")
    if n > max_n:
        raise ResourceLimitError(f"hole search cap exceeded: n={n} > max_n={max_n}")
    tri = find_collinear_triple(pts)
    if tri is not None:
        raise ValueError(f"points are not in general position: collinear triple {tri}")

    order = sorted(range(n), key=lambda i: (pts[i][1], pts[i][0]))
    best_size = 0
    best_hole: tuple[int, ...] = ()

    for ai in range(n):
        cand = order[ai + 1 :]
        m = len(cand)
        if best_size >= m + 1:
            break  # later anchors have even fewer candidates
        a = order[ai]
        px, py = pts[a]
        vecs = [(pts[c][0] - px, pts[c][1] - py) for c in cand]

        def ccw(s: int, t: int) -> int:
            return -1 if vecs[s][0] * vecs[t][1] - vecs[s][1] * vecs[t][0] > 0 else 1

        by_angle = sorted(range(m), key=cmp_to_key(ccw))
        q = [cand[s] for s in by_angle]
        qv = [vecs[s] for s in by_angle]

        # empty[i][j]: the triangle (anchor, q_i, q_j) has no candidate inside.
        # Candidates between i and j in angle sit in the wedge; the anchor is
        # always on the negative side of the chord, so "inside" is sign > 0.
        empty = [bytearray(m) for _ in range(m)]
        for i in range(m):
            ux, uy = qv[i]
            for j in range(i + 1, m):
                dx = qv[j][0] - ux
                dy = qv[j][1] - uy
                ok = 1
                for r in range(i + 1, j):
                    if dx * (qv[r][1] - uy) - dy * (qv[r][0] - ux) > 0:
                        ok = 0
                        break
                empty[i][j] = ok

        # longest convex chain ending with edge (i, j); the closing turns at
        # the anchor and at both chain ends are automatic for an angular sweep
        chain_len: dict[tuple[int, int], int] = {}
        back: dict[tuple[int, int], Optional[int]] = {}
        for j in range(m):
            for i in range(j):
                if not empty[i][j]:
                    continue
                ix, iy = qv[i]
                jx, jy = qv[j]
                best_len = 2
                best_back: Optional[int] = None
                for h in range(i):
                    if not empty[h][i]:
                        continue
                    if (ix - qv[h][0]) * (jy - iy) - (iy - qv[h][1]) * (jx - ix) > 0:
                        fv = chain_len[(h, i)]
                        if fv + 1 > best_len:
                            best_len = fv + 1
                            best_back = h
                chain_len[(i, j)] = best_len
                back[(i, j)] = best_back
                if best_len + 1 > best_size:
                    best_size = best_len + 1
                    rev = [j, i]
                    key = (i, j)
                    while back[key] is not None:
                        h = back[key]
                        rev.append(h)
                        key = (h, key[0])
                    best_hole = (a,) + tuple(q[c] for c in reversed(rev))

    return HoleReport(best_size, best_hole, count_empty_triangles(pts))


# ---------------------------------------------------------------------------
# desk-scale minimum drawing search


def min_drawing_search(target: OrderTypeVector, radius: int) -> Optional[list[Point]]:
    """Exhaustive search for a minimum-size drawing with the target order type.

    Tries every ordered labeling of distinct points from the grid
    [-radius, radius]^2 (labels are tuple positions), pruning on the first
    orientation mismatch and on partial size no better than the best found.
    Desk-scale oracle: capped at 5 points and radius 3.
    """
    n = target.n
    if n > 5:
        raise ResourceLimitError(f"search cap exceeded: n={n} > 5")
    if radius > 3:
        raise ResourceLimitError(f"search cap exceeded: radius={radius} > 3")
    if radius < 0:
        raise ValueError("radius must be nonnegative")

    want: dict[tuple[int, int, int], int] = {}
    for rank, (i, j, k) in enumerate(itertools.combinations(range(n), 3)):
        want[(i, j, k)] = target.signs[rank]

    grid = sorted(
        ((x, y) for x in range(-radius, radius + 1) for y in range(-radius, radius + 1)),
        key=lambda p: (max(abs(p[0]), abs(p[1])), p),
    )

    best: Optional[list[Point]] = None
    best_size: Optional[int] = None
    chosen: list[Point] = []

    def extend(depth: int, size_so_far: int) -> None:
        nonlocal best, best_size
        if best_size is not None and size_so_far >= best_size:
            return
        if depth == n:
            best = list(chosen)
            best_size = size_so_far
            return
        for pt in grid:
            cheb = max(abs(pt[0]), abs(pt[1]))
            sz = max(size_so_far, cheb)
            if best_size is not None and sz >= best_size:
                break  # grid is size-ascending
            if pt in chosen:
                continue
            ok = True
            for i in range(depth - 1):
                pi = chosen[i]
                for j in range(i + 1, depth):
                    if orientation(pi, chosen[j], pt) != want[(i, j, depth)]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            chosen.append(pt)
            extend(depth + 1, sz)
            chosen.pop()

    extend(0, 0)
    return best
