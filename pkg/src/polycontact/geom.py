"""Exact (rational) and epsilon-tolerant 3D geometry for touching-polygon scenes.

Coordinates are either `fractions.Fraction` (exact mode, no rounding anywhere)
or `float` (epsilon mode).  All predicates go through an `ArithmeticContext`,
so the same code path serves both modes; only the sign test differs.

The contact model implemented by `classify_pair` treats polygons as *open*
filled regions:

* interiors (relative interiors for segments) must be disjoint,
* a corner of one polygon may lie on another polygon only if it coincides
  with one of that polygon's corners,
* any other closed-set intersection (edge crossing an edge, or an edge
  running through the other polygon, e.g. along the diagonal between two
  shared corners) is tolerated and reported as a boundary touch.

Only convex polygons (plus degenerate segments and single points) are
supported by `classify_pair`; that covers every construction in this
package and keeps the chord logic exact and simple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

Point3 = tuple  # (x, y, z) of Fraction or float


class GeometryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Arithmetic context
# ---------------------------------------------------------------------------


class ArithmeticContext:
    """Sign tests and point comparisons for exact or float arithmetic.

    In exact mode every comparison is literal.  In float mode a quantity
    with magnitude <= eps counts as zero and points within eps (L-inf)
    coincide; callers are expected to keep scenes at unit scale.
    """

    def __init__(self, exact: bool = True, eps: float = 1e-9):
        self.exact = exact
        self.eps = 0 if exact else eps

    def sign(self, x) -> int:
        if not self.exact and abs(x) <= self.eps:
            return 0
        return (x > 0) - (x < 0)

    def is_zero(self, x) -> bool:
        return self.sign(x) == 0

    def eq(self, x, y) -> bool:
        return self.sign(x - y) == 0

    def point_eq(self, p: Point3, q: Point3) -> bool:
        return all(self.sign(a - b) == 0 for a, b in zip(p, q))

    def __repr__(self):
        return f"ArithmeticContext(exact={self.exact}, eps={self.eps})"


EXACT = ArithmeticContext(exact=True)


# ---------------------------------------------------------------------------
# Vector helpers (tuples in, tuples out)
# ---------------------------------------------------------------------------


def vsub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vadd(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vscale(a, s):
    return (a[0] * s, a[1] * s, a[2] * s)


def vdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vcross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def is_zero_vec(v, ctx: ArithmeticContext) -> bool:
    return all(ctx.is_zero(c) for c in v)


def as_fraction_point(p) -> Point3:
    return (Fraction(p[0]), Fraction(p[1]), Fraction(p[2]))


def as_float_point(p) -> Point3:
    return (float(p[0]), float(p[1]), float(p[2]))


def orient3d(a: Point3, b: Point3, c: Point3, d: Point3,
             ctx: ArithmeticContext = EXACT) -> int:
    """Sign of det(b-a, c-a, d-a): +1, -1, or 0 iff the points are coplanar."""
    u, v, w = vsub(b, a), vsub(c, a), vsub(d, a)
    det = vdot(u, vcross(v, w))
    return ctx.sign(det)


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polygon3:
    """An ordered corner list in 3D.

    One corner is a point "polygon", two make a degenerate segment; both
    occur for low-degree vertices and are carried through verification with
    a degeneracy warning.  Corners may contain straight angles (collinear
    consecutive corners): contact points must stay corners even when a
    convex hull would drop them.
    """

    corners: tuple
    claimed_convex: bool = True

    def __post_init__(self):
        if len(self.corners) < 1:
            raise GeometryError("polygon needs at least one corner")

    @property
    def kind(self) -> str:
        n = len(self.corners)
        return "point" if n == 1 else ("segment" if n == 2 else "polygon")


@dataclass
class PolygonProperties:
    planar: bool = False
    simple: bool = False
    convex: bool = False
    strictly_convex: bool = False
    degenerate: bool = False
    issues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.planar and (self.degenerate or self.simple)


def _plane_of(corners: Sequence[Point3], ctx: ArithmeticContext):
    """Supporting plane (normal, offset) from the first non-collinear triple.

    Returns None when all corners are collinear (degenerate).  In float mode
    the normal is scaled to unit length so eps thresholds mean distances.
    """
    if len(corners) < 3:
        return None
    a = corners[0]
    for i in range(1, len(corners) - 1):
        for j in range(i + 1, len(corners)):
            n = vcross(vsub(corners[i], a), vsub(corners[j], a))
            if not is_zero_vec(n, ctx):
                if not ctx.exact:
                    norm = math.sqrt(vdot(n, n))
                    n = vscale(n, 1.0 / norm)
                return n, vdot(n, a)
    return None


def plane_contains(plane, p: Point3, ctx: ArithmeticContext) -> bool:
    n, d = plane
    return ctx.is_zero(vdot(n, p) - d)


def _drop_axis(normal, ctx: ArithmeticContext):
    """Axis to drop for 2D work, and whether the kept pair preserves ccw."""
    ax = max(range(3), key=lambda k: abs(normal[k]))
    return ax, ctx.sign(normal[ax]) > 0


def project2d(p: Point3, axis: int):
    if axis == 0:
        return (p[1], p[2])
    if axis == 1:
        return (p[2], p[0])
    return (p[0], p[1])


def cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _segments_intersect2d(p1, p2, q1, q2, ctx) -> bool:
    """Closed 2D segment intersection test (proper or touching)."""
    d1 = ctx.sign(cross2(q1, q2, p1))
    d2 = ctx.sign(cross2(q1, q2, p2))
    d3 = ctx.sign(cross2(p1, p2, q1))
    d4 = ctx.sign(cross2(p1, p2, q2))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on_seg(a, b, c):
        # c collinear with ab assumed
        return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    if d1 == 0 and on_seg(q1, q2, p1):
        return True
    if d2 == 0 and on_seg(q1, q2, p2):
        return True
    if d3 == 0 and on_seg(p1, p2, q1):
        return True
    if d4 == 0 and on_seg(p1, p2, q2):
        return True
    return False


def polygon_properties(poly: Polygon3, ctx: ArithmeticContext = EXACT) -> PolygonProperties:
    """Planarity, simplicity, convexity and degeneracy flags for a polygon.

    A non-coplanar corner list yields planar=False and leaves the other
    flags False.  Convexity allows straight angles; strict convexity does
    not.
    """
    props = PolygonProperties()
    cs = poly.corners
    n = len(cs)

    for i in range(n):
        for j in range(i + 1, n):
            if ctx.point_eq(cs[i], cs[j]):
                props.issues.append(f"duplicate corners {i} and {j}")
    if props.issues:
        props.planar = True
        return props

    if n == 1:
        props.planar = props.simple = props.convex = True
        props.degenerate = True
        return props
    if n == 2:
        props.planar = props.simple = props.convex = True
        props.degenerate = True
        return props

    plane = _plane_of(cs, ctx)
    if plane is None:
        # >= 3 collinear corners
        props.planar = True
        props.degenerate = True
        props.issues.append("all corners collinear")
        return props
    normal, offset = plane
    for p in cs:
        if not plane_contains(plane, p, ctx):
            props.issues.append("corners not coplanar")
            return props
    props.planar = True

    axis, keep_ccw = _drop_axis(normal, ctx)
    pts = [project2d(p, axis) for p in cs]

    # Simplicity: no two non-adjacent edges meet; adjacent edges meet only
    # at their shared corner (no spikes folding back).
    simple = True
    for i in range(n):
        a1, a2 = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            b1, b2 = pts[j], pts[(j + 1) % n]
            if _segments_intersect2d(a1, a2, b1, b2, ctx):
                simple = False
                props.issues.append(f"edges {i} and {j} intersect")
                break
        if not simple:
            break
    if simple:
        for i in range(n):
            prev = pts[(i - 1) % n]
            cur = pts[i]
            nxt = pts[(i + 1) % n]
            if ctx.sign(cross2(prev, cur, nxt)) == 0:
                # collinear: a spike reverses direction instead of continuing
                v1 = (cur[0] - prev[0], cur[1] - prev[1])
                v2 = (nxt[0] - cur[0], nxt[1] - cur[1])
                if ctx.sign(v1[0] * v2[0] + v1[1] * v2[1]) < 0:
                    simple = False
                    props.issues.append(f"spike at corner {i}")
                    break
    props.simple = simple
    if not simple:
        return props

    turns = [ctx.sign(cross2(pts[(i - 1) % n], pts[i], pts[(i + 1) % n]))
             for i in range(n)]
    pos = sum(1 for t in turns if t > 0)
    neg = sum(1 for t in turns if t < 0)
    props.convex = pos == 0 or neg == 0
    props.strictly_convex = props.convex and 0 not in turns
    return props


def convex_hull_planar(points: Sequence[Point3], ctx: ArithmeticContext = EXACT,
                       keep_collinear: bool = False) -> Polygon3:
    """Convex hull of coplanar 3D points, as a ccw polygon.

    Orientation is counterclockwise with respect to the canonical plane
    normal (the lexicographically positive one).  Interior points are
    dropped; collinear hull points are dropped too unless keep_collinear
    is set, which constructions use to retain straight-angle contact
    corners.
    """
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if len(pts) < 2:
        if not pts:
            raise GeometryError("hull of empty point set")
        return Polygon3(corners=(pts[0],))
    plane = _plane_of(pts, ctx)
    if plane is None:
        # all collinear: degenerate segment between the extremes
        d = vsub(pts[-1], pts[0])
        params = sorted(pts, key=lambda p: vdot(vsub(p, pts[0]), d))
        return Polygon3(corners=(params[0], params[-1]))
    normal, _ = plane
    for p in pts:
        if not plane_contains(plane, p, ctx):
            raise GeometryError("hull input not coplanar")
    # canonical normal: first nonzero component positive
    flip = False
    for c in normal:
        s = ctx.sign(c)
        if s != 0:
            flip = s < 0
            break
    axis, keep_ccw = _drop_axis(normal, ctx)
    if flip:
        keep_ccw = not keep_ccw

    decorated = sorted(range(len(pts)), key=lambda i: project2d(pts[i], axis))
    pro = [project2d(p, axis) for p in pts]

    def build(indices):
        chain = []
        for i in indices:
            while len(chain) >= 2:
                s = ctx.sign(cross2(pro[chain[-2]], pro[chain[-1]], pro[i]))
                if s < 0 or (s == 0 and not keep_collinear):
                    chain.pop()
                else:
                    break
            chain.append(i)
        return chain

    lower = build(decorated)
    upper = build(list(reversed(decorated)))
    hull = lower[:-1] + upper[:-1]
    if not keep_ccw:
        hull.reverse()
    corners = tuple(pts[i] for i in hull)
    return Polygon3(corners=corners)


# ---------------------------------------------------------------------------
# Pair classification
# ---------------------------------------------------------------------------

DISJOINT = "Disjoint"
CORNER_CONTACT = "CornerContact"
BOUNDARY_TOUCH = "BoundaryTouch"
VIOLATION = "Violation"


@dataclass
class PairClassification:
    kind: str
    shared_corners: list = field(default_factory=list)
    touch_witnesses: list = field(default_factory=list)
    violations: list = field(default_factory=list)  # (reason, witness point)

    @property
    def witnesses(self) -> list:
        if self.kind == VIOLATION:
            return [w for _, w in self.violations]
        if self.kind == CORNER_CONTACT:
            return list(self.shared_corners)
        return list(self.touch_witnesses)


class _Convex2D:
    """A convex polygon (or segment/point) flattened into its plane.

    Supplies the point-location and line-chord queries that the pair
    classifier needs, all in the polygon's own 2D frame.
    """

    def __init__(self, poly: Polygon3, ctx: ArithmeticContext, plane, axis, ccw):
        self.ctx = ctx
        self.corners3 = poly.corners
        self.axis = axis
        pts = [project2d(p, axis) for p in poly.corners]
        if not ccw:
            pts = list(reversed(pts))
            self.order = list(reversed(range(len(poly.corners))))
        else:
            self.order = list(range(len(poly.corners)))
        self.pts = pts

    def locate(self, q2) -> str:
        """'corner' | 'boundary' | 'interior' | 'outside' for an in-plane point."""
        ctx = self.ctx
        pts = self.pts
        n = len(pts)
        for p in pts:
            if ctx.is_zero(q2[0] - p[0]) and ctx.is_zero(q2[1] - p[1]):
                return "corner"
        if n == 1:
            return "outside"
        if n == 2:
            if ctx.sign(cross2(pts[0], pts[1], q2)) != 0:
                return "outside"
            d = (pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])
            t = (q2[0] - pts[0][0]) * d[0] + (q2[1] - pts[0][1]) * d[1]
            if ctx.sign(t) < 0 or ctx.sign(t - (d[0] * d[0] + d[1] * d[1])) > 0:
                return "outside"
            return "boundary"  # relative interior of the segment
        on_edge = False
        for i in range(n):
            s = ctx.sign(cross2(pts[i], pts[(i + 1) % n], q2))
            if s < 0:
                return "outside"
            if s == 0:
                a, b = pts[i], pts[(i + 1) % n]
                lo_x, hi_x = min(a[0], b[0]), max(a[0], b[0])
                lo_y, hi_y = min(a[1], b[1]), max(a[1], b[1])
                if lo_x <= q2[0] <= hi_x and lo_y <= q2[1] <= hi_y:
                    on_edge = True
                else:
                    return "outside"
        return "boundary" if on_edge else "interior"


def _poly_frame(poly: Polygon3, ctx: ArithmeticContext):
    """(plane, projector) for a polygon; plane None when degenerate."""
    plane = _plane_of(poly.corners, ctx)
    if plane is None:
        return None, None
    normal, _ = plane
    axis, keep_ccw = _drop_axis(normal, ctx)
    pts = [project2d(p, axis) for p in poly.corners]
    # orient ccw in the projected frame
    area2 = sum(cross2(pts[0], pts[i], pts[i + 1]) for i in range(1, len(pts) - 1))
    ccw = ctx.sign(area2) > 0
    return plane, _Convex2D(poly, ctx, plane, axis, ccw)


def _locate_point(poly: Polygon3, flat: Optional[_Convex2D], plane,
                  q: Point3, ctx: ArithmeticContext) -> str:
    """Classify q against a polygon of any degeneracy, in 3D."""
    for c in poly.corners:
        if ctx.point_eq(c, q):
            return "corner"
    n = len(poly.corners)
    if n == 1:
        return "outside"
    if n == 2:
        a, b = poly.corners
        d = vsub(b, a)
        w = vsub(q, a)
        if not is_zero_vec(vcross(d, w), ctx):
            return "outside"
        t = vdot(w, d)
        if ctx.sign(t) < 0 or ctx.sign(t - vdot(d, d)) > 0:
            return "outside"
        return "boundary"
    if plane is None or not plane_contains(plane, q, ctx):
        return "outside"
    return flat.locate(project2d(q, flat.axis))


def _chord(poly: Polygon3, flat: _Convex2D, p0: Point3, dr: Point3,
           ctx: ArithmeticContext):
    """Clip the line p0 + t*dr (known to lie in the polygon's plane).

    Returns (t_lo, t_hi, through_interior) or None when the line misses.
    through_interior is False when the chord runs along an edge, in which
    case the whole chord belongs to the boundary.
    """
    a0 = project2d(p0, flat.axis)
    d2 = project2d(dr, flat.axis)
    pts = flat.pts
    n = len(pts)
    lo, hi = None, None  # None = unbounded
    through = True
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for a, b in edges:
        ex, ey = b[0] - a[0], b[1] - a[1]
        # inward halfplane for ccw polygon: cross(edge, x - a) >= 0
        num = ex * (a0[1] - a[1]) - ey * (a0[0] - a[0])
        den = ex * d2[1] - ey * d2[0]
        sden = ctx.sign(den)
        if sden == 0:
            if ctx.sign(num) < 0:
                return None
            if ctx.sign(num) == 0:
                through = False  # line runs along this edge
            continue
        t = -Fraction(num, den) if ctx.exact else -num / den
        if sden > 0:
            if lo is None or t > lo:
                lo = t
        else:
            if hi is None or t < hi:
                hi = t
    if lo is None or hi is None:
        raise GeometryError("unbounded chord; polygon not convex?")
    if ctx.sign(hi - lo) < 0:
        return None
    return lo, hi, through


def _line_point(p0, dr, t):
    return vadd(p0, vscale(dr, t))


def _corner_incursions(p: Polygon3, q: Polygon3, q_flat, q_plane, ctx, out):
    """Corners of p lying on q but not at q's corners are violations."""
    for c in p.corners:
        loc = _locate_point(q, q_flat, q_plane, c, ctx)
        if loc == "interior":
            out.append(("corner-inside", c))
        elif loc == "boundary":
            out.append(("corner-on-boundary", c))


def _classify_coplanar(p: Polygon3, q: Polygon3, p_flat, q_flat,
                       p_plane, q_plane, ctx) -> PairClassification:
    res = PairClassification(kind=DISJOINT)
    shared = [c for c in p.corners if any(ctx.point_eq(c, d) for d in q.corners)]
    res.shared_corners = shared
    _corner_incursions(p, q, q_flat, q_plane, ctx, res.violations)
    _corner_incursions(q, p, p_flat, p_plane, ctx, res.violations)

    # Interior overlap via separating axes (edge normals of both polygons).
    # Both inputs here are proper polygons: coplanar pairs with a degenerate
    # member are routed through the degenerate classifiers instead.
    def axes(flat):
        pts = flat.pts
        n = len(pts)
        return [(-(pts[(i + 1) % n][1] - pts[i][1]),
                 pts[(i + 1) % n][0] - pts[i][0]) for i in range(n)]

    def interval(flat, ax):
        vals = [ax[0] * pt[0] + ax[1] * pt[1] for pt in flat.pts]
        return min(vals), max(vals)

    separated = False
    touching_axis = False
    for flat in (p_flat, q_flat):
        for ax in axes(flat):
            p_lo, p_hi = interval(p_flat, ax)
            q_lo, q_hi = interval(q_flat, ax)
            if ctx.sign(q_lo - p_hi) > 0 or ctx.sign(p_lo - q_hi) > 0:
                separated = True
                break
            if ctx.is_zero(q_lo - p_hi) or ctx.is_zero(p_lo - q_hi):
                touching_axis = True
        if separated:
            break
    if not separated and not touching_axis:
        res.violations.append(("interior-overlap", p.corners[0]))

    if res.violations:
        res.kind = VIOLATION
    elif shared:
        res.kind = CORNER_CONTACT
    elif not separated:
        # touching boundaries without shared corners
        res.kind = BOUNDARY_TOUCH
        res.touch_witnesses = _boundary_touch_points(p, q, p_flat, q_flat,
                                                     p_plane, q_plane, ctx)
        if not res.touch_witnesses:
            res.kind = DISJOINT
    return res


def _boundary_touch_points(p, q, p_flat, q_flat, p_plane, q_plane, ctx):
    """Sample witnesses for coplanar boundary touches (edge-edge meets)."""
    out = []
    pc, qc = p.corners, q.corners
    np_, nq = len(pc), len(qc)
    p_edges = [(pc[i], pc[(i + 1) % np_]) for i in range(np_)] if np_ >= 2 else []
    q_edges = [(qc[i], qc[(i + 1) % nq]) for i in range(nq)] if nq >= 2 else []
    if np_ == 2:
        p_edges = p_edges[:1]
    if nq == 2:
        q_edges = q_edges[:1]
    axis = p_flat.axis if p_flat is not None else (q_flat.axis if q_flat else 2)
    for a1, a2 in p_edges:
        for b1, b2 in q_edges:
            if _segments_intersect2d(project2d(a1, axis), project2d(a2, axis),
                                     project2d(b1, axis), project2d(b2, axis), ctx):
                out.append(a1)
                return out
    for c in pc:
        if _locate_point(q, q_flat, q_plane, c, ctx) != "outside":
            out.append(c)
            return out
    for c in qc:
        if _locate_point(p, p_flat, p_plane, c, ctx) != "outside":
            out.append(c)
            return out
    return out


def classify_pair(p: Polygon3, q: Polygon3,
                  ctx: ArithmeticContext = EXACT) -> PairClassification:
    """Classify how two convex (or degenerate) polygons meet in 3D.

    Returns a `PairClassification` whose kind is one of Disjoint,
    CornerContact, BoundaryTouch (tolerated) or Violation.  Violations carry
    (reason, witness) pairs with reasons 'interior-overlap', 'corner-inside'
    or 'corner-on-boundary'.
    """
    p_plane, p_flat = _poly_frame(p, ctx)
    q_plane, q_flat = _poly_frame(q, ctx)

    # Degenerate cases (point or segment, or collinear corner lists) are
    # routed through the same machinery; a missing plane means dimension <= 1.
    if p_plane is not None and q_plane is not None:
        n1, d1 = p_plane
        n2, d2 = q_plane
        dr = vcross(n1, n2)
        if is_zero_vec(dr, ctx):
            if plane_contains(p_plane, q.corners[0], ctx):
                return _classify_coplanar(p, q, p_flat, q_flat, p_plane, q_plane, ctx)
            return PairClassification(kind=DISJOINT)
        return _classify_transversal(p, q, p_flat, q_flat, p_plane, q_plane,
                                     dr, ctx)

    # At least one degenerate object.
    if p_plane is None and q_plane is not None:
        return _classify_degenerate_vs_poly(p, q, q_flat, q_plane, ctx)
    if q_plane is None and p_plane is not None:
        res = _classify_degenerate_vs_poly(q, p, p_flat, p_plane, ctx)
        return res
    return _classify_degenerate_pair(p, q, ctx)


def _classify_transversal(p, q, p_flat, q_flat, p_plane, q_plane, dr, ctx):
    res = PairClassification(kind=DISJOINT)
    res.shared_corners = [c for c in p.corners
                          if any(ctx.point_eq(c, d) for d in q.corners)]
    _corner_incursions(p, q, q_flat, q_plane, ctx, res.violations)
    _corner_incursions(q, p, p_flat, p_plane, ctx, res.violations)

    # Intersection line of the two planes.
    n1, d1 = p_plane
    n2, d2 = q_plane
    if not ctx.exact:
        norm = math.sqrt(vdot(dr, dr))
        dr = vscale(dr, 1.0 / norm)
    n1n1 = vdot(n1, n1)
    n2n2 = vdot(n2, n2)
    n1n2 = vdot(n1, n2)
    det = n1n1 * n2n2 - n1n2 * n1n2
    c1 = (d1 * n2n2 - d2 * n1n2)
    c2 = (d2 * n1n1 - d1 * n1n2)
    if ctx.exact:
        c1, c2 = Fraction(c1, det), Fraction(c2, det)
    else:
        c1, c2 = c1 / det, c2 / det
    p0 = vadd(vscale(n1, c1), vscale(n2, c2))

    ip = _chord(p, p_flat, p0, dr, ctx)
    iq = _chord(q, q_flat, p0, dr, ctx)
    if ip is None or iq is None:
        if res.violations:
            res.kind = VIOLATION
        elif res.shared_corners:
            res.kind = CORNER_CONTACT
        return res
    lo = max(ip[0], iq[0])
    hi = min(ip[1], iq[1])
    s = ctx.sign(hi - lo)
    if s < 0:
        if res.violations:
            res.kind = VIOLATION
        elif res.shared_corners:
            res.kind = CORNER_CONTACT
        return res

    if s > 0 and ip[2] and iq[2]:
        # The open part of a convex polygon's chord is interior whenever the
        # chord does not run along an edge; when that holds for both, the
        # shared open segment witnesses an interior-interior intersection.
        mid = _line_point(p0, dr, (lo + hi) / 2)
        in_p = _locate_point(p, p_flat, p_plane, mid, ctx)
        in_q = _locate_point(q, q_flat, q_plane, mid, ctx)
        if in_p == "interior" and in_q == "interior":
            res.violations.append(("interior-overlap", mid))

    touch = []
    for t in {lo, hi}:
        pt = _line_point(p0, dr, t)
        loc_p = _locate_point(p, p_flat, p_plane, pt, ctx)
        loc_q = _locate_point(q, q_flat, q_plane, pt, ctx)
        if loc_p == "corner" and loc_q == "corner":
            continue  # already in shared_corners
        if loc_p != "outside" and loc_q != "outside":
            touch.append(pt)

    if res.violations:
        res.kind = VIOLATION
    elif res.shared_corners:
        res.kind = CORNER_CONTACT
        res.touch_witnesses = touch
    elif touch:
        res.kind = BOUNDARY_TOUCH
        res.touch_witnesses = touch
    return res


def _classify_degenerate_vs_poly(seg: Polygon3, poly: Polygon3, poly_flat,
                                 poly_plane, ctx) -> PairClassification:
    """Segment-or-point against a proper polygon."""
    res = PairClassification(kind=DISJOINT)
    res.shared_corners = [c for c in seg.corners
                          if any(ctx.point_eq(c, d) for d in poly.corners)]
    _corner_incursions(seg, poly, poly_flat, poly_plane, ctx, res.violations)
    seg_plane, seg_flat = None, None
    _corner_incursions(poly, seg, seg_flat, seg_plane, ctx, res.violations)

    hits = []
    if len(seg.corners) >= 2:
        a = seg.corners[0]
        b = seg.corners[-1] if len(seg.corners) == 2 else seg.corners[1]
        n, d = poly_plane
        da = vdot(n, a) - d
        db = vdot(n, b) - d
        sa, sb = ctx.sign(da), ctx.sign(db)
        if sa == 0 and sb == 0:
            # coplanar segment: clip against the polygon
            dr = vsub(b, a)
            chord = _chord(poly, poly_flat, a, dr, ctx)
            if chord is not None:
                lo = max(chord[0], Fraction(0) if ctx.exact else 0.0)
                hi = min(chord[1], Fraction(1) if ctx.exact else 1.0)
                if ctx.sign(hi - lo) >= 0:
                    if ctx.sign(hi - lo) > 0 and chord[2]:
                        mid = _line_point(a, dr, (lo + hi) / 2)
                        if _locate_point(poly, poly_flat, poly_plane, mid, ctx) == "interior":
                            res.violations.append(("interior-overlap", mid))
                    for t in {lo, hi}:
                        hits.append(_line_point(a, dr, t))
        elif sa * sb <= 0:
            dr = vsub(b, a)
            denom = vdot(n, dr)
            if not ctx.is_zero(denom):
                t = Fraction(-da, denom) if ctx.exact else -da / denom
                x = _line_point(a, dr, t)
                loc = _locate_point(poly, poly_flat, poly_plane, x, ctx)
                if loc != "outside":
                    seg_loc = _locate_point(seg, None, None, x, ctx)
                    if seg_loc == "boundary" and loc == "interior":
                        res.violations.append(("interior-overlap", x))
                    hits.append(x)
    else:
        pt = seg.corners[0]
        loc = _locate_point(poly, poly_flat, poly_plane, pt, ctx)
        if loc != "outside":
            hits.append(pt)

    touch = [h for h in hits
             if not any(ctx.point_eq(h, c) for c in res.shared_corners)]
    if res.violations:
        res.kind = VIOLATION
    elif res.shared_corners:
        res.kind = CORNER_CONTACT
        res.touch_witnesses = touch
    elif touch:
        res.kind = BOUNDARY_TOUCH
        res.touch_witnesses = touch
    return res


def _classify_degenerate_pair(p: Polygon3, q: Polygon3, ctx) -> PairClassification:
    """Two segments/points (possibly skew)."""
    res = PairClassification(kind=DISJOINT)
    res.shared_corners = [c for c in p.corners
                          if any(ctx.point_eq(c, d) for d in q.corners)]
    _corner_incursions(p, q, None, None, ctx, res.violations)
    _corner_incursions(q, p, None, None, ctx, res.violations)

    hits = []
    if len(p.corners) == 2 and len(q.corners) == 2:
        a, b = p.corners
        c, d = q.corners
        u, v, w = vsub(b, a), vsub(d, c), vsub(c, a)
        n = vcross(u, v)
        if is_zero_vec(n, ctx):
            # parallel: collinear overlap?
            if is_zero_vec(vcross(u, w), ctx):
                uu = vdot(u, u)
                t0 = vdot(w, u)
                t1 = vdot(vsub(d, a), u)
                lo = max(min(t0, t1), 0 * uu)
                hi = min(max(t0, t1), uu)
                if ctx.sign(hi - lo) > 0:
                    mid = (lo + hi) / 2
                    x = _line_point(a, u, Fraction(mid, uu) if ctx.exact else mid / uu)
                    res.violations.append(("interior-overlap", x))
                elif ctx.sign(hi - lo) == 0:
                    x = _line_point(a, u, Fraction(lo, uu) if ctx.exact else lo / uu)
                    hits.append(x)
        elif ctx.is_zero(vdot(w, n)):
            # coplanar, non-parallel: solve intersection params
            nn = vdot(n, n)
            t = vdot(vcross(w, v), n)
            s = vdot(vcross(w, u), n)
            if ctx.exact:
                t, s = Fraction(t, nn), Fraction(s, nn)
            else:
                t, s = t / nn, s / nn
            if 0 <= t <= 1 and 0 <= s <= 1:
                x = _line_point(a, u, t)
                p_loc = _locate_point(p, None, None, x, ctx)
                q_loc = _locate_point(q, None, None, x, ctx)
                if p_loc == "boundary" and q_loc == "boundary":
                    res.violations.append(("interior-overlap", x))
                elif p_loc != "outside" and q_loc != "outside":
                    hits.append(x)

    touch = [h for h in hits
             if not any(ctx.point_eq(h, c) for c in res.shared_corners)]
    if res.violations:
        res.kind = VIOLATION
    elif res.shared_corners:
        res.kind = CORNER_CONTACT
    elif touch:
        res.kind = BOUNDARY_TOUCH
        res.touch_witnesses = touch
    return res
