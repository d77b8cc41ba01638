"""Squares of cycles as touching unit squares (even n) or quadrilaterals.

Even n: contact points of consecutive vertices form a regular n-gon of
unit side in the middle plane; the distance-2 contacts of odd (even)
vertices form a regular (n/2)-gon in the top (bottom) plane, rotated half
a step, with unit chords between index-consecutive points.  Each vertex's
four contacts then form a unit square exactly when the ring height is
h = sqrt(1 - 1/(4 sin^2(2 pi q / n))) for the chosen ring winding q; the
construction picks q = 1 when |sin(2 pi/n)| > 1/2 and otherwise the
smallest odd q coprime to n that keeps h real and positive.  For n = 12
no such q exists (every admissible winding makes h = 0 and the flattened
squares overlap), so that single size is rejected.

Odd n: built from the even n-1 scene by splitting the two contacts T and
B apart.  The two new corners stay in the plane through T and B
perpendicular to the layout's symmetry axis (for the 6-cycle base this is
the plane through the adjacent square centers), each stopping at 98% of
the way to its square's diagonal, which keeps every quadrilateral strictly
convex with all edges below |TB| < 2 and none shorter than (nearly) sqrt(2)/2.
"""

from __future__ import annotations

import math
from math import cos, gcd, pi, sin, sqrt

from .core import Graph, edge_key
from .geom import Polygon3
from .scene import ConstructionError, Scene, graph_scene

_SPLIT_FRACTION = 0.995  # stop just before the split square's diagonal


def cycle_square_graph(n: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((str(i + 1), str((i + 1) % n + 1)))
        edges.append((str(i + 1), str((i + 2) % n + 1)))
    verts = [str(i + 1) for i in range(n)]
    seen = set()
    uniq = []
    for u, v in edges:
        k = edge_key(u, v)
        if k not in seen:
            seen.add(k)
            uniq.append((u, v))
    return Graph.from_edges(uniq, vertices=verts)


def _ring_winding(n: int):
    """Odd winding q coprime to n with sin(2 pi q/n) > 1/2, smallest first."""
    for q in range(1, n, 2):
        if gcd(q, n) != 1:
            continue
        if abs(sin(2 * pi * q / n)) > 0.5 + 1e-12:
            return q
    return None


def _even_scene_data(n: int):
    q = _ring_winding(n)
    if q is None:
        raise ConstructionError(
            f"unit squares degenerate for n={n}: every admissible ring "
            "winding flattens the top and bottom rings into the middle "
            "plane, where the squares overlap")
    delta = 2 * pi * q / n
    r_mid = 1.0 / (2 * sin(delta / 2))
    r_ring = 1.0 / (2 * abs(sin(delta)))
    h = sqrt(max(0.0, 1.0 - r_ring * r_ring))

    flip = sin(delta) < 0  # windings past the half turn mirror the offset
    offs = delta / 2 + (pi if flip else 0.0)

    mid = {}
    ring = {}
    for i in range(1, n + 1):
        mid[i] = (r_mid * cos(i * delta), r_mid * sin(i * delta), 0.0)
        z = h if i % 2 == 1 else -h
        ring[i] = (r_ring * cos(i * delta + offs),
                   r_ring * sin(i * delta + offs), z)
    return q, h, mid, ring


def represent_cycle_square(n: int) -> Scene:
    """Contact representation of the square of an n-cycle, n >= 6.

    Even n uses unit squares; odd n extends the even scene below it.
    n = 5 (the complete graph K5) is out of scope.
    """
    if n == 5:
        raise ConstructionError("n = 5 is the complete graph; unsupported here")
    if n < 6:
        raise ConstructionError("need n >= 6")
    if n % 2 == 0:
        return _even_scene(n)
    return _odd_scene(n)


def _even_scene(n: int) -> Scene:
    q, h, mid, ring = _even_scene_data(n)
    g = cycle_square_graph(n)

    # mid[i] realizes the cycle edge (i, i+1); ring[i] the hop edge (i, i+2)
    contacts = {}
    for i in range(1, n + 1):
        j = i % n + 1
        contacts[edge_key(str(i), str(j))] = mid[i]
        k = (i + 1) % n + 1
        contacts[edge_key(str(i), str(k))] = ring[i]

    polygons = {}
    for i in range(1, n + 1):
        prev1 = (i - 2) % n + 1
        prev2 = (i - 3) % n + 1
        nxt1 = i % n + 1
        nxt2 = (i + 1) % n + 1
        c1 = contacts[edge_key(str(i), str(prev1))]
        c2 = contacts[edge_key(str(i), str(nxt1))]
        c3 = contacts[edge_key(str(i), str(nxt2))]
        c4 = contacts[edge_key(str(i), str(prev2))]
        polygons[str(i)] = Polygon3(corners=(c1, c2, c3, c4))

    meta = {"construction": "cycle-square", "arithmetic": "float",
            "epsilon": 1e-9, "n": n, "ring_height": h, "winding": q}
    return graph_scene(g, polygons, contacts, meta)


def _lerp(a, b, t):
    return tuple(a[k] + t * (b[k] - a[k]) for k in range(3))


def _vsub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _corner_frame(quad: Polygon3, start):
    """(prev, next) corners around `start` and the quad's normal."""
    cs = [tuple(c) for c in quad.corners]
    i = cs.index(tuple(start))
    normal = _cross(_vsub(cs[1], cs[0]), _vsub(cs[2], cs[0]))
    return cs[i - 1], cs[(i + 1) % 4], normal


def _pick_split_corners(q_first: Polygon3, q_last: Polygon3, top, bottom):
    """Corners splitting T and B apart, all coplanar with T and B.

    X1 ranges over the corner triangle of the first quad (barycentric grid
    toward the neighbors of T, staying short of the diagonal so the
    trimmed quad stays strictly convex); X2 is then pinned to the line
    where the plane through T, B, X1 cuts the last quad's plane.  The
    deterministic grid maximizes the shorter of the two split edges, which
    keeps every edge of the new quadrilateral above (nearly) sqrt(2)/2.
    """
    p1, n1, _ = _corner_frame(q_first, top)
    pm, nm, nq2 = _corner_frame(q_last, bottom)
    u2, v2 = _vsub(pm, bottom), _vsub(nm, bottom)
    nn = _cross(u2, v2)
    det2 = _dot(nn, nn)

    def evaluate(a, b):
        if a < 0.002 or b < 0.002 or a + b > _SPLIT_FRACTION:
            return None
        x1 = tuple(top[k] + a * (p1[k] - top[k]) + b * (n1[k] - top[k])
                   for k in range(3))
        n_pi = _cross(_vsub(bottom, top), _vsub(x1, top))
        d2dir = _cross(n_pi, nq2)
        scale = math.sqrt(_dot(d2dir, d2dir))
        if scale < 1e-12:
            return None
        d2dir = tuple(c / scale for c in d2dir)
        out = None
        for sk in range(-120, 121):
            t = sk / 60.0
            if abs(t) < 1e-9:
                continue
            x2 = tuple(bottom[k] + t * d2dir[k] for k in range(3))
            w = _vsub(x2, bottom)
            aa = _dot(_cross(w, v2), nn) / det2
            bb = _dot(_cross(u2, w), nn) / det2
            if aa < 0.002 or bb < 0.002 or aa + bb > _SPLIT_FRACTION:
                continue
            score = _quad_score((x1, top, x2, bottom))
            if score is None:
                continue
            score = min(score, math.dist(p1, x1), math.dist(x1, n1),
                        math.dist(pm, x2), math.dist(x2, nm))
            if out is None or score > out[0]:
                out = (score, x1, x2)
        return out

    best = None
    steps = 24
    for ai in range(1, steps):
        for bi in range(1, steps):
            got = evaluate(ai / steps, bi / steps)
            if got is not None and (best is None or got[0] > best[1][0]):
                best = ((ai / steps, bi / steps), got)
    if best is None:
        raise ConstructionError("no valid corner split found")
    (a0, b0), incumbent = best
    for ai in range(-8, 9):
        for bi in range(-8, 9):
            got = evaluate(a0 + ai / 200.0, b0 + bi / 200.0)
            if got is not None and got[0] > incumbent[0]:
                incumbent = got
    return incumbent[1], incumbent[2]


def _quad_score(corners):
    """Shortest edge of a strictly convex spatial quad, or None if invalid."""
    edges = [math.dist(corners[i], corners[(i + 1) % 4]) for i in range(4)]
    if max(edges) >= 2.0 or min(edges) < 1e-9:
        return None
    normal = _cross(_vsub(corners[1], corners[0]), _vsub(corners[2], corners[0]))
    turns = []
    for i in range(4):
        o, a, b = corners[i - 1], corners[i], corners[(i + 1) % 4]
        turns.append(_dot(_cross(_vsub(a, o), _vsub(b, a)), normal))
    if not (all(t > 1e-9 for t in turns) or all(t < -1e-9 for t in turns)):
        return None
    return min(edges)


def _odd_scene(n: int) -> Scene:
    base = _even_scene(n - 1)
    m = n - 1
    g = cycle_square_graph(n)

    top = base.contacts[edge_key("1", str(m - 1))]      # split point T
    bottom = base.contacts[edge_key("2", str(m))]       # split point B
    x1, x2 = _pick_split_corners(base.polygons["1"], base.polygons[str(m)],
                                 top, bottom)

    new_pts = {
        edge_key(str(n), "1"): x1,
        edge_key(str(n), str(m - 1)): top,
        edge_key(str(n), "2"): bottom,
        edge_key(str(n), str(m)): x2,
    }

    contacts = {}
    for e, p in base.contacts.items():
        u, v = sorted(e, key=int)
        if {u, v} == {"1", str(m - 1)} or {u, v} == {"2", str(m)}:
            continue  # these adjacencies disappear in the larger power
        contacts[e] = p
    contacts.update(new_pts)

    polygons = {}
    for i in range(1, n + 1):
        nbrs = [(i - 3) % n + 1, (i - 2) % n + 1, i % n + 1, (i + 1) % n + 1]
        pts = {j: contacts[edge_key(str(i), str(j))] for j in set(nbrs)}
        if i == n:
            order = [new_pts[edge_key(str(n), "1")],
                     new_pts[edge_key(str(n), str(m - 1))],
                     new_pts[edge_key(str(n), str(m))],
                     new_pts[edge_key(str(n), "2")]]
            polygons[str(i)] = Polygon3(corners=tuple(order))
            continue
        old = base.polygons[str(i)]
        corners = []
        for c in old.corners:
            cc = tuple(c)
            if i == 1 and cc == tuple(top):
                corners.append(new_pts[edge_key(str(n), "1")])
            elif i == m and cc == tuple(bottom):
                corners.append(new_pts[edge_key(str(n), str(m))])
            else:
                corners.append(cc)
        polygons[str(i)] = Polygon3(corners=tuple(corners))

    meta = {"construction": "cycle-square", "arithmetic": "float",
            "epsilon": 1e-9, "n": n, "split_fraction": _SPLIT_FRACTION,
            "ring_height": base.meta["ring_height"]}
    return graph_scene(g, polygons, contacts, meta)
