"""Contact representations for complete and min-degree-3 graphs.

The construction lifts an arrangement of n lines in the xy-plane whose
consecutive intersection gaps along every line at least halve (checked
exactly).  The arrangement is built incrementally: line i pivots around a
point fixed on line i-1 by the gap-halving equality, rotated clockwise by
a bisected rational amount until every ordering and gap predicate passes.
Lifting intersection point p(i,j) to z = min(i,j) makes the convex hull of
each line's lifted points a polygon in a vertical plane; polygons of lines
i and j then meet exactly in the lifted p(i,j).

Coordinates are exact rationals throughout; every perturbation ("slightly
reduce", strictification) is a power-of-two rational chosen by halving
until exact re-verification succeeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .core import Graph
from .geom import Polygon3
from .scene import ConstructionError, Scene, graph_scene
from .verify import verify_scene

_MAX_HALVINGS = 128


@dataclass
class Arrangement:
    """n lines (anchor, direction) and their pairwise intersection points."""

    n: int
    anchors: dict  # i -> (x, y)
    directions: dict  # i -> (dx, dy)
    points: dict  # frozenset({i,j}) -> (x, y)

    def point(self, i: int, j: int):
        return self.points[frozenset((i, j))]

    def param(self, i: int, j: int) -> Fraction:
        """Position of p(i,j) along line i (affine in arclength)."""
        ax, ay = self.anchors[i]
        dx, dy = self.directions[i]
        px, py = self.point(i, j)
        return ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy)


def _intersect(a1, d1, a2, d2):
    # solve a1 + s d1 = a2 + t d2
    det = d1[0] * (-d2[1]) - (-d2[0]) * d1[1]
    if det == 0:
        return None
    rx, ry = a2[0] - a1[0], a2[1] - a1[1]
    s = (rx * (-d2[1]) - (-d2[0]) * ry) / det
    return (a1[0] + s * d1[0], a1[1] + s * d1[1])


def arrangement_ok(arr: Arrangement) -> bool:
    """Exact re-check of the ordering and gap-halving properties.

    Along each line, intersections with the other lines must appear in
    index order (one direction or the other), and every consecutive gap
    must be at most half the previous one, comparing 1D line parameters.
    """
    for i in range(1, arr.n + 1):
        others = [j for j in range(1, arr.n + 1) if j != i]
        try:
            ts = [arr.param(i, j) for j in others]
        except KeyError:
            return False
        if len(set(ts)) != len(ts):
            return False
        inc = all(a < b for a, b in zip(ts, ts[1:]))
        dec = all(a > b for a, b in zip(ts, ts[1:]))
        if not (inc or dec):
            return False
        gaps = [abs(b - a) for a, b in zip(ts, ts[1:])]
        for g_prev, g_next in zip(gaps, gaps[1:]):
            if 2 * g_next > g_prev:
                return False
    return True


def build_line_arrangement(n: int) -> Arrangement:
    """Arrangement of n >= 3 lines satisfying the ordering/halving properties."""
    if n < 3:
        raise ConstructionError("need at least 3 lines")
    anchors = {
        1: (Fraction(0), Fraction(0)),
        2: (Fraction(0), Fraction(0)),
        3: (Fraction(1), Fraction(0)),
    }
    directions = {
        1: (Fraction(1), Fraction(0)),
        2: (Fraction(0), Fraction(-1)),
        3: (Fraction(-1), Fraction(-1)),
    }

    def all_points(k):
        pts = {}
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                p = _intersect(anchors[i], directions[i], anchors[j], directions[j])
                if p is None:
                    return None
                pts[frozenset((i, j))] = p
        return pts

    for i in range(4, n + 1):
        prev = i - 1
        pts = all_points(prev)
        p2 = pts[frozenset((prev, i - 2))]
        p3 = pts[frozenset((prev, i - 3))]
        # gap-halving equality fixes the pivot past p(i-1, i-2)
        pivot = (p2[0] + (p2[0] - p3[0]) / 2, p2[1] + (p2[1] - p3[1]) / 2)
        d = directions[prev]
        t = Fraction(1, 2)
        placed = False
        for _ in range(_MAX_HALVINGS):
            cand = (d[0] + t * d[1], d[1] - t * d[0])  # clockwise tilt
            anchors[i] = pivot
            directions[i] = cand
            pts_i = all_points(i)
            if pts_i is not None:
                arr = Arrangement(n=i, anchors=dict(anchors),
                                  directions=dict(directions), points=pts_i)
                if arrangement_ok(arr):
                    placed = True
                    break
            t /= 2
        if not placed:
            raise ConstructionError(f"bisection failed placing line {i}")

    return Arrangement(n=n, anchors=anchors, directions=directions,
                       points=all_points(n))


# ---------------------------------------------------------------------------
# Lifted scenes
# ---------------------------------------------------------------------------


def _lift_scene(g: Graph, arr: Arrangement, delta: Fraction) -> Scene:
    """Lift contacts of g over the arrangement; delta lowers flat polygons."""
    order = list(g.vertices)
    index = {v: i + 1 for i, v in enumerate(order)}

    z = {}
    for e in g.edges:
        u, v = tuple(e)
        i, j = index[u], index[v]
        z[frozenset((i, j))] = Fraction(min(i, j))
    lowered = {}
    for v in order:
        i = index[v]
        nbr = sorted(index[w] for w in g.neighbors(v))
        if nbr and nbr[0] > i:
            key = frozenset((i, nbr[0]))
            z[key] -= delta
            lowered[v] = (i, nbr[0])

    pts3 = {}
    for key in z:
        i, j = tuple(key)
        x, y = arr.point(i, j)
        pts3[key] = (x, y, z[key])

    polygons = {}
    for v in order:
        i = index[v]
        nbr = sorted(index[w] for w in g.neighbors(v))
        low = [j for j in nbr if j < i]
        high = [j for j in nbr if j > i]
        seq = low + list(reversed(high))
        corners = tuple(pts3[frozenset((i, j))] for j in seq)
        polygons[v] = Polygon3(corners=corners)

    contacts = {}
    for e in g.edges:
        u, v = tuple(e)
        contacts[e] = pts3[frozenset((index[u], index[v]))]

    degenerate = any(len(p.corners) < 3 for p in polygons.values())
    meta = {
        "construction": "complete" if len(g.edges) == g.n * (g.n - 1) // 2 else "min-degree-3",
        "arithmetic": "exact",
        "order": order,
        "delta": str(delta),
        "degenerate": degenerate,
    }
    return graph_scene(g, polygons, contacts, meta)


def _pairs_ok(scene: Scene, touched) -> bool:
    """Cheap local check: verify only pairs involving the touched polygons."""
    from .geom import classify_pair, polygon_properties, VIOLATION

    ctx = scene.context()
    labels = sorted(scene.polygons)
    for a in touched:
        props = polygon_properties(scene.polygons[a], ctx)
        if not props.planar or not (props.simple or props.degenerate):
            return False
        if not props.degenerate and not props.convex:
            return False
        for b in labels:
            if b == a:
                continue
            cls = classify_pair(scene.polygons[a], scene.polygons[b], ctx)
            if cls.kind == VIOLATION:
                return False
            shared = cls.shared_corners
            if scene.structure.adjacent(a, b):
                if len(shared) != 1:
                    return False
            elif shared:
                return False
    return True


def _touched_vertices(g: Graph) -> list:
    order = list(g.vertices)
    index = {v: i + 1 for i, v in enumerate(order)}
    touched = set()
    for v in order:
        i = index[v]
        nbr = sorted(index[w] for w in g.neighbors(v))
        if nbr and nbr[0] > i:
            touched.add(v)
            touched.add(order[nbr[0] - 1])
    return sorted(touched)


def represent_min_degree3(g: Graph) -> Scene:
    """Contact representation by convex polygons for min-degree-3 graphs."""
    bad = [v for v in g.vertices if g.degree(v) < 3]
    if bad:
        raise ConstructionError(f"vertices of degree < 3: {bad}")
    arr = build_line_arrangement(g.n)
    delta = Fraction(1, 2)
    touched = _touched_vertices(g)
    for _ in range(_MAX_HALVINGS):
        scene = _lift_scene(g, arr, delta)
        if _pairs_ok(scene, touched):
            return scene
        delta /= 2
    raise ConstructionError("perturbation backoff failed")  # pragma: no cover


def represent_complete(n: int) -> Scene:
    """Contact representation of the complete graph on n >= 3 vertices.

    Every polygon has at most n-1 corners; for n = 3 the polygons are
    segments and the scene is flagged degenerate.
    """
    if n < 3:
        raise ConstructionError("need n >= 3")
    g = Graph.from_edges([(str(i), str(j))
                          for i in range(1, n + 1) for j in range(i + 1, n + 1)],
                         vertices=[str(i) for i in range(1, n + 1)])
    arr = build_line_arrangement(n)
    delta = Fraction(1, 2)
    for _ in range(_MAX_HALVINGS):
        scene = _lift_scene(g, arr, delta)
        scene.meta["construction"] = "complete"
        if _pairs_ok(scene, _touched_vertices(g)):
            return scene
        delta /= 2
    raise ConstructionError("perturbation backoff failed")  # pragma: no cover


def strictify(scene: Scene) -> Scene:
    """Make all polygons strictly convex by lowering z-coordinates slightly.

    Each contact's z drops by delta divided by its position along the
    governing line (measured from that line's first contact), which bows
    formerly straight chains outward; delta is halved until the perturbed
    scene passes verification with every polygon strictly convex.
    """
    if not scene.is_exact:
        raise ConstructionError("strictify needs an exact scene")
    g: Graph = scene.structure
    order = scene.meta.get("order") or list(g.vertices)
    index = {v: i + 1 for i, v in enumerate(order)}
    label_of = {i + 1: v for i, v in enumerate(order)}

    def neighbors_idx(i):
        return sorted(index[w] for w in g.neighbors(label_of[i]))

    # 1D positions of contacts along each line, from that line's first contact
    def positions(i):
        nbr = neighbors_idx(i)
        pts = {j: scene.contacts[frozenset((label_of[i], label_of[j]))] for j in nbr}
        first, last = nbr[0], nbr[-1]
        d = (pts[last][0] - pts[first][0], pts[last][1] - pts[first][1])
        return {j: (pts[j][0] - pts[first][0]) * d[0] + (pts[j][1] - pts[first][1]) * d[1]
                for j in nbr}, nbr[0]

    pos = {}
    firsts = {}
    for v in order:
        pos[index[v]], firsts[index[v]] = positions(index[v])

    delta = Fraction(1, 4)
    for _ in range(_MAX_HALVINGS):
        newz = {}
        for e in g.edges:
            u, v = tuple(e)
            i, j = sorted((index[u], index[v]))
            zc = scene.contacts[e][2]
            if j == firsts[i]:
                newz[e] = zc  # the pair already lowered by the flatness rule
            else:
                newz[e] = zc - delta / pos[i][j]
        candidate = _rebuild_with_z(scene, g, index, newz)
        ok = True
        ctx = candidate.context()
        from .geom import polygon_properties
        for label, poly in candidate.polygons.items():
            props = polygon_properties(poly, ctx)
            if len(poly.corners) >= 3 and not props.strictly_convex:
                ok = False
                break
        if ok:
            rep = verify_scene(candidate)
            if rep.passed:
                candidate.meta["strictified"] = True
                return candidate
        delta /= 2
    raise ConstructionError("strictification backoff failed")


def _rebuild_with_z(scene: Scene, g: Graph, index: dict, newz: dict) -> Scene:
    pts3 = {}
    for e in g.edges:
        p = scene.contacts[e]
        pts3[e] = (p[0], p[1], newz[e])
    order = scene.meta.get("order") or list(g.vertices)
    label_of = {i + 1: v for i, v in enumerate(order)}
    polygons = {}
    for v in order:
        i = index[v]
        nbr = sorted(index[w] for w in g.neighbors(v))
        low = [j for j in nbr if j < i]
        high = [j for j in nbr if j > i]
        seq = low + list(reversed(high))
        corners = tuple(pts3[frozenset((v, label_of[j]))] for j in seq)
        polygons[v] = Polygon3(corners=corners)
    meta = dict(scene.meta)
    return graph_scene(g, polygons, pts3, meta)
