"""Bipartite contact representations: toroidal-grid, integer-grid, K33.

Both general constructions realize the complete bipartite graph and drop
the touching points of non-edges (polygons are rebuilt from the surviving
corners, which preserves planes and convexity).

Toroidal: every B-polygon is a rotated copy (around the z-axis) of a lead
polygon whose corners sit evenly spaced on a half circle; A-polygons are
horizontal |B|-gons, one per height.  Float coordinates.

Integer grid: A-polygons are horizontally stretched copies of a core
convex |B|-gon stacked at integer heights, stretching the two y-monotone
chains apart by increments 1, 2, 3, ...; the corners above each core
corner then form congruent uni-monotone vertical B-polygons in parallel
planes.  All coordinates are integers and verification is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import Graph
from .geom import Polygon3
from .scene import ConstructionError, Scene, graph_scene


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts a1..aN and b1..bM."""
    edges = [(f"a{i}", f"b{j}") for i in range(1, a + 1) for j in range(1, b + 1)]
    verts = [f"a{i}" for i in range(1, a + 1)] + [f"b{j}" for j in range(1, b + 1)]
    return Graph.from_edges(edges, vertices=verts)


def bipartition(g: Graph):
    """Two-color g by BFS; raises on odd cycles."""
    color = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    raise ConstructionError("graph is not bipartite")
    part_a = [v for v in g.vertices if color[v] == 0]
    part_b = [v for v in g.vertices if color[v] == 1]
    return part_a, part_b


def _check_parts(g: Graph, parts):
    if parts is None:
        return bipartition(g)
    part_a, part_b = parts
    sa, sb = set(part_a), set(part_b)
    if sa | sb != set(g.vertices) or sa & sb:
        raise ConstructionError("parts must partition the vertices")
    for e in g.edges:
        u, v = tuple(e)
        if (u in sa) == (v in sa):
            raise ConstructionError(f"edge {set(e)} inside one part")
    return list(part_a), list(part_b)


def represent_bipartite_toroidal(g: Graph, parts=None) -> Scene:
    """Toroidal-grid representation: |B| rotations x (2|A|-2) circle steps."""
    part_a, part_b = _check_parts(g, parts)
    a, b = len(part_a), len(part_b)
    if a < 2 or b < 1:
        raise ConstructionError("need |A| >= 2 and |B| >= 1")
    if any(g.degree(v) == 0 for v in g.vertices):
        raise ConstructionError("isolated vertices have no touching points")

    radius, dist = 1.0, 2.0  # mountain chain stays clear of the z-axis
    lead = []
    for k in range(a):
        phi = math.pi * k / (a - 1)
        lead.append((dist - radius * math.sin(phi), -radius * math.cos(phi)))

    def corner(k, m):
        x, z = lead[k]
        theta = 2.0 * math.pi * m / b
        return (x * math.cos(theta), x * math.sin(theta), z)

    polygons = {}
    contacts = {}
    for m, bv in enumerate(part_b):
        ks = [k for k in range(a) if g.adjacent(part_a[k], bv)]
        polygons[bv] = Polygon3(corners=tuple(corner(k, m) for k in ks))
    for k, av in enumerate(part_a):
        ms = [m for m in range(b) if g.adjacent(av, part_b[m])]
        polygons[av] = Polygon3(corners=tuple(corner(k, m) for m in ms))
    for k, av in enumerate(part_a):
        for m, bv in enumerate(part_b):
            if g.adjacent(av, bv):
                contacts[frozenset((av, bv))] = corner(k, m)

    degenerate = any(len(p.corners) < 3 for p in polygons.values())
    meta = {
        "construction": "bipartite-toroidal",
        "arithmetic": "float",
        "epsilon": 1e-9,
        "parts": (list(part_a), list(part_b)),
        "toroidal_grid": (b, 2 * a - 2),
        "degenerate": degenerate,
    }
    return graph_scene(g, polygons, contacts, meta)


def core_polygon(b: int):
    """Convex integer b-gon used as the A-polygon blueprint.

    Returns (corners, sides): corners in ccw order within the grid budget
    2*ceil(b/4) x (floor(ceil(b/2)/2)*(ceil(b/4)-1)+2); sides[i] is +1 for
    right-chain corners and -1 for left-chain corners (the stretching
    direction when A-polygons are stacked).
    """
    if b < 3:
        raise ConstructionError("need b >= 3")
    if b == 3:
        return [(0, 0), (1, 0), (1, 1)], [-1, 1, 1]
    even = b if b % 2 == 0 else b + 1
    rises = (even - 2) // 2
    m = (rises - 1) // 2
    seq = list(range(m, 0, -1)) + [0] * (rises - 2 * m) + list(range(-1, -m - 1, -1))
    right = [(1, 0)]
    for t, dx in enumerate(seq, start=1):
        right.append((right[-1][0] + dx, t))
    # ccw: bottom edge, right chain up, top edge, left chain (central mirror) down
    corners = [(0, 0), (1, 0)]
    corners += right[1:]                              # ends at (1, rises)
    corners += [(0, rises)]
    corners += [(1 - x, rises - y) for x, y in right[1:-1]]
    if b % 2 == 1:
        drop = 2 + len(right[1:]) + 1  # first left-chain corner after top-left
        corners = corners[:drop] + corners[drop + 1:]
    sides = [1 if x >= 1 else -1 for x, _ in corners]
    return corners, sides


def _stack_offsets(a: int):
    """Horizontal stretch per height 1..a, symmetric increments 1,2,3,..."""
    off = [0] * (a + 1)  # 1-indexed
    mid_lo = (a + 1) // 2
    mid_hi = a // 2 + 1
    step = 0
    total = 0
    t = mid_lo
    while t >= 1:
        off[t] = total
        off[a + 1 - t] = total
        step += 1
        total += step
        t -= 1
    return off[1:]


def represent_bipartite_grid(g: Graph, parts=None) -> Scene:
    """Integer-grid representation within |A| x 2ceil(|B|/4) x (...) lines."""
    part_a, part_b = _check_parts(g, parts)
    a, b = len(part_a), len(part_b)
    if a < 1 or b < 3:
        raise ConstructionError("need |B| >= 3")
    if any(g.degree(v) == 0 for v in g.vertices):
        raise ConstructionError("isolated vertices have no touching points")

    corners, sides = core_polygon(b)
    offsets = _stack_offsets(a)

    def corner3(t, j):
        # height index t (1..a), core corner index j
        x, y = corners[j]
        return (Fraction(x + sides[j] * offsets[t - 1]), Fraction(y), Fraction(t))

    polygons = {}
    contacts = {}
    for t, av in enumerate(part_a, start=1):
        js = [j for j in range(b) if g.adjacent(av, part_b[j])]
        polygons[av] = Polygon3(corners=tuple(corner3(t, j) for j in js))
    for j, bv in enumerate(part_b):
        ts = [t for t in range(1, a + 1) if g.adjacent(part_a[t - 1], bv)]
        polygons[bv] = Polygon3(corners=tuple(corner3(t, j) for t in ts))
    for t, av in enumerate(part_a, start=1):
        for j, bv in enumerate(part_b):
            if g.adjacent(av, bv):
                contacts[frozenset((av, bv))] = corner3(t, j)

    degenerate = any(len(p.corners) < 3 for p in polygons.values())
    ca2 = (a + 1) // 2
    cb4 = (b + 3) // 4
    meta = {
        "construction": "bipartite-grid",
        "arithmetic": "exact",
        "parts": (list(part_a), list(part_b)),
        "claimed_grid": {"x": ca2 * ca2 + cb4 * cb4, "y": 2 * cb4, "z": a},
        "degenerate": degenerate,
    }
    return graph_scene(g, polygons, contacts, meta)


def represent_k33_unit_triangles() -> Scene:
    """K33 as six touching unit equilateral triangles.

    Three horizontal triangles at heights 0, 1/2, 1 centered on the z-axis
    (top directly above bottom, middle rotated by 120 deg - arccos(-1/8)),
    and three vertical ones, each using one bottom, one top and one middle
    corner.
    """
    beta = math.radians(120.0) - math.acos(-1.0 / 8.0)
    r = math.tan(math.radians(30.0))

    def ring(angle_offset, z):
        pts = []
        for j in range(3):
            ang = math.radians(90.0 + 120.0 * j) + angle_offset
            pts.append((r * math.cos(ang), r * math.sin(ang), z))
        return pts

    bottom = ring(0.0, 0.0)
    middle = ring(beta, 0.5)
    top = ring(0.0, 1.0)

    g = complete_bipartite(3, 3)
    part_a = ["a1", "a2", "a3"]  # bottom, middle, top
    part_b = ["b1", "b2", "b3"]
    polygons = {
        "a1": Polygon3(corners=tuple(bottom)),
        "a2": Polygon3(corners=tuple(middle)),
        "a3": Polygon3(corners=tuple(top)),
    }
    contacts = {}
    for j, bv in enumerate(part_b):
        mid = middle[(j - 1) % 3]
        polygons[bv] = Polygon3(corners=(bottom[j], top[j], mid))
        contacts[frozenset(("a1", bv))] = bottom[j]
        contacts[frozenset(("a3", bv))] = top[j]
        contacts[frozenset(("a2", bv))] = mid
    meta = {
        "construction": "k33-unit-triangles",
        "arithmetic": "float",
        "epsilon": 1e-9,
        "parts": (part_a, part_b),
        "beta_degrees": math.degrees(beta),
        "circle_radius": r,
    }
    return graph_scene(g, polygons, contacts, meta)
