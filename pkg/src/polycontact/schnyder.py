"""Straight-line planar grid drawing via Schnyder's realizer method.

Pipeline: fully triangulate the input plane graph (dummy chords and hub
vertices as needed), compute a canonical ordering of the triangulation,
derive the three-tree realizer from it, count region vertices, and place
every vertex at (x0, x1) where xi = |vertices in region i| - |vertices on
the clockwise bounding path|.  Internal coordinates sum to n-1, so the
drawing fits on a grid of (n-1) x (n-1) lines with the outer triangle at
(n-2, 1), (0, n-2), (1, 0).  Dummy edges and vertices are dropped from the
output, which stays a straight-line planar drawing of the input.
"""

from __future__ import annotations

from .planar import EmbeddingError, PlaneGraph, triangulate


class DrawingError(ValueError):
    pass


def _canonical_order(pg: PlaneGraph, outer):
    """Reverse-peel a canonical ordering; outer = [a, b, c] ccw face."""
    a, b, c = outer
    alive = {v: set(pg.neighbors(v)) for v in pg.vertices()}
    n = len(alive)

    # current outer path from a to b (excluding edge a-b); starts a, c, b
    path = [a, c, b]
    on_path = {a, c, b}
    removed = []
    cover = {}  # vertex -> (left, span..., right) at its removal

    while len(removed) < n - 2:
        pick = None
        for idx in range(1, len(path) - 1):
            v = path[idx]
            nbrs_on = alive[v] & on_path
            # removable: exactly its two path neighbors among path vertices
            if nbrs_on == {path[idx - 1], path[idx + 1]}:
                pick = idx
                break
        if pick is None:
            raise DrawingError("no removable vertex; not a triangulation?")
        v = path[pick]
        left, right = path[pick - 1], path[pick + 1]
        fan = set(alive[v]) - on_path
        # order the fan between left and right in v's restricted rotation;
        # the interior fan sits entirely on one of the two arcs
        circ = [pg.head(d) for d in pg.rotation[v]]
        circ = [w for w in circ if w in alive[v]]
        li = circ.index(left)

        def scan(step):
            seq = []
            k = (li + step) % len(circ)
            while circ[k] != right:
                seq.append(circ[k])
                k = (k + step) % len(circ)
            return seq

        fwd, bwd = scan(1), scan(-1)
        ordered = fwd if set(fwd) == fan else bwd
        if set(ordered) != fan:
            raise DrawingError("fan not contiguous in rotation")
        cover[v] = (left, ordered, right)
        removed.append(v)
        for w in alive[v]:
            alive[w].discard(v)
        path[pick:pick + 1] = ordered
        on_path.discard(v)
        on_path.update(ordered)

    order = [a, b] + list(reversed(removed))  # c was peeled first
    if order[-1] != c:
        raise DrawingError("outer corner not last in canonical order")
    return order, cover


def _realizer(pg: PlaneGraph, outer, cover):
    """out[i][v] = head of v's outgoing color-i edge (i in 0,1,2).

    Peeled vertices point color 0 at their left contour neighbor, color 1
    at the right one, and every middle contour vertex they cover gets its
    color-2 edge toward them; the apex c is peeled first, so its colors
    point at a and b directly.
    """
    out = [dict(), dict(), dict()]
    for v, (left, fan, right) in cover.items():
        out[0][v] = left
        out[1][v] = right
        for w in fan:
            out[2][w] = v
    return out


def _paths(out, v, color, roots):
    path = [v]
    seen = {v}
    while path[-1] not in roots:
        nxt = out[color].get(path[-1])
        if nxt is None or nxt in seen:
            raise DrawingError(f"realizer path broken at {path[-1]!r}")
        path.append(nxt)
        seen.add(nxt)
    return path


def _region_vertices(pg: PlaneGraph, boundary_edges, boundary_vertices, avoid):
    """Vertices on the closed side of the boundary cycle away from `avoid`.

    The cycle (two realizer paths plus one outer edge) is simple, so it
    splits the faces into two components; flooding across every non-cycle
    edge finds them, and the region is the component not containing the
    opposite outer corner, plus the cycle itself.
    """
    faces = pg.faces()
    edge_faces = {}
    for fi, f in enumerate(faces):
        for d in f:
            edge_faces.setdefault(d[0], []).append(fi)
    adj = {fi: set() for fi in range(len(faces))}
    for eid, fis in edge_faces.items():
        if eid in boundary_edges:
            continue
        for x in fis:
            for y in fis:
                if x != y:
                    adj[x].add(y)
    comp = {}
    for fi in range(len(faces)):
        if fi in comp:
            continue
        stack = [fi]
        comp[fi] = fi
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp[y] = fi
                    stack.append(y)
    side_vertices = {}
    for fi, f in enumerate(faces):
        side_vertices.setdefault(comp[fi], set()).update(pg.tail(d) for d in f)
    region = set(boundary_vertices)
    for vs in side_vertices.values():
        if avoid not in (vs - boundary_vertices):
            region |= vs
    return region


def schnyder_positions(pg: PlaneGraph, outer):
    """Integer positions for a simple plane triangulation with ccw outer face."""
    n = len(pg.vertices())
    a, b, c = outer
    if n == 3:
        return {a: (1, 0), b: (0, 1), c: (0, 0)}
    order, cover = _canonical_order(pg, outer)
    out = _realizer(pg, outer, cover)
    roots = {0: a, 1: b, 2: c}

    pos = {a: (n - 2, 1), b: (0, n - 2), c: (1, 0)}
    outer_edge = {0: pg.edge_between(b, c), 1: pg.edge_between(c, a),
                  2: pg.edge_between(a, b)}

    for v in pg.vertices():
        if v in (a, b, c):
            continue
        paths = [_paths(out, v, i, {roots[i]}) for i in range(3)]
        coords = []
        for i in range(3):
            p_next = paths[(i + 1) % 3]
            p_prev = paths[(i + 2) % 3]
            cyc_edges = set()
            for pth in (p_next, p_prev):
                for x, y in zip(pth, pth[1:]):
                    eid = pg.edge_between(x, y)
                    if eid is None:
                        raise DrawingError("path edge missing")
                    cyc_edges.add(eid)
            cyc_edges.add(outer_edge[i])
            boundary_vertices = set(p_next) | set(p_prev)
            region = _region_vertices(pg, cyc_edges, boundary_vertices,
                                      roots[i])
            coords.append(len(region) - len(p_prev))
        if sum(coords) != n - 1:
            raise DrawingError(f"region counts {coords} do not sum to {n - 1}")
        pos[v] = (coords[0], coords[1])
    return pos


def schnyder_draw(pg: PlaneGraph, outer_walk=None):
    """Straight-line integer drawing of a simple connected plane graph.

    The graph is triangulated first (dummy structure removed afterwards),
    so any genus-zero rotation system with >= 3 vertices works.  Returns
    {vertex: (x, y)} with both coordinates within n-1 grid lines where n
    counts the triangulation's vertices.  Raises DrawingError for
    non-planar rotation systems.
    """
    if len(pg.vertices()) < 3:
        raise DrawingError("need at least 3 vertices")
    if pg.has_parallel_edges():
        raise DrawingError("parallel edges; subdivide before drawing")
    try:
        pg.check_planar()
    except EmbeddingError as exc:
        raise DrawingError(f"not a planar embedding: {exc}") from None
    if len(pg.connected_components()) != 1:
        raise DrawingError("graph must be connected")
    faces = pg.faces()
    if outer_walk is None:
        outer_walk = max(faces, key=len)
    tri, outer_triangle, dummy_edges, dummy_vertices = triangulate(pg, outer_walk)
    pos = schnyder_positions(tri, outer_triangle)
    return {v: pos[v] for v in pg.vertices()}
