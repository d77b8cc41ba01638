"""Cubic graphs as touching triangles on small grids.

2-edge-connected case: split the edges into a perfect matching and disjoint
cycles, draw the cycle vertices around the boundary of a 3 x n/2 rectangle
with a hub inside, give every matching edge one z-slot above the hub (both
apexes coincide there, realizing the matching contact) and make each
cycle's last-placed vertex the chord-based horizontal triangle at its own
slot, which is the topmost of its cycle.  If a chord drawn across the
rectangle strictly encloses the hub, that chord (and its partner apex)
moves to z = -1 and everything above compacts down one step.

Bridged case: every 2-edge-connected component becomes a floorplan (wheel,
plain cycle, or a single triangle for one-vertex components) after cutting
bridge-incident vertices and restoring their edge as a "foot"; feet are
forced into the perfect matching, so each cut vertex returns as a vertical
triangle between its foot's two apex slots and the bridge vertex on the
floor.  The floorplans join into one plane graph through the bridge
vertices and are drawn by the Schnyder grid algorithm.

Perfect matchings come from networkx's blossom implementation; exact
verification of every emitted scene is the correctness gate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .core import Graph, edge_key
from .geom import Polygon3
from .planar import PlaneGraph
from .scene import ConstructionError, Scene, graph_scene
from .schnyder import schnyder_draw
from .verify import verify_scene


# ---------------------------------------------------------------------------
# Bridges and bridge-block trees
# ---------------------------------------------------------------------------


def find_bridges(g: Graph) -> set:
    """All bridges of g (edge keys), by iterative DFS lowpoints."""
    disc = {}
    low = {}
    bridges = set()
    counter = [0]
    for root in g.vertices:
        if root in disc:
            continue
        stack = [(root, None, iter(g.neighbors(root)))]
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        bridges.add(edge_key(u, v))
    return bridges


@dataclass
class BridgeBlockTree:
    components: list  # list of frozensets of vertices
    bridges: set  # edge keys
    tree_edges: list  # (component index, component index, bridge key)

    @property
    def node_count(self):
        return len(self.components)


def bridge_block_tree(g: Graph) -> BridgeBlockTree:
    """2-edge-connected components joined by the bridges of g."""
    if not g.is_connected():
        raise ConstructionError("graph is not connected")
    bridges = find_bridges(g)
    comp_of = {}
    comps = []
    for start in g.vertices:
        if start in comp_of:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if edge_key(v, w) in bridges or w in comp:
                    continue
                comp.add(w)
                stack.append(w)
        idx = len(comps)
        comps.append(frozenset(comp))
        for v in comp:
            comp_of[v] = idx
    tree = []
    for b in bridges:
        u, v = tuple(b)
        tree.append((comp_of[u], comp_of[v], b))
    return BridgeBlockTree(components=comps, bridges=bridges, tree_edges=tree)


# ---------------------------------------------------------------------------
# Petersen decomposition (perfect matching + disjoint cycles)
# ---------------------------------------------------------------------------


@dataclass
class PetersenDecomposition:
    matching: set  # edge keys
    cycles: list  # each a list of vertex labels in cycle order


def _cycles_after_matching(vertices, edges, matching):
    left = [e for e in edges if e not in matching]
    adj = {}
    for e in left:
        u, v = tuple(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in vertices:
        if len(adj.get(v, [])) != 2:
            raise ConstructionError("matching complement is not 2-regular")
    seen = set()
    cycles = []
    for v in sorted(vertices):
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        prev = None
        cur = v
        while True:
            nxts = [w for w in sorted(adj[cur]) if w != prev]
            nxt = nxts[0] if nxts else prev
            if nxt == v:
                break
            cyc.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        cycles.append(cyc)
    return cycles


def _perfect_matching(vertices, edges, forced=()):
    """Perfect matching via blossom; forced edges are included if possible."""
    forced = set(forced)
    used = set()
    for e in forced:
        u, v = tuple(e)
        if u in used or v in used:
            return None
        used |= {u, v}
    gx = nx.Graph()
    gx.add_nodes_from(v for v in vertices if v not in used)
    for e in edges:
        u, v = tuple(e)
        if u in used or v in used:
            continue
        gx.add_edge(u, v)
    mate = nx.max_weight_matching(gx, maxcardinality=True)
    matching = set(forced) | {edge_key(u, v) for u, v in mate}
    covered = set()
    for e in matching:
        covered |= set(e)
    if covered != set(vertices):
        return None
    return matching


def petersen_decompose(g: Graph) -> PetersenDecomposition:
    """Perfect matching plus vertex-disjoint cycles covering a 2EC cubic graph."""
    bridges = find_bridges(g)
    if bridges:
        b = sorted(tuple(sorted(e)) for e in bridges)[0]
        raise ConstructionError(f"graph has a bridge {b[0]}-{b[1]}")
    if not g.is_regular(3):
        raise ConstructionError("graph is not cubic")
    if not g.is_connected():
        raise ConstructionError("graph is not connected")
    matching = _perfect_matching(g.vertices, g.edges)
    if matching is None:
        raise ConstructionError("no perfect matching found")  # pragma: no cover
    cycles = _cycles_after_matching(g.vertices, g.edges, matching)
    return PetersenDecomposition(matching=matching, cycles=cycles)


# ---------------------------------------------------------------------------
# Shared floorplan bookkeeping
# ---------------------------------------------------------------------------


def _assign_slots(matching_edges, feet):
    """Slot (z-level) per matching edge, two consecutive slots for feet.

    Returns (slot_low, slot_high) per edge; non-feet have equal entries.
    """
    slots = {}
    z = 0
    for e in sorted(matching_edges, key=lambda e: tuple(sorted(e))):
        if e in feet:
            slots[e] = (z, z + 1)
            z += 2
        else:
            slots[e] = (z, z)
            z += 1
    return slots


def _apex_of_vertices(matching, slots):
    """z-slot per vertex; a foot's endpoints split (low, high) by label.

    Choosing chord vertices as apex-maxima afterwards guarantees a footed
    chord vertex holds the upper slot of its pair whenever the other
    endpoint lies in the same cycle.
    """
    mate = {}
    for e in matching:
        u, v = tuple(e)
        mate[u] = e
        mate[v] = e
    apex = {}
    for e in matching:
        lo, hi = slots[e]
        u, v = sorted(e)
        apex[u], apex[v] = (lo, lo) if lo == hi else (lo, hi)
    return apex, mate


def _rect_boundary(height):
    """Boundary grid points of [0,2] x [0,height-1], ccw from the origin."""
    pts = [(0, 0), (1, 0), (2, 0)]
    pts += [(2, y) for y in range(1, height)]
    pts += [(1, height - 1), (0, height - 1)]
    pts += [(0, y) for y in range(height - 2, 0, -1)]
    return pts


def _point_in_polygon(pt, poly):
    """Strict containment, integer coordinates (exact)."""
    x, y = pt
    inside = False
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        # on-edge check
        cr = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)
        if cr == 0 and min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2):
            return False
        if (y1 > y) != (y2 > y):
            xi = x1 + Fraction((y - y1) * (x2 - x1), (y2 - y1))
            if xi > x:
                inside = not inside
    return inside


_K4_TRIANGLES = [
    ((1, 1, 1), (1, 0, 0), (0, 0, 1)),
    ((1, 1, 1), (0, 1, 1), (1, 1, 0)),
    ((0, 0, 0), (1, 0, 0), (1, 1, 0)),
    ((0, 0, 0), (0, 1, 1), (0, 0, 1)),
]


def _k4_scene(g: Graph) -> Scene:
    """K4 as four alternate faces of an affine octahedron on a 2x2x2 grid."""
    vs = sorted(g.vertices)
    frac = lambda p: tuple(Fraction(c) for c in p)
    polygons = {v: Polygon3(corners=tuple(frac(p) for p in tri))
                for v, tri in zip(vs, _K4_TRIANGLES)}
    contacts = {}
    for a, b in combinations(vs, 2):
        shared = set(polygons[a].corners) & set(polygons[b].corners)
        contacts[edge_key(a, b)] = next(iter(shared))
    meta = {"construction": "cubic-2ec", "arithmetic": "exact",
            "claimed_grid": {"x": 3, "y": 2, "z": 2}}
    return graph_scene(g, polygons, contacts, meta)


# ---------------------------------------------------------------------------
# 2-edge-connected cubic graphs on a 3 x n/2 x n/2 grid
# ---------------------------------------------------------------------------


def represent_2ec_cubic(g: Graph) -> Scene:
    decomp = petersen_decompose(g)
    n = g.n
    if n == 4:
        return _k4_scene(g)

    matching = decomp.matching
    slots = _assign_slots(matching, feet=set())
    apex, mate = _apex_of_vertices(matching, slots)

    cycles = []
    for cyc in decomp.cycles:
        cv = max(cyc, key=lambda v: (apex[v], v))
        i = cyc.index(cv)
        rot = cyc[i + 1:] + cyc[: i + 1]  # chord vertex last
        nbr_prev, nbr_next = rot[-2], rot[0]
        if nbr_next > nbr_prev:
            rot = [cv] + rot[:-1]
            rot = list(reversed(rot))
        cycles.append(rot)
    cycles.sort(key=lambda c: min(c))

    height = n // 2
    boundary = _rect_boundary(height)
    seq = [v for cyc in cycles for v in cyc]
    arcs = []
    start = 0
    for cyc in cycles:
        arcs.append((start, start + len(cyc) - 1))
        start += len(cyc)

    hub, offset, enclosing = _place_hub(n, boundary, seq, cycles, arcs, apex, mate)
    pos = {v: boundary[(t + offset) % len(boundary)] for t, v in enumerate(seq)}

    # final z mapping after the optional -1 move
    zstar = {ci: apex[cyc[-1]] for ci, cyc in enumerate(cycles)}
    if enclosing is not None:
        zs = zstar[enclosing]

        def final(z):
            if z == zs:
                return -1
            return z - 1 if z > zs else z
    else:
        def final(z):
            return z

    polygons = {}
    contacts = {}
    hubf = (Fraction(hub[0]), Fraction(hub[1]))
    for ci, cyc in enumerate(cycles):
        m = len(cyc)
        zc = Fraction(final(zstar[ci]))
        rim = [pos[v] for v in cyc]  # rim vertex t = contact of edge (cyc[t-1], cyc[t])

        def rim_point(t):
            z = zc if t in (0, m - 1) else Fraction(0)
            # rim slot t sits between cyc[t-1] and cyc[t]
            x, y = rim[t]
            return (Fraction(x), Fraction(y), z)

        for j, v in enumerate(cyc):
            az = Fraction(final(apex[v]))
            if j == m - 1:
                corners = (rim_point(0), rim_point(m - 1), (hubf[0], hubf[1], zc))
            else:
                corners = (rim_point(j), rim_point(j + 1), (hubf[0], hubf[1], az))
            polygons[v] = Polygon3(corners=corners)
        for j in range(m):
            u, v = cyc[j - 1], cyc[j]
            contacts[edge_key(u, v)] = rim_point(j)
    for e in matching:
        contacts[e] = (hubf[0], hubf[1], Fraction(final(slots[e][0])))

    meta = {"construction": "cubic-2ec", "arithmetic": "exact",
            "claimed_grid": {"x": 3, "y": n // 2, "z": n // 2}}
    return graph_scene(g, polygons, contacts, meta)


def _place_hub(n, boundary, seq, cycles, arcs, apex, mate):
    """Choose a rotation offset and hub with at most one benign enclosure."""
    height = n // 2
    hubs = [(1, y) for y in range(1, height - 1)]
    nb = len(boundary)
    best = None
    for offset in range(nb):
        pos = {v: boundary[(t + offset) % nb] for t, v in enumerate(seq)}
        for hub in hubs:
            ok = True
            enclosing = None
            for ci, cyc in enumerate(cycles):
                a = pos[cyc[0]]
                b = pos[cyc[-1]]
                # hub on the chord line makes the chord triangle degenerate
                if (b[0] - a[0]) * (hub[1] - a[1]) - (b[1] - a[1]) * (hub[0] - a[0]) == 0:
                    ok = False
                    break
                arc_poly = [pos[v] for v in cyc]
                if _point_in_polygon(hub, arc_poly):
                    if enclosing is not None:
                        ok = False
                        break
                    enclosing = ci
            if not ok:
                continue
            if enclosing is not None:
                # the enclosed chord moves to z=-1 with its matched partner;
                # that partner must not be another cycle's chord
                cv = cycles[enclosing][-1]
                e = mate[cv]
                (other,) = set(e) - {cv}
                if any(ci != enclosing and cyc[-1] == other
                       for ci, cyc in enumerate(cycles)):
                    continue
            score = (0 if enclosing is None else 1, offset, hub[1])
            if best is None or score < best[0]:
                best = (score, hub, offset, enclosing)
        if best is not None and best[0][0] == 0:
            break
    if best is None:
        raise ConstructionError("no valid hub placement found")
    _, hub, offset, enclosing = best
    return hub, offset, enclosing


# ---------------------------------------------------------------------------
# General cubic graphs: floorplans joined through bridge vertices
# ---------------------------------------------------------------------------


@dataclass
class _WheelPlan:
    index: int
    vertices: frozenset
    cut: dict            # cut vertex -> (foot edge key, bridge key)
    matching: set        # matching of the reduced graph (includes feet)
    cycles: list         # reduced-graph cycles, chord vertex last
    slots: dict          # matching edge -> (lo, hi)
    apex: dict           # reduced vertex -> z slot
    rim: list = field(default_factory=list)      # rim vertex labels, cyclic
    rim_contact: dict = field(default_factory=dict)  # rim label -> cycle edge key
    hub: str = ""
    arcs: list = field(default_factory=list)     # (start, end) rim indices per cycle
    kind: str = "wheel"


@dataclass
class _CyclePlan:
    index: int
    order: list          # comp vertices in cycle order
    kind: str = "cycle"


@dataclass
class _VertexPlan:
    index: int
    vertex: str
    kind: str = "vertex"


def _trace_cycle(vertices, adjacency):
    start = min(vertices)
    cyc = [start]
    prev = None
    cur = start
    while True:
        nxts = [w for w in sorted(adjacency[cur]) if w != prev]
        nxt = nxts[0]
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
    return cyc


def _component_plan(g: Graph, idx, comp, bridges):
    comp_edges = [e for e in g.edges if e <= comp]
    if len(comp) == 1:
        return _VertexPlan(index=idx, vertex=next(iter(comp)))
    cut = {}
    for v in sorted(comp):
        mine = [b for b in bridges if v in b]
        if mine:
            cut[v] = mine[0]
    core = set(comp) - set(cut)
    if not core:
        adjacency = {v: [w for w in g.neighbors(v) if w in comp] for v in comp}
        return _CyclePlan(index=idx, order=_trace_cycle(comp, adjacency))

    feet = {}
    reduced_edges = {e for e in comp_edges if not (set(e) & set(cut))}
    for u in sorted(cut):
        x, y = sorted(w for w in g.neighbors(u) if w in comp)
        fk = edge_key(x, y)
        if fk in reduced_edges or fk in feet.values():
            raise ConstructionError(
                "bridge foot duplicates an edge; this configuration is unsupported")
        feet[u] = fk
        reduced_edges.add(fk)
    foot_set = set(feet.values())
    # Feet in the matching become vertical bridge triangles; leftovers stay
    # cycle edges and their cut vertex returns by splitting the shared rim
    # corner.  Cycle feet are walled off by drawn chords in multi-cycle
    # components and cannot sit on a chord-lifted corner, so search foot
    # subsets by decreasing size until a workable decomposition appears.
    subsets = sorted(_subsets(sorted(foot_set, key=sorted)),
                     key=len, reverse=True)
    reasons = []
    for forced in subsets:
        matching = _perfect_matching(sorted(core), reduced_edges,
                                     forced=forced)
        if matching is None:
            continue
        plan = _try_wheel_plan(idx, comp, cut, feet, core, reduced_edges,
                               matching, reasons)
        if plan is not None:
            return plan
    raise ConstructionError(
        "no workable matching for the bridge feet: "
        + (reasons[0] if reasons else "component admits no perfect matching"))


def _subsets(items):
    out = [[]]
    for x in items:
        out += [s + [x] for s in out]
    return [set(s) for s in out]


def _try_wheel_plan(idx, comp, cut, feet, core, reduced_edges, matching,
                    reasons):
    foot_set = set(feet.values())
    cycles = _cycles_after_matching(sorted(core), reduced_edges, matching)
    slots = _assign_slots(matching, foot_set & matching)
    apex, _ = _apex_of_vertices(matching, slots)
    rotated = []
    for cyc in cycles:
        cv = max(cyc, key=lambda v: (apex[v], v))
        i = cyc.index(cv)
        rot = cyc[i + 1:] + cyc[: i + 1]
        if rot[0] > rot[-2]:
            rot = list(reversed([cv] + rot[:-1]))
        rotated.append(rot)
    rotated.sort(key=lambda c: min(c))
    cutinfo = {}
    for u in cut:
        kind = "matching" if feet[u] in matching else "cycle"
        cutinfo[u] = (feet[u], cut[u], kind)
    cycle_feet = {fk for fk, _, kind in cutinfo.values() if kind == "cycle"}
    if cycle_feet and len(rotated) >= 2:
        reasons.append("cycle-type feet in a multi-cycle component are "
                       "walled off by a drawn chord")
        return None
    for cyc in rotated:
        m = len(cyc)
        for j in (0, m - 1):
            if edge_key(cyc[j - 1], cyc[j]) in cycle_feet:
                reasons.append("cycle-type foot on a chord-lifted rim corner")
                return None
    return _WheelPlan(index=idx, vertices=comp, cut=cutinfo, matching=matching,
                      cycles=rotated, slots=slots, apex=apex)


def _build_floorplan(g: Graph, bbt: BridgeBlockTree):
    """Assemble the global plane graph H and per-component bookkeeping."""
    H = PlaneGraph()
    plans = []
    vb_label = {}
    for bi, b in enumerate(sorted(bbt.bridges, key=lambda e: tuple(sorted(e)))):
        vb_label[b] = f"vb{bi}"
    for lbl in vb_label.values():
        H.add_vertex(lbl)
    vb_sides = {lbl: {} for lbl in vb_label.values()}  # label -> {comp: [darts]}

    for idx, comp in enumerate(bbt.components):
        plan = _component_plan(g, idx, comp, bbt.bridges)
        plans.append(plan)

    for plan in plans:
        if plan.kind == "vertex":
            _embed_vertex_comp(H, g, plan, vb_label, vb_sides)
        elif plan.kind == "cycle":
            _embed_cycle_comp(H, g, plan, vb_label, vb_sides)
        else:
            _embed_wheel_comp(H, g, plan, vb_label, vb_sides)

    # interleave each bridge vertex's two attachment groups
    for lbl, sides in vb_sides.items():
        rot = []
        for ci in sorted(sides):
            rot.extend(sides[ci])
        H.rotation[lbl] = rot
    return H, plans, vb_label


def _embed_vertex_comp(H, g, plan, vb_label, vb_sides):
    u = plan.vertex
    labels = [vb_label[edge_key(u, w)] for w in sorted(g.neighbors(u))]
    plan.vbs = labels
    for j, lbl in enumerate(labels):
        nxt = labels[(j + 1) % 3]
        prv = labels[(j - 1) % 3]
        darts = []
        for other in (nxt, prv):
            eid = H.edge_between(lbl, other)
            if eid is None:
                eid = H.add_edge(lbl, other)
                # remove auto-appended darts; rotations are rebuilt by hand
                H.rotation[lbl].remove((eid, 0))
                H.rotation[other].remove((eid, 1))
            end = 0 if H.endpoints[eid][0] == lbl else 1
            darts.append((eid, end))
        vb_sides[lbl][plan.index] = darts


def _embed_cycle_comp(H, g, plan, vb_label, vb_sides):
    m = len(plan.order)
    rims = [f"c{plan.index}w{t}" for t in range(m)]
    plan.rim = rims
    for w in rims:
        H.add_vertex(w)
    rim_eids = {}
    for t in range(m):
        eid = H.add_edge(rims[t], rims[(t + 1) % m])
        H.rotation[rims[t]].pop()
        H.rotation[rims[(t + 1) % m]].pop()
        rim_eids[t] = eid
    vb_eids = {}
    for t, u in enumerate(plan.order):
        b = [bk for bk in vb_label if u in bk][0]
        lbl = vb_label[b]
        e1 = H.add_edge(rims[t], lbl)
        H.rotation[rims[t]].pop()
        H.rotation[lbl].pop()
        e2 = H.add_edge(rims[(t + 1) % m], lbl)
        H.rotation[rims[(t + 1) % m]].pop()
        H.rotation[lbl].pop()
        vb_eids[t] = (e1, e2, lbl)

    def dart(eid, frm):
        return (eid, 0 if H.endpoints[eid][0] == frm else 1)

    for t in range(m):
        w = rims[t]
        e_next = rim_eids[t]
        e_prev = rim_eids[(t - 1) % m]
        att_right = vb_eids[t][0]          # vb over edge (t, t+1)
        att_left = vb_eids[(t - 1) % m][1]  # vb over edge (t-1, t)
        H.rotation[w] = [dart(e_next, w), dart(att_right, w),
                         dart(att_left, w), dart(e_prev, w)]
    for t in range(m):
        e1, e2, lbl = vb_eids[t]
        vb_sides[lbl][plan.index] = [dart(e1, lbl), dart(e2, lbl)]


def _embed_wheel_comp(H, g, plan, vb_label, vb_sides):
    """Wheel floorplan: rim slots, hub, chords, foot chains and splits.

    Rim slot j of a cycle is the contact of its cycle edge (cyc[j-1],
    cyc[j]).  A slot whose edge is a cycle-type foot is split into two rim
    vertices with the bridge vertex hanging outside between them; matching
    feet chain through a dummy gap instead.  Chords (multi-cycle
    components) are drawn over their arcs so each chord triangle's region
    is exactly its own cycle's faces.
    """
    hub = f"c{plan.index}h"
    plan.hub = hub
    H.add_vertex(hub)
    k = len(plan.cycles)

    cycle_foot_at = {}
    for u, (fk, bk, kind) in plan.cut.items():
        if kind != "cycle":
            continue
        for ci, cyc in enumerate(plan.cycles):
            for j in range(len(cyc)):
                if edge_key(cyc[j - 1], cyc[j]) == fk:
                    cycle_foot_at[(ci, j)] = u
    plan.cycle_foot_at = cycle_foot_at

    slot_nodes = []
    t = 0
    for ci, cyc in enumerate(plan.cycles):
        row = []
        for j in range(len(cyc)):
            if (ci, j) in cycle_foot_at:
                row.append([f"c{plan.index}w{t}a", f"c{plan.index}w{t}b"])
            else:
                row.append([f"c{plan.index}w{t}"])
            t += 1
        slot_nodes.append(row)
    plan.slot_nodes = slot_nodes
    for row in slot_nodes:
        for names in row:
            for nm in names:
                H.add_vertex(nm)

    matching_feet = sorted(
        (u for u, (fk, bk, kind) in plan.cut.items() if kind == "matching"),
        key=lambda u: sorted(plan.cut[u][0]))
    min_label_cycle = min(range(k), key=lambda ci: min(plan.cycles[ci]))
    gap_of = (min_label_cycle - 1) % k
    chains = {gi: [] for gi in range(k)}
    for u in matching_feet:
        chains[gap_of].append(u)

    def dart(eid, frm):
        return (eid, 0 if H.endpoints[eid][0] == frm else 1)

    def quiet_edge(a, bnode):
        eid = H.add_edge(a, bnode)
        H.rotation[a].pop()
        H.rotation[bnode].pop()
        return eid

    spoke = {}
    for row in slot_nodes:
        for names in row:
            for nm in names:
                spoke[nm] = quiet_edge(hub, nm)

    intra = {}
    foot_vb = {}
    inter = {}
    chords = {}
    for ci, cyc in enumerate(plan.cycles):
        m = len(cyc)
        row = slot_nodes[ci]
        for j in range(m):
            if len(row[j]) == 2:
                a, b = row[j]
                intra[(ci, j)] = quiet_edge(a, b)
                u = cycle_foot_at[(ci, j)]
                lbl = vb_label[plan.cut[u][1]]
                foot_vb[(ci, j)] = (quiet_edge(a, lbl), quiet_edge(lbl, b), lbl)
        for j in range(m - 1):
            inter[(ci, j)] = quiet_edge(row[j][-1], row[j + 1][0])
        if k >= 2:
            chords[ci] = quiet_edge(row[0][0], row[m - 1][-1])

    gap_eids = {}
    chain_nodes = {}
    chain_edges = {}
    hub_chain = {}
    for gi in range(k):
        x_nm = slot_nodes[gi][-1][-1]
        y_nm = slot_nodes[(gi + 1) % k][0][0]
        chain = chains[gi]
        if not chain:
            gap_eids[gi] = quiet_edge(x_nm, y_nm)
            continue
        nodes = [vb_label[plan.cut[u][1]] for u in chain]
        chain_nodes[gi] = nodes
        seq = [x_nm] + nodes + [y_nm]
        chain_edges[gi] = [quiet_edge(seq[i], seq[i + 1])
                           for i in range(len(seq) - 1)]
        hub_chain[gi] = {lbl: quiet_edge(hub, lbl) for lbl in nodes}
    plan.chain_nodes = chain_nodes

    rot_h = []
    for ci in range(k):
        for names in slot_nodes[ci]:
            rot_h += [dart(spoke[nm], hub) for nm in names]
        for lbl in chain_nodes.get(ci, []):
            rot_h.append(dart(hub_chain[ci][lbl], hub))
    H.rotation[hub] = rot_h

    # rim rotations, ccw: [next, hub, prev, outward attachments]; split
    # slots put the bridge vertex between their two copies on the outside
    for ci, cyc in enumerate(plan.cycles):
        m = len(cyc)
        row = slot_nodes[ci]
        for j in range(m):
            if j > 0:
                e_prev = inter[(ci, j - 1)]
            else:
                gi = (ci - 1) % k
                e_prev = chain_edges[gi][-1] if gi in chain_nodes \
                    else gap_eids[gi]
            if j < m - 1:
                e_next = inter[(ci, j)]
            else:
                gi = ci
                e_next = chain_edges[gi][0] if gi in chain_nodes \
                    else gap_eids[gi]
            names = row[j]
            if len(names) == 1:
                nm = names[0]
                rot = [dart(e_next, nm), dart(spoke[nm], nm),
                       dart(e_prev, nm)]
                if k >= 2 and j in (0, m - 1):
                    rot.append(dart(chords[ci], nm))
                H.rotation[nm] = rot
            else:
                a, b = names
                e_ab = intra[(ci, j)]
                e_avb, e_vbb, lbl = foot_vb[(ci, j)]
                H.rotation[a] = [dart(e_ab, a), dart(spoke[a], a),
                                 dart(e_prev, a), dart(e_avb, a)]
                H.rotation[b] = [dart(e_next, b), dart(spoke[b], b),
                                 dart(e_ab, b), dart(e_vbb, b)]
                # the foot triangle face (a, vb, b) needs the b-dart right
                # before the a-dart once partner darts are appended
                vb_sides[lbl][plan.index] = [dart(e_vbb, lbl),
                                             dart(e_avb, lbl)]

    for gi, nodes in chain_nodes.items():
        edges = chain_edges[gi]
        for j, lbl in enumerate(nodes):
            vb_sides[lbl][plan.index] = [dart(edges[j + 1], lbl),
                                         dart(hub_chain[gi][lbl], lbl),
                                         dart(edges[j], lbl)]


def represent_cubic(g: Graph) -> Scene:
    """Any connected cubic graph as touching triangles, exact coordinates.

    Without bridges this is the rectangle construction; with bridges the
    components' floorplans are drawn together by the Schnyder algorithm
    and each cut vertex becomes a vertical triangle over its bridge vertex.
    """
    if not g.is_regular(3):
        raise ConstructionError("graph is not cubic")
    if not g.is_connected():
        raise ConstructionError("graph is not connected")
    bbt = bridge_block_tree(g)
    if not bbt.bridges:
        return represent_2ec_cubic(g)

    H, plans, vb_label = _build_floorplan(g, bbt)
    H.check_planar()
    if len(H.rotation) > len(g.edges):
        raise ConstructionError(uninjective_msg(len(H.rotation), len(g.edges)))
    pos = schnyder_draw(H)

    # a chord triangle degenerates when the drawing put the hub on the line
    # of its two rim corners (possible once a foot chain replaced the
    # closing edge); lift that chord's first corner slightly, backing off
    # until exact verification accepts
    lifted = set()
    for plan in plans:
        if plan.kind != "wheel":
            continue
        for ci, cyc in enumerate(plan.cycles):
            row = plan.slot_nodes[ci]
            p0 = pos[row[0][0]]
            pm = pos[row[len(cyc) - 1][-1]]
            ph = pos[plan.hub]
            cr = (pm[0] - p0[0]) * (ph[1] - p0[1]) \
                - (pm[1] - p0[1]) * (ph[0] - p0[0])
            if cr == 0:
                lifted.add((plan.index, ci))

    def build(delta):
        def pt(label, z=0):
            x, y = pos[label]
            return (Fraction(x), Fraction(y), Fraction(z))

        polygons = {}
        contacts = {}
        for b, lbl in vb_label.items():
            contacts[b] = pt(lbl)
        for plan in plans:
            if plan.kind == "vertex":
                u = plan.vertex
                polygons[u] = Polygon3(
                    corners=tuple(pt(lbl) for lbl in plan.vbs))
            elif plan.kind == "cycle":
                m = len(plan.order)
                for t, u in enumerate(plan.order):
                    b = [bk for bk in vb_label if u in bk][0]
                    corners = (pt(plan.rim[t]), pt(plan.rim[(t + 1) % m]),
                               pt(vb_label[b]))
                    polygons[u] = Polygon3(corners=corners)
                    contacts[edge_key(plan.order[t - 1], u)] = pt(plan.rim[t])
            else:
                _wheel_scene_part(plan, g, vb_label, pt, polygons, contacts,
                                  lifted, delta)
        meta = {"construction": "cubic", "arithmetic": "exact",
                "floorplan_vertices": len(H.rotation),
                "claimed_grid": {"x": 3 * g.n // 2, "y": 3 * g.n // 2,
                                 "z": g.n // 2}}
        return graph_scene(g, polygons, contacts, meta)

    if not lifted:
        return build(Fraction(0))
    delta = Fraction(1, 4)
    for _ in range(24):
        scene = build(delta)
        report = verify_scene(scene)
        if report.passed:
            return scene
        delta /= 2
    raise ConstructionError("chord lift backoff failed")  # pragma: no cover


def _wheel_scene_part(plan: _WheelPlan, g: Graph, vb_label, pt, polygons,
                      contacts, lifted=frozenset(), delta=0):
    hub = plan.hub
    all_feet = {fk for fk, _, _ in plan.cut.values()}
    for ci, cyc in enumerate(plan.cycles):
        row = plan.slot_nodes[ci]
        m = len(cyc)
        zc = plan.apex[cyc[-1]]

        def point_at(j, side):
            z = zc if j in (0, m - 1) else 0
            if j == 0 and (plan.index, ci) in lifted:
                z = zc + delta
            names = row[j]
            return pt(names[0] if side == "first" else names[-1], z)

        for j, v in enumerate(cyc):
            if j == m - 1:
                corners = (point_at(0, "first"), point_at(m - 1, "last"),
                           pt(hub, zc))
            else:
                corners = (point_at(j, "last"), point_at(j + 1, "first"),
                           pt(hub, plan.apex[v]))
            polygons[v] = Polygon3(corners=corners)
        for j in range(m):
            if len(row[j]) == 1:
                contacts[edge_key(cyc[j - 1], cyc[j])] = point_at(j, "first")
    for e in plan.matching:
        if e not in all_feet:
            contacts[e] = pt(hub, plan.slots[e][0])
    located = {u: key for key, u in plan.cycle_foot_at.items()}
    for u, (foot, bridge, kind) in plan.cut.items():
        x, y = sorted(foot)
        if kind == "matching":
            corners = (pt(hub, plan.apex[x]), pt(hub, plan.apex[y]),
                       pt(vb_label[bridge]))
            polygons[u] = Polygon3(corners=corners)
            contacts[edge_key(u, x)] = pt(hub, plan.apex[x])
            contacts[edge_key(u, y)] = pt(hub, plan.apex[y])
        else:
            ci, j = located[u]
            cyc = plan.cycles[ci]
            a_nm, b_nm = plan.slot_nodes[ci][j]
            polygons[u] = Polygon3(corners=(pt(a_nm), pt(b_nm),
                                            pt(vb_label[bridge])))
            contacts[edge_key(u, cyc[j - 1])] = pt(a_nm)
            contacts[edge_key(u, cyc[j])] = pt(b_nm)


# ---------------------------------------------------------------------------
# Maximum degree 3 (segments and points allowed)
# ---------------------------------------------------------------------------


def _augment_to_cubic(g: Graph):
    """Dummy vertex (odd order) plus dummy edges making every degree 3."""
    vertices = list(g.vertices)
    dummy = None
    if g.n % 2 == 1:
        dummy = "_aux"
        while dummy in set(vertices):
            dummy += "_"
        vertices.append(dummy)
    deficit = {v: 3 - g.degree(v) for v in g.vertices}
    if dummy is not None:
        deficit[dummy] = 3
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    if dummy is not None:
        adj[dummy] = set()
    order = [v for v in vertices if deficit[v] > 0]
    extra = []

    def backtrack():
        pending = [v for v in order if deficit[v] > 0]
        if not pending:
            return True
        v = pending[0]
        for w in pending[1:]:
            if w in adj[v]:
                continue
            adj[v].add(w)
            adj[w].add(v)
            deficit[v] -= 1
            deficit[w] -= 1
            extra.append((v, w))
            if backtrack():
                return True
            extra.pop()
            adj[v].discard(w)
            adj[w].discard(v)
            deficit[v] += 1
            deficit[w] += 1
        return False

    if not backtrack():
        raise ConstructionError("cannot augment to a cubic graph")
    edges = [(tuple(e)[0], tuple(e)[1]) for e in g.edges] + extra
    return Graph.from_edges(edges, vertices=vertices), dummy, [edge_key(u, v) for u, v in extra]


def represent_max_degree3(g: Graph) -> Scene:
    """Triangles, segments and points for graphs of maximum degree 3.

    The graph is padded to a cubic one with dummy edges (and a dummy
    vertex when the order is odd); afterwards the dummy polygon is
    removed and remaining polygons are rebuilt without dummy contacts, so
    degree-2 vertices come out as segments and degree-1 as points.
    """
    bad = [v for v in g.vertices if g.degree(v) > 3]
    if bad:
        raise ConstructionError(f"vertices of degree > 3: {bad}")
    if any(g.degree(v) == 0 for v in g.vertices):
        raise ConstructionError("isolated vertices have no touching points")
    if g.is_regular(3):
        return represent_cubic(g)
    aug, dummy, extra = _augment_to_cubic(g)
    scene = represent_cubic(aug)

    drop_points = set()
    for e in extra:
        drop_points.add(tuple(scene.contacts[e]))
    if dummy is not None:
        for e in scene.contacts:
            if dummy in e:
                drop_points.add(tuple(scene.contacts[e]))

    polygons = {}
    for v in g.vertices:
        keep = tuple(c for c in scene.polygons[v].corners
                     if tuple(c) not in drop_points)
        polygons[v] = Polygon3(corners=keep)
    contacts = {e: p for e, p in scene.contacts.items() if e in g.edges}
    meta = dict(scene.meta)
    meta["construction"] = "max-degree-3"
    half = (g.n + 1) // 2
    meta["claimed_grid"] = {"x": 3 * half, "y": 3 * half, "z": half}
    meta["degenerate"] = any(len(p.corners) < 3 for p in polygons.values())
    return graph_scene(g, polygons, contacts, meta)
