"""Verifier behavior, especially the designed-violation negative suite."""

from fractions import Fraction as F

from polycontact import (Graph, Polygon3, edge_key, graph_scene,
                         grid_extent, represent_complete, verify_scene)


def _translate(poly, dz):
    return Polygon3(corners=tuple((x, y, z + dz) for x, y, z in poly.corners),
                    claimed_convex=poly.claimed_convex)


def _two_triangle_scene(tri_a, tri_b, adjacent=True):
    """Tiny scene over an edge or non-edge between two polygons."""
    edges = [("a", "b")] if adjacent else [("a", "c"), ("b", "c"),
                                           ("a", "d"), ("b", "d")]
    g = Graph.from_edges([("a", "b")]) if adjacent else None
    assert adjacent
    polygons = {"a": tri_a, "b": tri_b}
    shared = set(map(tuple, tri_a.corners)) & set(map(tuple, tri_b.corners))
    contacts = {edge_key("a", "b"): next(iter(shared))} if shared else {}
    return graph_scene(g, polygons, contacts,
                       {"construction": "test", "arithmetic": "exact"})


def T(*cs):
    return Polygon3(corners=tuple(tuple(map(F, c)) for c in cs))


class TestNegativeSuite:
    """Each mutation fails with its designed violation category."""

    def test_translated_polygon_missing_contact(self):
        scene = represent_complete(4)
        victim = sorted(scene.polygons)[0]
        scene.polygons[victim] = _translate(scene.polygons[victim], F(10))
        report = verify_scene(scene)
        assert not report.passed
        assert "missing-contact" in report.violation_codes()

    def test_merged_contacts(self):
        scene = represent_complete(4)
        # rebuild two polygons so two different edges land on one point
        keys = sorted(scene.contacts, key=lambda e: sorted(e))
        e1, e2 = keys[0], keys[1]
        p1, p2 = scene.contacts[e1], scene.contacts[e2]
        for label, poly in scene.polygons.items():
            corners = tuple(p1 if tuple(c) == tuple(p2) else c
                            for c in poly.corners)
            scene.polygons[label] = Polygon3(corners=corners)
        scene.contacts[e2] = p1
        report = verify_scene(scene)
        assert not report.passed
        assert ("merged-contacts" in report.violation_codes()
                or "contact-count" in report.violation_codes())

    def test_interior_overlap_coplanar(self):
        scene = _two_triangle_scene(T((0, 0, 0), (4, 0, 0), (0, 4, 0)),
                                    T((0, 0, 0), (4, 1, 0), (1, 4, 0)))
        report = verify_scene(scene)
        assert "interior-overlap" in report.violation_codes()

    def test_corner_on_edge(self):
        scene = _two_triangle_scene(T((0, 0, 0), (4, 0, 0), (0, 4, 0)),
                                    T((0, 0, 0), (2, 0, 0), (1, -3, 2)))
        report = verify_scene(scene)
        assert "corner-on-boundary" in report.violation_codes()

    def test_corner_inside(self):
        scene = _two_triangle_scene(T((0, 0, 0), (4, 0, 0), (0, 4, 0)),
                                    T((0, 0, 0), (1, 1, 0), (1, -3, 2)))
        report = verify_scene(scene)
        assert "corner-inside" in report.violation_codes()

    def test_transversal_piercing(self):
        scene = _two_triangle_scene(T((0, 0, 0), (4, 0, 0), (0, 4, 0)),
                                    T((0, 0, 0), (3, 3, -1), (3, 3, 1)))
        report = verify_scene(scene)
        assert "interior-overlap" in report.violation_codes()

    def test_warped_corner_breaks_polygon(self):
        # the complete-graph polygons live in vertical planes, so a z-push
        # keeps them planar but folds the corner order over itself
        scene = represent_complete(5)
        victim = sorted(scene.polygons)[0]
        poly = scene.polygons[victim]
        cs = list(poly.corners)
        cs[0] = (cs[0][0], cs[0][1], cs[0][2] + F(1, 7))
        scene.polygons[victim] = Polygon3(corners=tuple(cs))
        report = verify_scene(scene)
        assert not report.passed
        assert "not-simple" in report.violation_codes()

    def test_nonplanar_polygon(self):
        warped = T((0, 0, 0), (4, 0, 0), (4, 4, 1), (0, 4, 0))
        far = T((10, 0, 0), (11, 0, 0), (10, 1, 0))
        g = Graph.from_edges([("a", "b")])
        scene = graph_scene(g, {"a": warped, "b": far}, {},
                            {"construction": "test", "arithmetic": "exact"})
        report = verify_scene(scene)
        assert not report.passed
        assert "nonplanar" in report.violation_codes()

    def test_self_intersecting_polygon(self):
        bow = T((0, 0, 0), (2, 2, 0), (2, 0, 0), (0, 2, 0))
        sq = T((5, 0, 0), (6, 0, 0), (6, 1, 0), (5, 1, 0))
        g = Graph.from_edges([("a", "b")])
        scene = graph_scene(g, {"a": bow, "b": sq}, {},
                            {"construction": "test", "arithmetic": "exact"})
        report = verify_scene(scene)
        assert "not-simple" in report.violation_codes()

    def test_convexity_claim_broken(self):
        dart = T((0, 0, 0), (4, 0, 0), (1, 1, 0), (0, 4, 0))
        far = T((10, 0, 0), (11, 0, 0), (10, 1, 0))
        g = Graph.from_edges([("a", "b")])
        scene = graph_scene(g, {"a": dart, "b": far}, {},
                            {"construction": "test", "arithmetic": "exact"})
        report = verify_scene(scene)
        assert "not-convex" in report.violation_codes()

    def test_duplicate_corner(self):
        bad = T((0, 0, 0), (4, 0, 0), (4, 0, 0), (0, 4, 0))
        far = T((10, 0, 0), (11, 0, 0), (10, 1, 0))
        g = Graph.from_edges([("a", "b")])
        scene = graph_scene(g, {"a": bad, "b": far}, {},
                            {"construction": "test", "arithmetic": "exact"})
        report = verify_scene(scene)
        assert not report.passed

    def test_shared_corner_without_edge(self):
        scene = represent_complete(4)
        g = scene.structure
        # drop one edge from the structure but keep the geometry touching
        edges = sorted(g.edges, key=sorted)
        removed = edges[0]
        g2 = Graph.from_edges([tuple(sorted(e)) for e in edges[1:]],
                              vertices=g.vertices)
        contacts = {e: p for e, p in scene.contacts.items() if e != removed}
        scene2 = graph_scene(g2, scene.polygons, contacts, scene.meta)
        report = verify_scene(scene2)
        assert not report.passed
        assert "shared-corner-without-edge" in report.violation_codes()

    def test_declared_mismatch(self):
        scene = represent_complete(4)
        key = sorted(scene.contacts, key=lambda e: sorted(e))[0]
        scene.contacts[key] = (F(99), F(99), F(99))
        report = verify_scene(scene)
        assert not report.passed
        assert "declared-mismatch" in report.violation_codes()

    def test_missing_declared_contact(self):
        scene = represent_complete(4)
        key = sorted(scene.contacts, key=lambda e: sorted(e))[0]
        del scene.contacts[key]
        report = verify_scene(scene)
        assert not report.passed
        assert "declared-mismatch" in report.violation_codes()


class TestGridExtent:
    def test_planar_scene_depth_one(self):
        tri_a = T((0, 0, 0), (2, 0, 0), (0, 2, 0))
        tri_b = T((2, 0, 0), (4, 0, 0), (4, 2, 0))
        g = Graph.from_edges([("a", "b")])
        scene = graph_scene(g, {"a": tri_a, "b": tri_b},
                            {edge_key("a", "b"): (F(2), F(0), F(0))},
                            {"construction": "test", "arithmetic": "exact"})
        ext = grid_extent(scene)
        assert ext.gz == 1 and not ext.approximate

    def test_float_extent_flagged(self):
        tri = Polygon3(corners=((0.0, 0.0, 0.0), (1.0, 0.0, 0.0),
                                (0.0, 1.0, 0.0)))
        tri2 = Polygon3(corners=((1.0, 0.0, 0.0), (2.0, 0.0, 0.0),
                                 (2.0, 1.0, 0.0)))
        g = Graph.from_edges([("a", "b")])
        scene = graph_scene(g, {"a": tri, "b": tri2},
                            {edge_key("a", "b"): (1.0, 0.0, 0.0)},
                            {"construction": "test", "arithmetic": "float",
                             "epsilon": 1e-9})
        assert grid_extent(scene).approximate

    def test_report_deterministic(self):
        scene = represent_complete(5)
        r1 = verify_scene(scene)
        r2 = verify_scene(scene)
        assert r1.reconstructed == r2.reconstructed
        assert r1.passed and r2.passed
