"""Squares of cycles: unit squares for even n, split quadrilaterals for odd."""

import math

import pytest

from polycontact import (ConstructionError, cycle_square_graph,
                         represent_cycle_square, verify_scene)


def edge_lengths(poly):
    cs = poly.corners
    return [math.dist(cs[i], cs[(i + 1) % len(cs)]) for i in range(len(cs))]


class TestGraph:
    def test_c6_squared(self):
        g = cycle_square_graph(6)
        assert g.n == 6 and len(g.edges) == 12
        assert g.is_regular(4)

    def test_c7_squared(self):
        g = cycle_square_graph(7)
        assert len(g.edges) == 14


class TestEven:
    @pytest.mark.parametrize("n", [6, 8, 10])
    def test_unit_squares(self, n):
        scene = represent_cycle_square(n)
        report = verify_scene(scene)
        assert report.passed, report.to_text()
        assert len(report.reconstructed) == 2 * n
        for poly in scene.polygons.values():
            for length in edge_lengths(poly):
                assert abs(length - 1.0) <= 1e-9
            cs = poly.corners
            assert abs(math.dist(cs[0], cs[2]) - math.sqrt(2)) <= 1e-9
            assert abs(math.dist(cs[1], cs[3]) - math.sqrt(2)) <= 1e-9

    def test_h6_value(self):
        scene = represent_cycle_square(6)
        assert abs(scene.meta["ring_height"] - math.sqrt(2.0 / 3.0)) <= 1e-9
        zs = sorted({round(c[2], 9) for p in scene.polygons.values()
                     for c in p.corners})
        h = round(math.sqrt(2.0 / 3.0), 9)
        assert zs == [-h, 0.0, h]

    def test_rings(self):
        scene = represent_cycle_square(8)
        mid = [p for e, p in scene.contacts.items()
               if abs(p[2]) <= 1e-12]
        assert len(mid) == 8
        r = {round(math.hypot(p[0], p[1]), 9) for p in mid}
        assert len(r) == 1  # regular ring

    def test_n12_degenerates(self):
        with pytest.raises(ConstructionError, match="n=12"):
            represent_cycle_square(12)

    def test_too_small(self):
        with pytest.raises(ConstructionError):
            represent_cycle_square(4)
        with pytest.raises(ConstructionError, match="complete graph"):
            represent_cycle_square(5)


class TestOdd:
    @pytest.mark.parametrize("n", [7, 9, 11])
    def test_valid_scene(self, n):
        scene = represent_cycle_square(n)
        report = verify_scene(scene)
        assert report.passed, report.to_text()
        assert len(report.reconstructed) == 2 * n

    @pytest.mark.parametrize("n", [7, 9, 11])
    def test_edge_bounds(self, n):
        scene = represent_cycle_square(n)
        lens = [l for p in scene.polygons.values() for l in edge_lengths(p)]
        assert max(lens) < 2.0
        assert max(lens) / min(lens) <= 3.0

    def test_n7_short_edge(self):
        scene = represent_cycle_square(7)
        lens = [l for p in scene.polygons.values() for l in edge_lengths(p)]
        assert min(lens) > 0.69

    @pytest.mark.parametrize("n", [7, 9, 11])
    def test_strictly_convex(self, n):
        from polycontact import polygon_properties
        scene = represent_cycle_square(n)
        ctx = scene.context()
        for poly in scene.polygons.values():
            assert polygon_properties(poly, ctx).strictly_convex
