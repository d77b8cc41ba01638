#!/usr/bin/env python3
"""Build one scene of every construction class, verify, and export.

Writes scene JSON, OBJ and SVG files into --out (default ./gallery) and
prints a one-line summary per scene with its grid extent.
"""

import argparse
import pathlib
import sys

from polycontact import (complete_bipartite, graph_from_edge_list,
                         grid_extent, represent_bipartite_grid,
                         represent_bipartite_toroidal, represent_complete,
                         represent_cubic, represent_cycle_square,
                         represent_fano, represent_k33_unit_triangles,
                         represent_min_degree3, represent_oneplanar_cubic,
                         represent_s239, verify_scene, write_scene)
from polycontact.export import scene_to_obj, scene_to_svg

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))
from conftest import gadget_chain, k4_crossed_embedding  # noqa: E402


def petersen_text():
    lines = []
    for i in range(5):
        lines += [f"{i} {(i + 1) % 5}", f"{i} {i + 5}",
                  f"{i + 5} {(i + 2) % 5 + 5}"]
    return "\n".join(lines)


def build_all():
    petersen = graph_from_edge_list(petersen_text())
    return {
        "complete-k6": represent_complete(6),
        "mindeg3-petersen": represent_min_degree3(petersen),
        "bipartite-toroidal-k55": represent_bipartite_toroidal(
            complete_bipartite(5, 5)),
        "bipartite-grid-k46": represent_bipartite_grid(complete_bipartite(4, 6)),
        "k33-unit-triangles": represent_k33_unit_triangles(),
        "oneplanar-k4-crossed": represent_oneplanar_cubic(k4_crossed_embedding()),
        "cubic-gadget-chain": represent_cubic(gadget_chain(2)),
        "cycle-square-8": represent_cycle_square(8),
        "cycle-square-9": represent_cycle_square(9),
        "fano": represent_fano(),
        "s239": represent_s239(),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="gallery")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    failures = 0
    for name, scene in build_all().items():
        report = verify_scene(scene)
        ext = grid_extent(scene)
        status = "ok" if report.passed else "FAILED"
        if not report.passed:
            failures += 1
        print(f"{name:28s} {status:6s} polygons={len(scene.polygons):3d} "
              f"extent={ext.gx}x{ext.gy}x{ext.gz}"
              f"{'~' if ext.approximate else ''}")
        write_scene(out / f"{name}.scene.json", scene)
        (out / f"{name}.obj").write_text(scene_to_obj(scene))
        (out / f"{name}.svg").write_text(scene_to_svg(scene))
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
