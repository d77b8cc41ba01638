"""Geometry exporters: Wavefront OBJ and orthographic SVG."""

from __future__ import annotations

from .scene import Scene

_VIEWS = {"xy": (0, 1, 2), "xz": (0, 2, 1), "yz": (1, 2, 0)}


def scene_to_obj(scene: Scene) -> str:
    """Fan-triangulated OBJ; coordinates printed with 17 significant digits."""
    lines = ["# polycontact scene export"]
    index = {}
    vlines = []
    flines = []
    for label in sorted(scene.polygons):
        poly = scene.polygons[label]
        ids = []
        for c in poly.corners:
            key = tuple(c)
            if key not in index:
                index[key] = len(index) + 1
                vlines.append("v " + " ".join(format(float(x), ".17g") for x in c))
            ids.append(index[key])
        flines.append(f"g {label}")
        if len(ids) >= 3:
            for i in range(1, len(ids) - 1):
                flines.append(f"f {ids[0]} {ids[i]} {ids[i + 1]}")
        elif len(ids) == 2:
            flines.append(f"l {ids[0]} {ids[1]}")
        else:
            flines.append(f"p {ids[0]}")
    return "\n".join(lines + vlines + flines) + "\n"


def scene_to_svg(scene: Scene, view: str = "xy", size: int = 640) -> str:
    """Orthographic projection, polygons painted far-to-near.

    Painter's order sorts by the mean of the discarded coordinate; this is
    presentation only.
    """
    if view not in _VIEWS:
        raise ValueError(f"view must be one of {sorted(_VIEWS)}")
    ax, ay, drop = _VIEWS[view]
    polys = []
    for label in sorted(scene.polygons):
        poly = scene.polygons[label]
        pts = [(float(c[ax]), float(c[ay])) for c in poly.corners]
        depth = sum(float(c[drop]) for c in poly.corners) / len(poly.corners)
        polys.append((depth, label, pts))
    polys.sort(key=lambda t: (t[0], t[1]))

    xs = [x for _, _, pts in polys for x, _ in pts]
    ys = [y for _, _, pts in polys for _, y in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = 0.05 * span
    scale = size / (span + 2 * pad)

    def sx(x):
        return (x - x0 + pad) * scale

    def sy(y):
        return size - (y - y0 + pad) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
           f'height="{size}" viewBox="0 0 {size} {size}">']
    palette = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
               "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"]
    for i, (_, label, pts) in enumerate(polys):
        color = palette[i % len(palette)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        if len(pts) >= 3:
            out.append(f'<polygon points="{coords}" fill="{color}" '
                       f'fill-opacity="0.55" stroke="black" stroke-width="1">'
                       f'<title>{label}</title></polygon>')
        elif len(pts) == 2:
            (xa, ya), (xb, yb) = pts
            out.append(f'<line x1="{sx(xa):.2f}" y1="{sy(ya):.2f}" '
                       f'x2="{sx(xb):.2f}" y2="{sy(yb):.2f}" '
                       f'stroke="{color}" stroke-width="2"/>')
        else:
            (xa, ya) = pts[0]
            out.append(f'<circle cx="{sx(xa):.2f}" cy="{sy(ya):.2f}" r="3" '
                       f'fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
