"""Scene certification: polygon validity, pairwise contacts, grid extents.

`verify_scene` re-derives the contact structure from the geometry alone and
compares it with what the scene's combinatorial structure demands:

* every polygon is planar and simple (convex when claimed),
* no pair of polygons violates the open-polygon contact model,
* graph scenes: each edge's two polygons share exactly one corner, distinct
  across edges, and non-adjacent polygons share none,
* hypergraph scenes: each vertex is one point that is a corner of exactly
  the blocks containing it, distinct across vertices,
* the declared contact map coincides with the reconstruction.

Boundary touches and degenerate (point/segment) polygons are warnings, not
failures.  Everything is exact in exact mode; float scenes use the scene
epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Optional

from .geom import (ArithmeticContext, classify_pair, polygon_properties,
                   BOUNDARY_TOUCH, VIOLATION)
from .scene import GRAPH, Scene


@dataclass
class Finding:
    code: str
    where: str
    detail: str = ""
    witness: Optional[tuple] = None

    def __str__(self):
        w = f" at {_fmt_point(self.witness)}" if self.witness is not None else ""
        return f"[{self.code}] {self.where}: {self.detail}{w}"


def _fmt_point(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


@dataclass
class VerificationReport:
    passed: bool = False
    polygon_properties: dict = field(default_factory=dict)
    pair_kinds: dict = field(default_factory=dict)  # (a,b) -> kind
    reconstructed: dict = field(default_factory=dict)  # contact key -> point
    violations: list = field(default_factory=list)  # Finding
    warnings: list = field(default_factory=list)  # Finding

    def to_text(self) -> str:
        lines = [f"pass: {self.passed}",
                 f"polygons: {len(self.polygon_properties)}",
                 f"contacts reconstructed: {len(self.reconstructed)}"]
        counts = {}
        for kind in self.pair_kinds.values():
            counts[kind] = counts.get(kind, 0) + 1
        lines.append("pair kinds: " + ", ".join(
            f"{k}={v}" for k, v in sorted(counts.items())) if counts else "pair kinds: none")
        for f in self.violations:
            lines.append("violation " + str(f))
        for f in self.warnings:
            lines.append("warning " + str(f))
        return "\n".join(lines)

    def violation_codes(self) -> set:
        return {f.code for f in self.violations}


class GridExtent(NamedTuple):
    gx: int
    gy: int
    gz: int
    approximate: bool = False


def _pair_label(a: str, b: str):
    return tuple(sorted((a, b)))


def verify_scene(scene: Scene, ctx: Optional[ArithmeticContext] = None,
                 eps: Optional[float] = None) -> VerificationReport:
    """Certify a scene; all findings are collected into the report."""
    if ctx is None:
        ctx = scene.context(eps=eps)
    report = VerificationReport()

    labels = sorted(scene.polygons)
    valid = {}
    for label in labels:
        poly = scene.polygons[label]
        props = polygon_properties(poly, ctx)
        report.polygon_properties[label] = props
        valid[label] = props.planar and (props.simple or props.degenerate)
        if not props.planar:
            report.violations.append(Finding("nonplanar", label, "; ".join(props.issues)))
        elif not props.simple and not props.degenerate:
            report.violations.append(Finding("not-simple", label, "; ".join(props.issues)))
        elif poly.claimed_convex and not props.degenerate and not props.convex:
            report.violations.append(Finding("not-convex", label))
            valid[label] = False
        if props.degenerate:
            report.warnings.append(Finding("degenerate-polygon", label, poly.kind))
        if props.issues and valid[label]:
            report.warnings.append(Finding("polygon-issues", label, "; ".join(props.issues)))

    # Pairwise classification; shared corners feed the reconstruction.
    shared = {}
    for a, b in combinations(labels, 2):
        if not (valid[a] and valid[b]):
            continue
        cls = classify_pair(scene.polygons[a], scene.polygons[b], ctx)
        key = _pair_label(a, b)
        report.pair_kinds[key] = cls.kind
        if cls.kind == VIOLATION:
            for reason, witness in cls.violations:
                report.violations.append(Finding(reason, f"{a} / {b}", witness=tuple(witness)))
        if cls.kind == BOUNDARY_TOUCH:
            w = cls.touch_witnesses[0] if cls.touch_witnesses else None
            report.warnings.append(Finding("boundary-touch", f"{a} / {b}",
                                           witness=tuple(w) if w else None))
        if cls.shared_corners:
            shared[key] = cls.shared_corners

    _reconstruct(scene, ctx, shared, report)

    report.passed = not report.violations
    return report


def _reconstruct(scene: Scene, ctx, shared: dict, report: VerificationReport):
    """Compare geometric corner sharing with the structure-implied contacts."""
    if scene.kind == GRAPH:
        g = scene.structure
        for key, pts in sorted(shared.items()):
            a, b = key
            if not g.adjacent(a, b):
                report.violations.append(Finding(
                    "shared-corner-without-edge", f"{a} / {b}",
                    witness=tuple(pts[0])))
        recon = {}
        for e in sorted(g.edges, key=sorted):
            u, v = sorted(e)
            pts = shared.get(_pair_label(u, v), [])
            if not pts:
                report.violations.append(Finding("missing-contact", f"{u} / {v}",
                                                 "polygons do not share a corner"))
            elif len(pts) > 1:
                report.violations.append(Finding(
                    "contact-count", f"{u} / {v}",
                    f"{len(pts)} shared corners, expected 1", witness=tuple(pts[0])))
            else:
                recon[e] = pts[0]
        report.reconstructed = recon
        _check_distinct(recon, ctx, report)
        _check_declared(scene, recon, ctx, report)
        return

    # hypergraph: reconstruct one point per vertex from the declared map,
    # then check corner incidence matches block membership exactly.
    h = scene.structure
    recon = {}
    for v in h.vertices:
        want = scene.polygons_for_contact(v)
        if v not in scene.contacts:
            report.violations.append(Finding("missing-contact", v, "no declared point"))
            continue
        p = tuple(scene.contacts[v])
        ok = True
        for label in sorted(scene.polygons):
            poly = scene.polygons[label]
            is_corner = any(ctx.point_eq(p, c) for c in poly.corners)
            if label in want and not is_corner:
                report.violations.append(Finding(
                    "missing-contact", f"{v} in {label}",
                    "vertex point is not a corner of its block polygon", witness=p))
                ok = False
            if label not in want and is_corner:
                report.violations.append(Finding(
                    "shared-corner-without-edge", f"{v} / {label}",
                    "vertex point is a corner of a foreign block", witness=p))
                ok = False
        if ok:
            recon[v] = p
    # blocks sharing vertices must share exactly those corner points
    for key, pts in sorted(shared.items()):
        la, lb = key
        ba = frozenset(la.split(","))
        bb = frozenset(lb.split(","))
        common = ba & bb
        expect = {tuple(scene.contacts[v]) for v in common if v in scene.contacts}
        for p in pts:
            if not any(ctx.point_eq(tuple(p), q) for q in expect):
                report.violations.append(Finding(
                    "shared-corner-without-edge", f"{la} / {lb}",
                    "blocks share a corner that is no common vertex", witness=tuple(p)))
    report.reconstructed = recon
    _check_distinct(recon, ctx, report)


def _check_distinct(recon: dict, ctx, report: VerificationReport):
    items = sorted(recon.items(), key=lambda kv: str(kv[0]))
    for (k1, p1), (k2, p2) in combinations(items, 2):
        if ctx.point_eq(p1, p2):
            report.violations.append(Finding(
                "merged-contacts", f"{_key_str(k1)} / {_key_str(k2)}",
                "two contacts share one point", witness=tuple(p1)))


def _key_str(k):
    return "-".join(sorted(k)) if isinstance(k, frozenset) else str(k)


def _check_declared(scene: Scene, recon: dict, ctx, report: VerificationReport):
    for key in scene.expected_contact_keys():
        declared = scene.contacts.get(key)
        if declared is None:
            report.violations.append(Finding(
                "declared-mismatch", _key_str(key), "no declared contact"))
            continue
        got = recon.get(key)
        if got is not None and not ctx.point_eq(tuple(declared), got):
            report.violations.append(Finding(
                "declared-mismatch", _key_str(key),
                "declared point differs from reconstruction",
                witness=tuple(declared)))
    for key in scene.contacts:
        if key not in scene.expected_contact_keys():
            report.violations.append(Finding(
                "declared-mismatch", _key_str(key),
                "declared contact for a non-element"))


def grid_extent(scene: Scene, eps: Optional[float] = None) -> GridExtent:
    """Per-axis count of distinct coordinate values over all corners.

    This is the grid-line counting convention (a drawing in the xy-plane
    has z-extent 1).  Exact scenes count exactly; float scenes snap values
    within eps and are flagged approximate.
    """
    pts = list({tuple(p) for p in scene.all_points()})
    if not pts:
        return GridExtent(0, 0, 0)
    if scene.is_exact:
        counts = [len({p[i] for p in pts}) for i in range(3)]
        return GridExtent(*counts, approximate=False)
    if eps is None:
        eps = scene.meta.get("epsilon", 1e-9)
    counts = []
    for i in range(3):
        vals = sorted(float(p[i]) for p in pts)
        groups = 1
        for a, b in zip(vals, vals[1:]):
            if b - a > eps:
                groups += 1
        counts.append(groups)
    return GridExtent(*counts, approximate=True)
