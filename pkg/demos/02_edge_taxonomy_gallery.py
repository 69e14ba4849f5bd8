"""Gallery of every edge shape the classifier distinguishes.

Builds one representative configuration per class, classifies it, validates
it against the angle oracle, and writes an overlay SVG per case into
demo_out/. Run:

    python demos/02_edge_taxonomy_gallery.py
"""

import math
import os

from avd import (
    CanonicalConfig,
    GridSpec,
    build_edge,
    classify_edge,
    detect_geometric_degeneracy,
    extract_bisector,
    implicit_polylines,
    normalize,
    validate_curve,
)
from avd.oracle import EmptyResult
from avd.svg import render_edge_scene

OUT = "demo_out"

GALLERY = [
    ("regular-cubic", CanonicalConfig.from_angle(1.3, 0.7, 0.8, 0.5)),
    ("nodal-cubic", CanonicalConfig.from_trig(2.0, 4 / 3, 5 / 3, -0.8, 0.6)),
    ("chords-of-one-circle", CanonicalConfig.from_angle(1.0, 1.0, 1.0, -math.pi / 2)),
    ("collinear-unequal", CanonicalConfig.from_angle(3.0, 0.0, 0.5, math.pi)),
    ("shared-endpoint", CanonicalConfig.from_angle(-1.0 - 2.0 * 0.0, -2.0, 2.0, math.pi / 2)),
    ("parallel-hyperbola", CanonicalConfig.from_trig(1.0, 1.0, 1.0, 0.0, -1.0)),
    ("parallel-two-lines", CanonicalConfig.from_trig(2.0, 0.0, 1.0, 0.0, -1.0)),
]


def main() -> None:
    os.makedirs(OUT, exist_ok=True)
    for name, config in GALLERY:
        curve = build_edge(config)
        cls = classify_edge(curve)
        preds = detect_geometric_degeneracy(*curve.world_segments())
        grid = GridSpec.canonical_window(config, 256)
        try:
            report = validate_curve(curve, grid)
            verdict = f"containment {report.containment_residual:.1e}"
        except EmptyResult:
            verdict = "locus outside window"

        print(f"{name:22s} -> {cls.tag.value:28s} "
              f"[{', '.join(p.tag.value for p in preds) or 'no degeneracy'}] "
              f"({verdict})")
        if cls.factors:
            circle, line = cls.factors
            print(f"{'':22s}    circle center ({circle.center.x:+.3f}, "
                  f"{circle.center.y:+.3f}), radius^2 {circle.radius_sq:+.3f}; "
                  f"line {line.u:+.3f}y {line.v:+.3f}x {line.w:+.3f}")
        for sp in cls.singularities:
            print(f"{'':22s}    {sp.kind.value} at "
                  f"({sp.location.x:+.4f}, {sp.location.y:+.4f})")

        try:
            oracle = extract_bisector(*curve.world_segments(), grid)
        except EmptyResult:
            oracle = None
        svg = render_edge_scene(
            grid,
            list(curve.world_segments()),
            implicit_polylines(normalize(curve.world_poly), grid).polylines,
            implicit_polylines(normalize(curve.mirror_world_poly), grid).polylines,
            oracle,
            cls.singularities,
        )
        path = os.path.join(OUT, f"{name}.svg")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    print(f"\nSVG overlays written to {OUT}/")


if __name__ == "__main__":
    main()
