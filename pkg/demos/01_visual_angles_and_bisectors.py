"""Visual angles and the bisector curve of two segment sites.

Walks through the basic objects: the visual angle a segment subtends from a
point, the canonical frame for a segment pair, and the implicit cubic whose
zero set carries every point seeing both segments at the same angle. Run:

    python demos/01_visual_angles_and_bisectors.py
"""

import math

from avd import (
    GridSpec,
    Point,
    Segment,
    angle_gap,
    build_edge,
    canonicalize,
    extract_bisector,
    leading_coefficients,
    normalize,
    visual_angle,
)

s1 = Segment.of((-1.0, 0.0), (1.0, 0.0))
s2 = Segment.of((0.5, 1.5), (2.0, 2.5))

print("Visual angles of s1 from a few viewpoints:")
for p in (Point(0.0, 1.0), Point(0.0, math.sqrt(3.0)), Point(4.0, 0.0)):
    print(f"  from ({p.x:+.2f}, {p.y:+.2f}): {visual_angle(p, s1):.6f} rad")

config = canonicalize(s1, s2)
print("\nCanonical frame for the pair (s1 pinned to (-1,0)-(1,0)):")
print(f"  midpoint (a, b) = ({config.a:.6f}, {config.b:.6f})")
print(f"  half-length l   = {config.l:.6f}")
print(f"  direction alpha = {config.alpha:.6f} rad")

curve = build_edge(config)
top, side = leading_coefficients(config)
print(f"\nShared cubic coefficients: y^3, x^2y -> {top:.6f}; xy^2, x^3 -> {side:.6f}")
print("Edge polynomial (canonical frame, normalized):")
print(f"  {normalize(curve.poly)!r}")

grid = GridSpec.canonical_window(config, 192)
locus = extract_bisector(*curve.world_segments(), grid)
vertices = locus.vertices()
print(f"\nBrute-force equal-angle locus: {len(locus.polylines)} polyline(s), "
      f"{len(vertices)} vertices")
worst = max(
    abs(angle_gap(Point(x, y), *curve.world_segments())) for x, y in vertices[:200]
)
print(f"Largest |angle gap| over the first 200 vertices: {worst:.2e} rad")

p = normalize(curve.poly)
m = normalize(curve.mirror_poly)
pair_residual = max(
    min(abs(float(p(x, y))), abs(float(m(x, y)))) for x, y in vertices[:200]
)
print(f"Largest residual of those vertices on the curve pair: {pair_residual:.2e}")
print("(each arc of the locus lies on one of the two endpoint-labeling branches)")
