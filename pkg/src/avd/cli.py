"""Command-line surface.

    avd edge <config.json> [--svg out.svg] [--out report.json] [--tol T]
    avd diagram <config.json> --svg out.svg
    avd verify [--only NAME] [--seed N]

Configs are JSON: {"segments": [[[x,y],[x,y]], ...]} with optional "grid"
and "tolerances" objects; an edge run may instead supply {"canonical":
{"a":..,"b":..,"l":..,"sin_alpha":..,"cos_alpha":..}} so exact rational
direction cosines are expressible. Exit codes: 2 malformed config, 3
identical segments, 4 internal degree anomaly.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .classify import (
    DegreeOneAnomaly,
    EdgeClass,
    classify_edge,
    detect_geometric_degeneracy,
)
from .edge import EdgeCurve, build_edge
from .geometry import CanonicalConfig, IdenticalSegments, Segment, canonicalize
from .oracle import (
    EmptyResult,
    GridSpec,
    extract_bisector,
    implicit_polylines,
    rasterize_diagram,
    validate_curve,
)
from .poly import GRLEX_ORDER, normalize
from .svg import render_diagram, render_edge_scene
from .verify import DEFAULT_SEED, run_all

EXIT_OK = 0
EXIT_BAD_CONFIG = 2
EXIT_IDENTICAL = 3
EXIT_ANOMALY = 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SceneConfig:
    """Parsed input scene: segments plus optional grid/tolerance overrides."""

    segments: tuple[Segment, ...]
    grid: Optional[GridSpec] = None
    tolerances: dict = field(default_factory=dict)
    canonical: Optional[CanonicalConfig] = None


def _parse_grid(obj) -> GridSpec:
    try:
        return GridSpec(
            float(obj["xmin"]), float(obj["xmax"]),
            float(obj["ymin"]), float(obj["ymax"]),
            int(obj["nx"]), int(obj["ny"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad grid object: {exc}") from exc


def load_scene(path: str) -> SceneConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")

    grid = _parse_grid(raw["grid"]) if "grid" in raw else None
    tolerances = raw.get("tolerances", {})
    if not isinstance(tolerances, dict):
        raise ConfigError("tolerances must be an object")

    canonical = None
    if "canonical" in raw:
        c = raw["canonical"]
        try:
            if "sin_alpha" in c or "cos_alpha" in c:
                canonical = CanonicalConfig.from_trig(
                    float(c["a"]), float(c["b"]), float(c["l"]),
                    float(c["sin_alpha"]), float(c["cos_alpha"]),
                )
            else:
                canonical = CanonicalConfig.from_angle(
                    float(c["a"]), float(c["b"]), float(c["l"]), float(c["alpha"])
                )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad canonical object: {exc}") from exc

    segments = []
    for i, pair in enumerate(raw.get("segments", [])):
        try:
            (x0, y0), (x1, y1) = pair
            segments.append(Segment.of((float(x0), float(y0)), (float(x1), float(y1))))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad segment #{i}: {exc}") from exc

    if canonical is None and not segments:
        raise ConfigError("config needs segments or a canonical block")
    return SceneConfig(tuple(segments), grid, tolerances, canonical)


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class ClassificationReport:
    """JSON-safe classification record; encode/decode round-trips losslessly."""

    canonical: dict
    normalized_coefficients: dict
    edge_class: dict
    mirror_class: dict
    predicates: list
    validation: dict

    def to_dict(self) -> dict:
        return {
            "canonical": self.canonical,
            "normalized_coefficients": self.normalized_coefficients,
            "edge_class": self.edge_class,
            "mirror_class": self.mirror_class,
            "predicates": self.predicates,
            "validation": self.validation,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationReport":
        return cls(
            d["canonical"],
            d["normalized_coefficients"],
            d["edge_class"],
            d["mirror_class"],
            d["predicates"],
            d["validation"],
        )

    @classmethod
    def from_json(cls, s: str) -> "ClassificationReport":
        return cls.from_dict(json.loads(s))


def _coeff_list(poly) -> list:
    c = normalize(poly).coeffs
    return [[i, j, float(c[i, j])] for (i, j) in GRLEX_ORDER]


def _edge_class_dict(cls: EdgeClass) -> dict:
    out: dict = {"tag": cls.tag.value}
    out["singularities"] = [
        {"x": sp.location.x, "y": sp.location.y, "kind": sp.kind.value}
        for sp in cls.singularities
    ]
    if cls.factors is not None:
        circle, line = cls.factors
        out["factors"] = {
            "circle": {
                "center_x": circle.center.x,
                "center_y": circle.center.y,
                "radius_sq": circle.radius_sq,
            },
            "line": {"u": line.u, "v": line.v, "w": line.w},
        }
    else:
        out["factors"] = None
    if cls.lines is not None:
        out["lines"] = [{"u": ln.u, "v": ln.v, "w": ln.w} for ln in cls.lines]
    else:
        out["lines"] = None
    if cls.hyperbola is not None:
        h = cls.hyperbola
        out["hyperbola"] = {
            "center_x": h.center.x,
            "center_y": h.center.y,
            "asymptotes": [list(d) for d in h.asymptotes],
            "axes": [list(d) for d in h.axes],
        }
    else:
        out["hyperbola"] = None
    return out


def build_report(curve: EdgeCurve, grid: GridSpec, tol: float, angle_tol: float,
                 containment_tol: float) -> ClassificationReport:
    config = curve.config
    cls = classify_edge(curve, tol)
    mirror_cls = classify_edge(curve.mirrored(), tol)
    s1, s2 = curve.world_segments()
    predicates = [
        {"tag": p.tag.value, "witness": p.witness}
        for p in detect_geometric_degeneracy(s1, s2)
    ]
    try:
        validation = validate_curve(curve, grid, angle_tol, containment_tol).to_dict()
        validation["status"] = "ok"
    except EmptyResult as exc:
        validation = {"status": "empty", "reason": str(exc)}
    return ClassificationReport(
        canonical={
            "a": config.a,
            "b": config.b,
            "l": config.l,
            "sin_alpha": config.sin_alpha,
            "cos_alpha": config.cos_alpha,
        },
        normalized_coefficients={
            "branch": _coeff_list(curve.poly),
            "mirror": _coeff_list(curve.mirror_poly),
        },
        edge_class=_edge_class_dict(cls),
        mirror_class=_edge_class_dict(mirror_cls),
        predicates=predicates,
        validation=validation,
    )


# ---------------------------------------------------------------------------
# commands


def cmd_edge(args) -> int:
    scene = load_scene(args.config)
    if scene.canonical is not None:
        if scene.segments:
            raise ConfigError("give either two segments or a canonical block")
        config = scene.canonical
    else:
        if len(scene.segments) != 2:
            raise ConfigError("edge command needs exactly 2 segments")
        config = canonicalize(scene.segments[0], scene.segments[1])

    curve = build_edge(config)
    tol = float(args.tol if args.tol is not None else scene.tolerances.get("factor", 1e-8))
    angle_tol = float(scene.tolerances.get("angle", 1e-6))
    containment_tol = float(scene.tolerances.get("containment", 1e-5))
    grid = scene.grid or GridSpec.canonical_window(config, 256)

    report = build_report(curve, grid, tol, angle_tol, containment_tol)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)

    if args.svg:
        s1, s2 = curve.world_segments()
        try:
            oracle = extract_bisector(s1, s2, grid)
        except EmptyResult:
            oracle = None
        cls = classify_edge(curve, tol)
        svg = render_edge_scene(
            grid,
            [s1, s2],
            implicit_polylines(normalize(curve.world_poly), grid).polylines,
            implicit_polylines(normalize(curve.mirror_world_poly), grid).polylines,
            oracle,
            cls.singularities,
        )
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


def cmd_diagram(args) -> int:
    scene = load_scene(args.config)
    if len(scene.segments) < 2:
        raise ConfigError("diagram command needs at least 2 segments")
    grid = scene.grid
    if grid is None:
        pts = [(p.x, p.y) for s in scene.segments for p in s.endpoints]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        pad = 0.75 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
        grid = GridSpec(
            min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad, 160, 160
        )
    raster = rasterize_diagram(list(scene.segments), grid)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_diagram(raster, scene.segments))

    labels, counts = np.unique(raster.labels, return_counts=True)
    summary = {
        "sites": len(scene.segments),
        "grid": grid.to_dict(),
        "region_cells": {
            str(int(k)): int(n) for k, n in zip(labels, counts) if k >= 0
        },
        "boundary_cells": int(counts[labels < 0].sum()) if (labels < 0).any() else 0,
        "svg": args.svg,
    }
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = run_all(seed=args.seed, only=args.only)
    except KeyError as exc:
        raise ConfigError(exc.args[0]) from exc
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(
            f"{r.name:<{width}}  {status}  expected: {r.expected}  |  "
            f"observed: {r.observed}  |  max residual: {r.residual:.3e}"
        )
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} scenarios passed")
    return EXIT_OK if not failed else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avd",
        description="Angular Voronoi bisector curves: classify and verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_edge = sub.add_parser("edge", help="classify the bisector of two segments")
    p_edge.add_argument("config", help="JSON scene with exactly 2 segments")
    p_edge.add_argument("--svg", help="write an overlay SVG here")
    p_edge.add_argument("--out", help="write the JSON report here instead of stdout")
    p_edge.add_argument("--tol", type=float, default=None, help="classification tolerance")
    p_edge.set_defaults(fn=cmd_edge)

    p_diag = sub.add_parser("diagram", help="rasterize an n-site angular Voronoi diagram")
    p_diag.add_argument("config", help="JSON scene with >= 2 segments")
    p_diag.add_argument("--svg", required=True, help="write the region SVG here")
    p_diag.set_defaults(fn=cmd_diagram)

    p_ver = sub.add_parser("verify", help="replay the built-in verification scenarios")
    p_ver.add_argument("--only", default=None, help="run a single scenario by name")
    p_ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except IdenticalSegments as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IDENTICAL
    except DegreeOneAnomaly as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ANOMALY


if __name__ == "__main__":
    sys.exit(main())
