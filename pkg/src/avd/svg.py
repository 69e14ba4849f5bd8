"""Deterministic SVG 1.1 rendering for edge scenes and diagram rasters.

Output is plain string assembly with fixed-precision coordinates, so a given
scene always renders byte-identically.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .classify import SingularPoint
from .geometry import Segment
from .oracle import BOUNDARY_LABEL, GridSpec, LabeledRaster, PolyLineSet

#: Fixed region palette, cycled over site indices.
PALETTE = (
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
    "#b07aa1", "#76b7b2", "#edc948", "#ff9da7",
)

CURVE_COLOR = "#1f3a93"
MIRROR_COLOR = "#7f9ec9"
ORACLE_COLOR = "#2e7d32"
SEGMENT_COLOR = "#111111"
SINGULAR_COLOR = "#c62828"

_SIZE = 720.0


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


class _Mapper:
    """World -> SVG pixel coordinates (y axis flipped)."""

    def __init__(self, grid: GridSpec, size: float = _SIZE) -> None:
        self.grid = grid
        spanx = grid.x_max - grid.x_min
        spany = grid.y_max - grid.y_min
        self.width = size
        self.height = size * spany / spanx
        self.sx = self.width / spanx
        self.sy = self.height / spany

    def __call__(self, x: float, y: float) -> tuple[float, float]:
        return (
            (x - self.grid.x_min) * self.sx,
            (self.grid.y_max - y) * self.sy,
        )

    def path(self, points: np.ndarray) -> str:
        coords = [self(px, py) for px, py in points]
        parts = [f"M {_fmt(coords[0][0])} {_fmt(coords[0][1])}"]
        parts += [f"L {_fmt(px)} {_fmt(py)}" for px, py in coords[1:]]
        return " ".join(parts)


def _header(m: _Mapper) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(m.width)}" height="{_fmt(m.height)}" '
        f'viewBox="0 0 {_fmt(m.width)} {_fmt(m.height)}">',
        f'<rect x="0" y="0" width="{_fmt(m.width)}" height="{_fmt(m.height)}" '
        'fill="#ffffff"/>',
    ]


def _polyline_group(
    m: _Mapper,
    polylines: Iterable[np.ndarray],
    color: str,
    width: float,
    dashed: bool = False,
) -> list[str]:
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    out = []
    for pl in polylines:
        if len(pl) < 2:
            continue
        out.append(
            f'<path d="{m.path(pl)}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(width)}"{dash}/>'
        )
    return out


def _segment_group(m: _Mapper, segments: Sequence[Segment]) -> list[str]:
    out = []
    for i, s in enumerate(segments):
        x0, y0 = m(s.e0.x, s.e0.y)
        x1, y1 = m(s.e1.x, s.e1.y)
        out.append(
            f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" '
            f'stroke="{SEGMENT_COLOR}" stroke-width="4" stroke-linecap="round"/>'
        )
        out.append(
            f'<text x="{_fmt(x0 + 6)}" y="{_fmt(y0 - 6)}" font-size="14" '
            f'font-family="monospace" fill="{SEGMENT_COLOR}">s{i + 1}</text>'
        )
    return out


def render_edge_scene(
    grid: GridSpec,
    segments: Sequence[Segment],
    curve_polylines: Iterable[np.ndarray],
    mirror_polylines: Iterable[np.ndarray],
    oracle_polylines: PolyLineSet | None,
    singular_points: Sequence[SingularPoint],
) -> str:
    """Overlay: algebraic curve (stroked, both labeling branches), oracle
    bisector (dashed), the two segments, and singular points labeled by kind.
    Stroke order is fixed: mirror, curve, oracle, segments, markers."""
    m = _Mapper(grid)
    parts = _header(m)
    parts += _polyline_group(m, mirror_polylines, MIRROR_COLOR, 1.4)
    parts += _polyline_group(m, curve_polylines, CURVE_COLOR, 2.2)
    if oracle_polylines is not None:
        parts += _polyline_group(
            m, oracle_polylines.polylines, ORACLE_COLOR, 1.6, dashed=True
        )
    parts += _segment_group(m, segments)
    for sp in singular_points:
        cx, cy = m(sp.location.x, sp.location.y)
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="5" fill="none" '
            f'stroke="{SINGULAR_COLOR}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_fmt(cx + 8)}" y="{_fmt(cy + 4)}" font-size="13" '
            f'font-family="monospace" fill="{SINGULAR_COLOR}">{sp.kind.value}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_diagram(raster: LabeledRaster, segments: Sequence[Segment]) -> str:
    """One fill color per region, horizontal runs merged into single rects,
    boundary cells stroked dark, segments overdrawn."""
    grid = raster.grid
    m = _Mapper(grid)
    xs, ys = grid.xs(), grid.ys()
    parts = _header(m)
    labels = raster.labels
    ny, nx = labels.shape
    cell_w = m.sx * (xs[1] - xs[0])
    cell_h = m.sy * (ys[1] - ys[0])
    for iy in range(ny):
        run_start = 0
        row = labels[iy]
        for ix in range(1, nx + 1):
            if ix < nx and row[ix] == row[run_start]:
                continue
            label = int(row[run_start])
            x0, y0 = m(xs[run_start], ys[iy])
            w = cell_w * (ix - run_start)
            color = (
                "#333333"
                if label == BOUNDARY_LABEL
                else PALETTE[label % len(PALETTE)]
            )
            parts.append(
                f'<rect x="{_fmt(x0 - 0.5 * cell_w)}" y="{_fmt(y0 - 0.5 * cell_h)}" '
                f'width="{_fmt(w)}" height="{_fmt(cell_h)}" fill="{color}"/>'
            )
            run_start = ix
    parts += _segment_group(m, segments)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
