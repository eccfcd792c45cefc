"""Deterministic SVG rendering of degeneration frame sequences.

Each frame shows, per curve: the control polygon with index markers, the
lifted curve at one t, and the limit curve in a distinct dashed style with
a filled dot wherever a piece collapses to a point.  All frames of one run
share a world window so the sequence reads as an animation.  Output bytes
depend only on the inputs.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .degeneration import RegularControlCurve, regular_control_curve
from .documents import SceneDocument
from .geometry import CurveSpec, LiftingFunction, Point, ValidationError, eval_toric_bezier
from .verification import sample_lifted_curve

WIDTH, HEIGHT, MARGIN = 900.0, 600.0, 40.0

PALETTE = ("#1f6fb2", "#c0392b", "#1e8449", "#7d3c98", "#b7770d", "#148f9c")
POLYGON_STYLE = 'fill="none" stroke="#9aa0a6" stroke-width="1" stroke-dasharray="4 3"'
CURVE_STYLE = 'fill="none" stroke="{color}" stroke-width="2"'
LIMIT_STYLE = 'fill="none" stroke="{color}" stroke-width="1.6" stroke-dasharray="7 4" opacity="0.85"'


@dataclass(frozen=True)
class CurveLayers:
    """Everything one curve contributes to a frame, in world coordinates."""

    control_points: tuple[Point, ...]
    curve_samples: list[Point]
    limit_polylines: list[list[Point]]
    limit_dots: list[Point]
    color: str
    label: str


def limit_layers(rcc: RegularControlCurve, piece_samples: int) -> tuple[list[list[Point]], list[Point]]:
    """Per-piece sampled polylines plus the collapse dots of a limit curve."""
    polylines: list[list[Point]] = []
    dots: list[Point] = []
    for cp in rcc.pieces:
        if cp.degenerate or len(cp.bezier.lattice) == 1:
            dots.append(cp.bezier.points[0])
            continue
        a0, am = cp.bezier.domain
        step = (am - a0) / (piece_samples - 1)
        polylines.append(
            [eval_toric_bezier(cp.bezier, min(a0 + k * step, am)) for k in range(piece_samples)]
        )
    return polylines, dots


def _to_2d(q: Point) -> tuple[float, float]:
    return q[0], q[1]


class _Mapper:
    """World-to-viewport transform (uniform scale, y up in world space)."""

    def __init__(self, points: list[Point]):
        xs = [q[0] for q in points]
        ys = [q[1] for q in points]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span_x = max(x1 - x0, 1e-9)
        span_y = max(y1 - y0, 1e-9)
        scale = min((WIDTH - 2 * MARGIN) / span_x, (HEIGHT - 2 * MARGIN) / span_y)
        self.scale = scale
        self.x0 = x0 - (WIDTH / scale - span_x) / 2
        self.y1 = y1 + (HEIGHT / scale - span_y) / 2

    def map(self, q: Point) -> tuple[float, float]:
        return (q[0] - self.x0) * self.scale, (self.y1 - q[1]) * self.scale


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _polyline(points: list[Point], mapper: _Mapper, style: str) -> str:
    coords = " ".join("%s,%s" % tuple(_fmt(c) for c in mapper.map(_to_2d(q))) for q in points)
    return f'<polyline points="{coords}" {style}/>'


def _dot(q: Point, mapper: _Mapper, radius: float, color: str) -> str:
    x, y = mapper.map(_to_2d(q))
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{radius}" fill="{color}"/>'


def render_frame(layers: list[CurveLayers], mapper: _Mapper, t: float) -> str:
    """One SVG document showing every curve's overlays at a single t."""
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:g}" height="{HEIGHT:g}" '
        f'viewBox="0 0 {WIDTH:g} {HEIGHT:g}">',
        f'<rect width="{WIDTH:g}" height="{HEIGHT:g}" fill="white"/>',
        f'<text x="{MARGIN:g}" y="{MARGIN:g}" font-family="monospace" font-size="16">t = {t:g}</text>',
    ]
    for layer in layers:
        parts.append(_polyline(list(layer.control_points), mapper, POLYGON_STYLE))
        for q in layer.control_points:
            parts.append(_dot(q, mapper, 3.0, "#9aa0a6"))
        for poly in layer.limit_polylines:
            parts.append(_polyline(poly, mapper, LIMIT_STYLE.format(color=layer.color)))
        for q in layer.limit_dots:
            parts.append(_dot(q, mapper, 4.0, layer.color))
        parts.append(_polyline(layer.curve_samples, mapper, CURVE_STYLE.format(color=layer.color)))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_frames(
    scene: SceneDocument,
    t_schedule: list[float],
    samples: int,
    out_dir: str,
    piece_samples: int = 100,
) -> dict:
    """Write one SVG per t plus a manifest.json; returns the manifest."""
    schedule = [float(t) for t in t_schedule]
    if not schedule:
        raise ValidationError("t schedule must be nonempty")
    if any(t <= 0.0 for t in schedule):
        raise ValidationError("t values must be positive")
    prepared: list[tuple[CurveSpec, LiftingFunction, RegularControlCurve, str, str]] = []
    for k, doc in enumerate(scene.curves):
        spec = doc.to_spec()
        lifting = doc.lifting_function() or LiftingFunction((0.0,) * len(spec.control_points))
        rcc = regular_control_curve(spec, lifting)
        color = doc.meta.get("color") or PALETTE[k % len(PALETTE)]
        label = doc.meta.get("name") or f"curve {k}"
        prepared.append((spec, lifting, rcc, color, label))

    frames_layers: list[list[CurveLayers]] = []
    world: list[Point] = []
    for t in schedule:
        layers = []
        for spec, lifting, rcc, color, label in prepared:
            curve_samples = sample_lifted_curve(spec, lifting, t, samples)
            polylines, dots = limit_layers(rcc, piece_samples)
            layers.append(
                CurveLayers(
                    control_points=spec.control_points,
                    curve_samples=curve_samples,
                    limit_polylines=polylines,
                    limit_dots=dots,
                    color=color,
                    label=label,
                )
            )
            world.extend(_to_2d(q) for q in spec.control_points)
            world.extend(_to_2d(q) for q in curve_samples)
            for poly in polylines:
                world.extend(_to_2d(q) for q in poly)
        frames_layers.append(layers)

    mapper = _Mapper(world)
    os.makedirs(out_dir, exist_ok=True)
    manifest = {
        "t_schedule": schedule,
        "samples": samples,
        "piece_samples": piece_samples,
        "curves": [layer.label for layer in frames_layers[0]],
        "frames": [],
    }
    for idx, (t, layers) in enumerate(zip(schedule, frames_layers)):
        name = f"frame_{idx:03d}.svg"
        with open(os.path.join(out_dir, name), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(render_frame(layers, mapper, t))
        manifest["frames"].append({"file": name, "t": t})
    with open(os.path.join(out_dir, "manifest.json"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(manifest, indent=2) + "\n")
    return manifest
