"""JSON curve and scene documents.

The canonical exchange format for the CLI, the service, and the studio.
A curve document carries degree, knots, points, weights, an optional
lifting array and free-form meta; a scene document is a list of curve
documents with a shared t schedule.  Numbers round-trip exactly: floats
are serialized with their shortest re-readable decimal form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .geometry import CurveSpec, KnotVector, LiftingFunction, Point, ValidationError

CURVE_FIELDS = ("degree", "knots", "points", "weights", "lifting", "meta")


class DocumentError(ValueError):
    """A document failed to parse or validate; carries a machine code."""

    def __init__(self, code: str, message: str, field_name: str | None = None):
        super().__init__(message)
        self.code = code
        self.field = field_name

    def as_json(self) -> dict[str, Any]:
        return {"code": self.code, "message": str(self), "field": self.field}


def _number_list(obj: Any, field_name: str) -> tuple[float, ...]:
    if not isinstance(obj, (list, tuple)):
        raise DocumentError("bad_type", f"{field_name} must be an array of numbers", field_name)
    out = []
    for k, v in enumerate(obj):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise DocumentError("bad_type", f"{field_name}[{k}] must be a number", f"{field_name}[{k}]")
        out.append(float(v))
    return tuple(out)


@dataclass(frozen=True)
class CurveDocument:
    """Validated curve data plus free-form metadata."""

    degree: int
    knots: tuple[float, ...]
    points: tuple[Point, ...]
    weights: tuple[float, ...]
    lifting: tuple[float, ...] | None = None
    meta: dict = field(default_factory=dict)

    def to_spec(self) -> CurveSpec:
        try:
            return CurveSpec(KnotVector(self.knots, self.degree), self.points, self.weights)
        except ValidationError as exc:
            raise DocumentError("invalid_curve", str(exc)) from exc

    def lifting_function(self) -> LiftingFunction | None:
        if self.lifting is None:
            return None
        try:
            lf = LiftingFunction(self.lifting)
            self.to_spec().validate_lifting(lf)
            return lf
        except ValidationError as exc:
            raise DocumentError("invalid_lifting", str(exc), "lifting") from exc

    def require_lifting(self) -> LiftingFunction:
        lf = self.lifting_function()
        if lf is None:
            raise DocumentError("missing_lifting", "this operation needs a lifting array", "lifting")
        return lf

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "degree": self.degree,
            "knots": list(self.knots),
            "points": [list(q) for q in self.points],
            "weights": list(self.weights),
        }
        if self.lifting is not None:
            obj["lifting"] = list(self.lifting)
        if self.meta:
            obj["meta"] = self.meta
        return obj


@dataclass(frozen=True)
class SceneDocument:
    """Several curves rendered together, with a shared t schedule."""

    curves: tuple[CurveDocument, ...]
    t_schedule: tuple[float, ...] | None = None
    meta: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {"curves": [c.to_json_obj() for c in self.curves]}
        if self.t_schedule is not None:
            obj["t_schedule"] = list(self.t_schedule)
        if self.meta:
            obj["meta"] = self.meta
        return obj


def parse_curve_document(obj: Any) -> CurveDocument:
    """Parse one curve object, raising DocumentError on the first defect."""
    if not isinstance(obj, dict):
        raise DocumentError("bad_type", "curve document must be an object")
    for name in ("degree", "knots", "points", "weights"):
        if name not in obj:
            raise DocumentError("missing_field", f"curve document needs '{name}'", name)
    degree = obj["degree"]
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise DocumentError("bad_type", "degree must be an integer", "degree")
    if degree < 1:
        raise DocumentError("invalid_value", "degree must be at least 1", "degree")
    knots = _number_list(obj["knots"], "knots")
    weights = _number_list(obj["weights"], "weights")
    raw_points = obj["points"]
    if not isinstance(raw_points, list):
        raise DocumentError("bad_type", "points must be an array of coordinate arrays", "points")
    points = []
    for k, q in enumerate(raw_points):
        coords = _number_list(q, f"points[{k}]")
        if len(coords) not in (2, 3):
            raise DocumentError("invalid_value", f"points[{k}] must have 2 or 3 coordinates", f"points[{k}]")
        points.append(coords)
    if len(weights) != len(points):
        raise DocumentError(
            "length_mismatch",
            f"{len(weights)} weights for {len(points)} points",
            "weights",
        )
    expected = len(knots) - degree - 1
    if expected != len(points):
        raise DocumentError(
            "length_mismatch",
            f"knot vector implies {expected} control points, document has {len(points)}",
            "points",
        )
    for k, w in enumerate(weights):
        if w <= 0.0:
            raise DocumentError("invalid_value", f"weights[{k}] must be positive", f"weights[{k}]")
    lifting = None
    if obj.get("lifting") is not None:
        lifting = _number_list(obj["lifting"], "lifting")
        if len(lifting) != len(points):
            raise DocumentError(
                "length_mismatch",
                f"{len(lifting)} lifting values for {len(points)} points",
                "lifting",
            )
    meta = obj.get("meta") or {}
    if not isinstance(meta, dict):
        raise DocumentError("bad_type", "meta must be an object", "meta")
    doc = CurveDocument(degree, knots, tuple(points), weights, lifting, meta)
    doc.to_spec()  # surface knot-vector defects (clamping, multiplicity) now
    return doc


def diagnose_curve_document(obj: Any) -> list[dict[str, Any]]:
    """Collect validation diagnostics instead of raising; empty means valid."""
    try:
        parse_curve_document(obj)
        return []
    except DocumentError as exc:
        return [exc.as_json()]


def parse_scene_document(obj: Any) -> SceneDocument:
    """Parse a scene object; a bare curve document becomes a 1-curve scene."""
    if not isinstance(obj, dict):
        raise DocumentError("bad_type", "scene document must be an object")
    if "curves" not in obj:
        return SceneDocument((parse_curve_document(obj),))
    raw = obj["curves"]
    if not isinstance(raw, list) or not raw:
        raise DocumentError("invalid_value", "curves must be a nonempty array", "curves")
    curves = tuple(parse_curve_document(c) for c in raw)
    t_schedule = None
    if obj.get("t_schedule") is not None:
        t_schedule = _number_list(obj["t_schedule"], "t_schedule")
        if any(t <= 0.0 for t in t_schedule):
            raise DocumentError("invalid_value", "t_schedule values must be positive", "t_schedule")
    meta = obj.get("meta") or {}
    if not isinstance(meta, dict):
        raise DocumentError("bad_type", "meta must be an object", "meta")
    return SceneDocument(curves, t_schedule, meta)


def loads_document(text: str) -> CurveDocument | SceneDocument:
    """Parse JSON text into a curve or scene document (auto-detected)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "malformed_json", f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if isinstance(obj, dict) and "curves" in obj:
        return parse_scene_document(obj)
    return parse_curve_document(obj)


def load_document(path: str) -> CurveDocument | SceneDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_document(fh.read())


def dumps_document(doc: CurveDocument | SceneDocument) -> str:
    """Serialize with stable key order; floats keep full precision."""
    return json.dumps(doc.to_json_obj(), indent=2, sort_keys=False) + "\n"


def as_scene(doc: CurveDocument | SceneDocument) -> SceneDocument:
    if isinstance(doc, CurveDocument):
        return SceneDocument((doc,))
    return doc
