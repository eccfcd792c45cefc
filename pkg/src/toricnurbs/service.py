"""Stateless JSON-over-HTTP service for the curve engine.

Documents travel in each request body, so the server keeps no state and
every request can be handled concurrently.  Endpoints:

    POST /validate   curve document -> {valid, diagnostics}
    POST /sample     ?t=&count=     -> sampled points of the lifted curve
    POST /decompose                 -> per-piece regular decomposition
    POST /limit      ?samples=      -> limit curve pieces (+ samples)
    POST /report     ?samples=&tol= -> convergence report (t_schedule in body)
    GET  /health                    -> liveness probe

Errors use a structured body {code, message, field}.  CORS is wide open so
the browser studio can call the service from any origin.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .decomposition import nurbs_regular_decomposition
from .degeneration import regular_control_curve
from .documents import (
    DocumentError,
    diagnose_curve_document,
    parse_curve_document,
)
from .geometry import LiftingFunction, ValidationError, eval_toric_bezier
from .verification import (
    DEFAULT_CURVE_SAMPLES,
    DEFAULT_TOLERANCE,
    convergence_report,
    sample_lifted_curve,
)

DEFAULT_PORT = 7878
DEFAULT_SCHEDULE = (10.0, 100.0, 1000.0, 10000.0)


def _query_float(params, name: str, default: float) -> float:
    if name not in params:
        return default
    try:
        return float(params[name][0])
    except ValueError as exc:
        raise DocumentError("bad_query", f"query parameter '{name}' must be a number", name) from exc


def _query_int(params, name: str, default: int | None) -> int | None:
    if name not in params:
        return default
    try:
        return int(params[name][0])
    except ValueError as exc:
        raise DocumentError("bad_query", f"query parameter '{name}' must be an integer", name) from exc


def _spec_and_lifting(obj, required: bool):
    doc = parse_curve_document(obj)
    spec = doc.to_spec()
    lifting = doc.require_lifting() if required else doc.lifting_function()
    if lifting is None:
        lifting = LiftingFunction((0.0,) * len(spec.control_points))
    return doc, spec, lifting


def handle_validate(obj, params) -> dict:
    diagnostics = diagnose_curve_document(obj)
    if diagnostics:
        return {"valid": False, "diagnostics": diagnostics}
    doc = parse_curve_document(obj)
    spec = doc.to_spec()
    return {
        "valid": True,
        "diagnostics": [],
        "degree": spec.degree,
        "dimension": spec.dimension,
        "control_points": len(spec.control_points),
        "pieces": len(spec.knot_vector.breakpoints) - 1,
        "has_lifting": doc.lifting is not None,
    }


def handle_sample(obj, params) -> dict:
    _, spec, lifting = _spec_and_lifting(obj, required=False)
    t = _query_float(params, "t", 1.0)
    count = _query_int(params, "count", DEFAULT_CURVE_SAMPLES)
    if t <= 0.0:
        raise DocumentError("bad_query", "t must be positive", "t")
    if count < 2:
        raise DocumentError("bad_query", "count must be at least 2", "count")
    points = sample_lifted_curve(spec, lifting, t, count)
    return {"t": t, "count": count, "points": [list(q) for q in points]}


def handle_decompose(obj, params) -> dict:
    _, spec, lifting = _spec_and_lifting(obj, required=True)
    decomposition = nurbs_regular_decomposition(spec, lifting)
    pieces = []
    for m, decomp in decomposition.per_piece:
        pieces.append(
            {
                "piece": m,
                "subsets": decomp.as_index_lists(),
                "cells": [list(c) for c in decomp.domain_cells],
            }
        )
    return {"pieces": pieces}


def handle_limit(obj, params) -> dict:
    _, spec, lifting = _spec_and_lifting(obj, required=True)
    samples = _query_int(params, "samples", None)
    if samples is not None and samples < 2:
        raise DocumentError("bad_query", "samples must be at least 2", "samples")
    rcc = regular_control_curve(spec, lifting)
    pieces = []
    for cp in rcc.pieces:
        entry = {
            "piece": cp.piece_index,
            "subset": list(cp.bezier.lattice.indices),
            "weights": list(cp.bezier.weights),
            "points": [list(q) for q in cp.bezier.points],
            "coeffs": list(cp.bezier.coeffs),
            "degenerate": cp.degenerate,
        }
        if samples is not None:
            if cp.degenerate or len(cp.bezier.lattice) == 1:
                entry["samples"] = [list(cp.bezier.points[0])]
            else:
                a0, am = cp.bezier.domain
                step = (am - a0) / (samples - 1)
                entry["samples"] = [
                    list(eval_toric_bezier(cp.bezier, min(a0 + k * step, am)))
                    for k in range(samples)
                ]
        pieces.append(entry)
    return {"pieces": pieces}


def handle_report(obj, params) -> dict:
    if isinstance(obj, dict) and obj.get("t_schedule") is not None:
        schedule = obj["t_schedule"]
        obj = {k: v for k, v in obj.items() if k != "t_schedule"}
    else:
        schedule = list(DEFAULT_SCHEDULE)
    _, spec, lifting = _spec_and_lifting(obj, required=True)
    samples = _query_int(params, "samples", DEFAULT_CURVE_SAMPLES)
    tol = _query_float(params, "tol", DEFAULT_TOLERANCE)
    try:
        report = convergence_report(spec, lifting, schedule, samples=samples, tol=tol)
    except ValidationError as exc:
        raise DocumentError("invalid_schedule", str(exc), "t_schedule") from exc
    return {
        "t_values": list(report.t_values),
        "distances": list(report.distances),
        "diameter": report.diameter,
        "converged": report.converged,
        "tail_decreasing": report.tail_decreasing,
        "tolerance": tol,
        "resolution": report.resolution,
    }


ROUTES = {
    "/validate": handle_validate,
    "/sample": handle_sample,
    "/decompose": handle_decompose,
    "/limit": handle_limit,
    "/report": handle_report,
}


class EngineRequestHandler(BaseHTTPRequestHandler):
    server_version = "toricnurbs/0.1"
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # default stderr chatter off
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        path = urlsplit(self.path).path
        if path == "/health":
            self._send_json(200, {"status": "ok"})
        else:
            self._send_json(404, {"code": "not_found", "message": f"no endpoint {path}", "field": None})

    def do_POST(self):
        split = urlsplit(self.path)
        handler = ROUTES.get(split.path)
        if handler is None:
            self._send_json(404, {"code": "not_found", "message": f"no endpoint {split.path}", "field": None})
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length)
            try:
                obj = json.loads(raw.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                raise DocumentError("malformed_json", f"request body is not valid JSON: {exc}") from exc
            params = parse_qs(split.query)
            self._send_json(200, handler(obj, params))
        except DocumentError as exc:
            self._send_json(400, exc.as_json())
        except (ValidationError, ValueError) as exc:
            self._send_json(400, {"code": "invalid_input", "message": str(exc), "field": None})
        except Exception as exc:  # pragma: no cover
            self._send_json(500, {"code": "internal_error", "message": str(exc), "field": None})


def create_server(port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Bind the service; port 0 picks a free ephemeral port."""
    server = ThreadingHTTPServer((host, port), EngineRequestHandler)
    server.daemon_threads = True
    return server


def serve(port: int = DEFAULT_PORT, host: str = "127.0.0.1", verbose: bool = True) -> None:
    """Run the service until interrupted."""
    server = create_server(port, host)
    server.verbose = verbose
    actual = server.server_address[1]
    if verbose:
        print(f"toricnurbs service listening on http://{host}:{actual}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
