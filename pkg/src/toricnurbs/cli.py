"""Command line interface.

Subcommands: eval, decompose, limit, frames, report, serve.  Documents are
JSON files (curve or scene); numeric output uses full double precision so
results can be compared bit-for-bit with the service.
"""

from __future__ import annotations

import argparse
import sys

from .decomposition import nurbs_regular_decomposition
from .degeneration import regular_control_curve
from .documents import (
    CurveDocument,
    DocumentError,
    SceneDocument,
    as_scene,
    load_document,
)
from .geometry import DomainError, LiftingFunction, ValidationError, eval_nurbs_lifted
from .render import render_frames
from .service import DEFAULT_PORT, DEFAULT_SCHEDULE, serve
from .verification import DEFAULT_CURVE_SAMPLES, DEFAULT_TOLERANCE, convergence_report


def _load_curve(path: str) -> CurveDocument:
    doc = load_document(path)
    if isinstance(doc, SceneDocument):
        if len(doc.curves) != 1:
            raise DocumentError("bad_type", "this command needs a single-curve document", "curves")
        return doc.curves[0]
    return doc


def _format_point(q) -> str:
    return " ".join(repr(c) for c in q)


def cmd_eval(args) -> int:
    doc = _load_curve(args.document)
    spec = doc.to_spec()
    lifting = doc.lifting_function() or LiftingFunction((0.0,) * len(spec.control_points))
    for u in args.u:
        print(_format_point(eval_nurbs_lifted(spec, lifting, args.t, u)))
    return 0


def _decomposition_text(nested: list[list[list[int]]]) -> str:
    pieces = []
    for subsets in nested:
        pieces.append("{%s}" % ",".join("{%s}" % ",".join(str(i) for i in s) for s in subsets))
    return " | ".join(pieces)


def cmd_decompose(args) -> int:
    doc = _load_curve(args.document)
    spec = doc.to_spec()
    lifting = doc.require_lifting()
    decomposition = nurbs_regular_decomposition(spec, lifting)
    print(_decomposition_text(decomposition.as_nested_lists()))
    return 0


def cmd_limit(args) -> int:
    doc = _load_curve(args.document)
    spec = doc.to_spec()
    lifting = doc.require_lifting()
    rcc = regular_control_curve(spec, lifting)
    for cp in rcc.pieces:
        subset = "{%s}" % ",".join(str(i) for i in cp.bezier.lattice.indices)
        weights = "(%s)" % ", ".join(repr(w) for w in cp.bezier.weights)
        points = "; ".join(_format_point(q) for q in cp.bezier.points)
        tag = " degenerate" if cp.degenerate else ""
        print(f"piece {cp.piece_index} subset {subset} weights {weights} points [{points}]{tag}")
    return 0


def cmd_frames(args) -> int:
    scene = as_scene(load_document(args.document))
    schedule = args.t if args.t else list(scene.t_schedule or ())
    manifest = render_frames(scene, schedule, args.samples, args.out)
    print(f"wrote {len(manifest['frames'])} frames to {args.out}")
    return 0


def cmd_report(args) -> int:
    doc = _load_curve(args.document)
    spec = doc.to_spec()
    lifting = doc.require_lifting()
    schedule = args.t if args.t else list(DEFAULT_SCHEDULE)
    report = convergence_report(spec, lifting, schedule, samples=args.samples, tol=args.tol)
    for t, d in zip(report.t_values, report.distances):
        print(f"t={t:g} hausdorff={d!r}")
    print(f"diameter={report.diameter!r}")
    print(f"tail_decreasing={'yes' if report.tail_decreasing else 'no'}")
    print(f"converged={'yes' if report.converged else 'no'} (tol={args.tol:g})")
    return 0


def cmd_serve(args) -> int:
    serve(port=args.port, host=args.host)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricnurbs",
        description="Toric degeneration toolkit for NURBS curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a curve at given parameters")
    p.add_argument("document", help="curve document (JSON)")
    p.add_argument("--u", type=float, action="append", required=True, help="parameter in [0,1], repeatable")
    p.add_argument("--t", type=float, default=1.0, help="weight scale parameter (default 1)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("decompose", help="print the regular decomposition, piece by piece")
    p.add_argument("document")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("limit", help="print the limit curve pieces with weights and points")
    p.add_argument("document")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("frames", help="render SVG frames of the degeneration")
    p.add_argument("document", help="curve or scene document (JSON)")
    p.add_argument("--t", type=float, action="append", help="t value, repeatable (default: scene t_schedule)")
    p.add_argument("--samples", type=int, default=DEFAULT_CURVE_SAMPLES)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_frames)

    p = sub.add_parser("report", help="convergence report against the limit curve")
    p.add_argument("document")
    p.add_argument("--t", type=float, action="append", help="t value, repeatable (default: 10,100,1000,10000)")
    p.add_argument("--samples", type=int, default=DEFAULT_CURVE_SAMPLES)
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        where = f" (field: {exc.field})" if exc.field else ""
        print(f"error [{exc.code}]{where}: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
