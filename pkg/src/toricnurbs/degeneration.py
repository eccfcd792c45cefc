"""Limits of refined control data as t -> infinity and the limit curve.

Each refined control point is a convex combination over original indices;
as t grows, only the indices with the largest lift survive.  Restricting
the limit weights and points to each subset of the regular decomposition
yields toric Bezier pieces whose union is the curve's limit shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .decomposition import NurbsRegularDecomposition, decompose_pieces
from .geometry import (
    CurveSpec,
    LiftingFunction,
    Point,
    ToricBezierPiece,
    ValidationError,
    bounding_box_diameter,
    eval_toric_bezier,
)
from .refinement import SupportCombination, bezier_extract

# Lift values within this slack of the maximum all enter the argmax set,
# mirroring the on-edge tolerance of the hull step.
ARGMAX_TOL = 1e-9


@dataclass(frozen=True)
class LimitElement:
    """Limit of one refined control point: where it lands and its weight."""

    point: Point
    weight: float
    source_support: tuple[int, ...]

    def __post_init__(self):
        if self.weight <= 0.0 or not math.isfinite(self.weight):
            raise ValidationError("limit weight must be positive and finite")


@dataclass(frozen=True)
class ControlCurvePiece:
    """One subset's toric Bezier piece inside the limit curve."""

    piece_index: int
    subset_index: int
    bezier: ToricBezierPiece
    degenerate: bool


@dataclass(frozen=True)
class RegularControlCurve:
    """Ordered toric Bezier pieces forming the t -> infinity limit curve."""

    pieces: tuple[ControlCurvePiece, ...]
    elements: tuple[LimitElement, ...]
    decomposition: NurbsRegularDecomposition


def limit_element(
    combo: SupportCombination,
    lifting: LiftingFunction,
    weights: tuple[float, ...],
    points: tuple[Point, ...],
) -> LimitElement:
    """Collapse a combination onto its argmax-lift indices.

    weight = sum over the argmax set of f_i * w_i; the point is the matching
    weighted average.  A single surviving index returns its control point
    exactly.
    """
    top = max(lifting.values[i] for i, _ in combo.entries)
    psi = tuple(i for i, _ in combo.entries if lifting.values[i] >= top - ARGMAX_TOL)
    if len(psi) == 1:
        i = psi[0]
        return LimitElement(points[i], combo.coefficient(i) * weights[i], psi)
    dim = len(points[0])
    acc_w = 0.0
    acc_p = [0.0] * dim
    for i in psi:
        term = combo.coefficient(i) * weights[i]
        acc_w += term
        for k in range(dim):
            acc_p[k] += term * points[i][k]
    return LimitElement(tuple(c / acc_w for c in acc_p), acc_w, psi)


def regular_control_curve(spec: CurveSpec, lifting: LiftingFunction) -> RegularControlCurve:
    """Assemble the limit curve of the lifted weight family.

    For every subset of the per-piece regular decomposition, a toric Bezier
    piece is built from the limit weights and points at its refined indices,
    with binomial basis coefficients over the subset hull.  Pieces whose
    limit points all coincide are kept but flagged degenerate.
    """
    spec.validate_lifting(lifting)
    p = spec.degree
    pieces = bezier_extract(spec)
    decomposition = decompose_pieces(pieces, lifting)
    elements: dict[int, LimitElement] = {}
    for piece in pieces:
        for idx, combo in zip(piece.lattice, piece.combos):
            if idx not in elements:
                elements[idx] = limit_element(combo, lifting, spec.weights, spec.control_points)
    collapse_tol = 1e-9 * spec.diameter
    out: list[ControlCurvePiece] = []
    for (m, decomp), piece in zip(decomposition.per_piece, pieces):
        for j, subset in enumerate(decomp.subsets):
            elems = [elements[i] for i in subset]
            # basis coefficients: the piece's own Bernstein binomials
            # restricted to the subset.  The degeneration substitution
            # v/(1-v) -> y/t^slope keeps these ambient coefficients on the
            # surviving terms, so any other normalization (in particular
            # binomials over the subset hull) converges to a different
            # conic whenever the subset is narrower than its piece.
            bezier = ToricBezierPiece(
                lattice=subset,
                coeffs=tuple(float(math.comb(p, a - (m - 1) * p)) for a in subset),
                weights=tuple(e.weight for e in elems),
                points=tuple(e.point for e in elems),
            )
            first = elems[0].point
            degenerate = all(
                math.dist(e.point, first) <= collapse_tol for e in elems[1:]
            )
            out.append(ControlCurvePiece(m, j, bezier, degenerate))
    all_indices = sorted(elements)
    return RegularControlCurve(
        pieces=tuple(out),
        elements=tuple(elements[i] for i in all_indices),
        decomposition=decomposition,
    )


def sample_regular_control_curve(rcc: RegularControlCurve, samples_per_piece: int) -> list[Point]:
    """Ordered sample points along the limit curve.

    Nondegenerate pieces get uniform parameter samples over their hull;
    degenerate pieces contribute their single collapse point.  Repeated
    points at shared piece endpoints are dropped.
    """
    if samples_per_piece < 2:
        raise ValidationError("need at least 2 samples per piece")
    all_points = [e.point for e in rcc.elements]
    dedup_tol = 1e-12 * (1.0 + bounding_box_diameter(all_points))
    out: list[Point] = []
    for cp in rcc.pieces:
        if cp.degenerate or len(cp.bezier.lattice) == 1:
            batch = [cp.bezier.points[0]]
        else:
            a0, am = cp.bezier.domain
            step = (am - a0) / (samples_per_piece - 1)
            batch = [
                eval_toric_bezier(cp.bezier, min(a0 + k * step, am))
                for k in range(samples_per_piece)
            ]
        for q in batch:
            if out and math.dist(out[-1], q) <= dedup_tol:
                continue
            out.append(q)
    return out
