"""Numerical convergence checks and self-intersection detection.

The limit statement is set-valued, so distances are measured between point
samples of the two images.  Base densities default to 400 points per curve
and 100 per limit piece; both sets are then refined until adjacent samples
sit closer than a gap cap an order below the default tolerance, so the
sampled Hausdorff distance tracks the set distance rather than artifacts
of either parameterization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .degeneration import regular_control_curve
from .geometry import (
    CurveSpec,
    LiftingFunction,
    Point,
    ValidationError,
    bounding_box_diameter,
    eval_nurbs_lifted,
    eval_toric_bezier,
)
from .refinement import bezier_extract, numeric_weights_points

DEFAULT_CURVE_SAMPLES = 400
DEFAULT_PIECE_SAMPLES = 100
DEFAULT_TOLERANCE = 1e-2

# Gap cap for covering samples, as a fraction of the control-point diameter:
# one order below the default tolerance, so sampling error cannot mask or
# fake convergence.  Uniform parameter sampling alone cannot certify a set
# limit because the parameterization races as the weight ratios grow.
COVER_RESOLUTION = 2e-3
MAX_COVER_POINTS = 20000


@dataclass(frozen=True)
class ConvergenceReport:
    """Hausdorff distances to the limit curve along an ascending t schedule.

    `resolution` is the sampling gap cap: measured distances below it only
    certify "at most the resolution", so comparisons between such values
    carry no information.
    """

    t_values: tuple[float, ...]
    distances: tuple[float, ...]
    diameter: float
    converged: bool
    resolution: float

    @property
    def tail_decreasing(self) -> bool:
        """Whether the last three distances are nonincreasing (up to resolution)."""
        tail = self.distances[-3:]
        return all(b <= max(a, self.resolution) for a, b in zip(tail, tail[1:]))


def hausdorff_distance(set_a: list[Point], set_b: list[Point]) -> float:
    """Symmetric Hausdorff distance between two finite point sets."""
    if not set_a or not set_b:
        raise ValidationError("hausdorff distance needs two nonempty point sets")
    a = np.asarray(set_a, dtype=float)
    b = np.asarray(set_b, dtype=float)
    if a.shape[1] != b.shape[1]:
        raise ValidationError("point sets must share one dimension")
    tree_a = cKDTree(a)
    tree_b = cKDTree(b)
    return float(max(tree_b.query(a)[0].max(), tree_a.query(b)[0].max()))


def sample_lifted_curve(spec: CurveSpec, lifting: LiftingFunction, t: float, samples: int) -> list[Point]:
    """Uniform parameter samples of the curve with weights t^lift(i) * w_i."""
    if samples < 2:
        raise ValidationError("need at least 2 samples")
    return [eval_nurbs_lifted(spec, lifting, t, k / (samples - 1)) for k in range(samples)]


def _subdivide_cover(evaluate, params: list[float], gap_cap: float, max_points: int) -> list[Point]:
    """Midpoint-refine a parameter grid until adjacent samples are gap-capped.

    Subdivision of an interval stops only when no representable midpoint is
    left; rational curves are continuous, so every spatial gap wider than
    the cap is eventually split as long as the point budget lasts.
    """
    work = [(u, evaluate(u)) for u in params]
    i = 0
    while i < len(work) - 1 and len(work) < max_points:
        (u0, p0), (u1, p1) = work[i], work[i + 1]
        mid = 0.5 * (u0 + u1)
        if math.dist(p0, p1) > gap_cap and u0 < mid < u1:
            work.insert(i + 1, (mid, evaluate(mid)))
        else:
            i += 1
    return [p for _, p in work]


def cover_lifted_curve(
    spec: CurveSpec, lifting: LiftingFunction, t: float, samples: int, gap_cap: float
) -> list[Point]:
    """Samples of the lifted curve forming a gap_cap-cover of its image."""
    base = [k / (samples - 1) for k in range(samples)]
    return _subdivide_cover(lambda u: eval_nurbs_lifted(spec, lifting, t, u), base, gap_cap, MAX_COVER_POINTS)


def cover_regular_control_curve(rcc, piece_samples: int, gap_cap: float) -> list[Point]:
    """Samples of the limit curve forming a gap_cap-cover of its image."""
    out: list[Point] = []
    for cp in rcc.pieces:
        if cp.degenerate or len(cp.bezier.lattice) == 1:
            out.append(cp.bezier.points[0])
            continue
        a0, am = cp.bezier.domain
        base = [a0 + k * (am - a0) / (piece_samples - 1) for k in range(piece_samples)]
        out.extend(_subdivide_cover(lambda x: eval_toric_bezier(cp.bezier, x), base, gap_cap, MAX_COVER_POINTS))
    return out


def _split_homogeneous(h):
    """De Casteljau split of homogeneous Bezier control vectors at 1/2."""
    left = [h[0]]
    right = [h[-1]]
    cur = list(h)
    while len(cur) > 1:
        cur = [tuple(0.5 * (x + y) for x, y in zip(a, b)) for a, b in zip(cur, cur[1:])]
        left.append(cur[0])
        right.append(cur[-1])
    right.reverse()
    return left, right


def _homogeneous_cover(weights, points, gap_cap: float, budget: int = 8000) -> list[Point]:
    """Image cover of a rational Bezier piece given by weights and points.

    Adaptive subdivision in homogeneous coordinates walks the image itself,
    so arcs the parameterization races through (weight ratios beyond 1/eps)
    are still emitted.  Leaf segment endpoints are exact curve points; a
    leaf is accepted once its projected control polygon fits the gap cap.
    """
    top = max(weights)
    h0 = [
        tuple(c / top for c in (w,) + tuple(w * x for x in q))
        for w, q in zip(weights, points)
    ]
    out: list[Point] = []
    stack = [(h0, 0)]
    while stack and len(out) < budget:
        h, depth = stack.pop()
        proj = [tuple(c / v[0] for c in v[1:]) for v in h]
        diam = max(math.dist(a, b) for a in proj for b in proj)
        if diam <= gap_cap or depth >= 64:
            out.append(proj[0])
            out.append(proj[-1])
            continue
        left, right = _split_homogeneous(h)
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    return out


class MatchedSampler:
    """Evaluate the lifted curve and its limit on one shared toric axis.

    The refined lattice axis [0, pieces*p] parameterizes both: a subset's
    toric piece covers its cell directly, and the curve is reached through
    the affine map between the cell's piece and its knot span.  Sharing the
    grid makes the two sample sets literal twins whenever the curve already
    equals its limit (constant lifting), so measured distances reflect the
    geometry rather than the sampling.  Where grid subdivision bottoms out
    on the parameter axis (weight ratios near 1/eps leave whole arcs
    between adjacent representable parameters), the affected pieces are
    re-covered by homogeneous subdivision, which is parameterization-free.
    """

    def __init__(self, spec: CurveSpec, lifting: LiftingFunction, rcc):
        self.spec = spec
        self.lifting = lifting
        self.degree = spec.degree
        self.breaks = spec.knot_vector.breakpoints
        self.cells = [(cp.bezier.domain[0], cp.bezier.domain[1], cp.bezier) for cp in rcc.pieces]
        self.axis_end = self.cells[-1][1]
        self.pieces = bezier_extract(spec)

    def limit_at(self, x: float) -> Point:
        lo, hi = 0, len(self.cells) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.cells[mid][0] <= x:
                lo = mid
            else:
                hi = mid - 1
        x0, x1, bez = self.cells[lo]
        return eval_toric_bezier(bez, min(max(x, x0), x1))

    def curve_at(self, x: float, t: float) -> Point:
        p = self.degree
        m = min(int(x // p), len(self.breaks) - 2)
        lo, hi = self.breaks[m], self.breaks[m + 1]
        u = min(lo + (x / p - m) * (hi - lo), 1.0)
        return eval_nurbs_lifted(self.spec, self.lifting, t, u)

    def base_grid(self, samples: int, piece_samples: int) -> list[float]:
        xs = {k * self.axis_end / (samples - 1) for k in range(samples)}
        for x0, x1, _ in self.cells:
            if x1 > x0:
                xs.update(x0 + k * (x1 - x0) / (piece_samples - 1) for k in range(piece_samples))
            else:
                xs.add(x0)
        return sorted(xs)

    def covers(
        self, t: float, samples: int, piece_samples: int, gap_cap: float
    ) -> tuple[list[Point], list[Point]]:
        """Matched gap_cap-covers of the curve at t and of the limit curve."""
        grid = self.base_grid(samples, piece_samples)
        work = [(x, self.curve_at(x, t), self.limit_at(x)) for x in grid]
        i = 0
        while i < len(work) - 1 and len(work) < MAX_COVER_POINTS:
            (x0, c0, l0), (x1, c1, l1) = work[i], work[i + 1]
            mid = 0.5 * (x0 + x1)
            if (math.dist(c0, c1) > gap_cap or math.dist(l0, l1) > gap_cap) and x0 < mid < x1:
                work.insert(i + 1, (mid, self.curve_at(mid, t), self.limit_at(mid)))
            else:
                i += 1
        curve_pts = [c for _, c, _ in work]
        limit_pts = [l for _, _, l in work]
        # pieces whose curve-side gaps survived (parameter axis exhausted)
        stalled: set[int] = set()
        for (x0, c0, _), (_, c1, _) in zip(work, work[1:]):
            if math.dist(c0, c1) > gap_cap:
                stalled.add(min(int(x0 // self.degree), len(self.pieces) - 1))
        for m in sorted(stalled):
            ws, ps = numeric_weights_points(self.pieces[m], self.spec.weights, self.lifting, t)
            curve_pts.extend(_homogeneous_cover(ws, ps, 0.5 * gap_cap))
        return curve_pts, limit_pts


def convergence_report(
    spec: CurveSpec,
    lifting: LiftingFunction,
    t_schedule: list[float],
    samples: int = DEFAULT_CURVE_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    piece_samples: int = DEFAULT_PIECE_SAMPLES,
) -> ConvergenceReport:
    """Measure how the lifted curve approaches its limit along a t schedule."""
    schedule = [float(t) for t in t_schedule]
    if len(schedule) < 3:
        raise ValidationError("t schedule needs at least 3 entries")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValidationError("t schedule must be strictly ascending")
    if schedule[0] <= 0.0:
        raise ValidationError("t values must be positive")
    diameter = bounding_box_diameter(spec.control_points)
    gap_cap = COVER_RESOLUTION * max(diameter, 1e-12)
    rcc = regular_control_curve(spec, lifting)
    sampler = MatchedSampler(spec, lifting, rcc)
    distances = []
    for t in schedule:
        curve_pts, limit_pts = sampler.covers(t, samples, piece_samples, gap_cap)
        distances.append(hausdorff_distance(curve_pts, limit_pts))
    distances = tuple(distances)
    return ConvergenceReport(
        t_values=tuple(schedule),
        distances=distances,
        diameter=diameter,
        converged=distances[-1] <= tol * diameter,
        resolution=gap_cap,
    )


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _proper_crossing(p1: Point, p2: Point, q1: Point, q2: Point) -> Point | None:
    """Intersection point of two segments if they cross transversally."""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if ((d1 > 0.0) != (d2 > 0.0)) and ((d3 > 0.0) != (d4 > 0.0)) and d1 != 0.0 and d2 != 0.0 and d3 != 0.0 and d4 != 0.0:
        s = d1 / (d1 - d2)
        return (p1[0] + s * (p2[0] - p1[0]), p1[1] + s * (p2[1] - p1[1]))
    return None


def self_intersections(polyline: list[Point]) -> list[tuple[tuple[int, int], Point]]:
    """Transversal crossings between nonadjacent segments of a planar polyline.

    All-pairs with an axis-aligned bounding-box prefilter; each crossing is
    reported once as ((i, j), point) with i < j - 1.
    """
    if len(polyline) < 4:
        raise ValidationError("self-intersection test needs at least 4 points")
    if any(len(q) != 2 for q in polyline):
        raise ValidationError("self-intersection test expects a planar polyline")
    segs = list(zip(polyline, polyline[1:]))
    boxes = [
        (min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]))
        for a, b in segs
    ]
    hits = []
    for i in range(len(segs)):
        xi0, xi1, yi0, yi1 = boxes[i]
        for j in range(i + 2, len(segs)):
            xj0, xj1, yj0, yj1 = boxes[j]
            if xj0 > xi1 or xi0 > xj1 or yj0 > yi1 or yi0 > yj1:
                continue
            pt = _proper_crossing(*segs[i], *segs[j])
            if pt is not None:
                hits.append(((i, j), pt))
    return hits
