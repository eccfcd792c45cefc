"""Boehm knot insertion with coefficient provenance.

Insertion is performed on symbolic convex combinations over the original
control indices rather than on numeric points: each refined control point
is stored as a stochastic coefficient vector f over a contiguous range of
original indices.  The insertion weights alpha depend only on the knots,
so the provenance is exact and the same extraction serves every numeric
weight assignment, including weights parameterized as t^lift(i) * w_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    CurveSpec,
    DomainError,
    KnotVector,
    LatticeSet,
    LiftingFunction,
    Point,
    ValidationError,
)

# Entries below this size are insertion noise; dropping them keeps supports
# minimal so argmax-based limits never see spurious indices.
PRUNE_TOL = 1e-14


class KnotInsertionError(ValueError):
    """Requested insertion is not allowed on this knot vector."""


@dataclass(frozen=True)
class SupportCombination:
    """Convex combination sum_i f_i * (original term i) over a contiguous range.

    The coefficients are nonnegative and sum to 1 (within 1e-12).
    """

    entries: tuple[tuple[int, float], ...]

    def __post_init__(self):
        entries = tuple(sorted((int(i), float(f)) for i, f in self.entries))
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValidationError("support combination must be nonempty")
        idx = [i for i, _ in entries]
        if idx != list(range(idx[0], idx[-1] + 1)):
            raise ValidationError(f"support must be a contiguous index range, got {idx}")
        if any(f < 0.0 for _, f in entries):
            raise ValidationError("combination coefficients must be nonnegative")
        if abs(sum(f for _, f in entries) - 1.0) > 1e-12:
            raise ValidationError("combination coefficients must sum to 1")

    @classmethod
    def singleton(cls, i: int) -> "SupportCombination":
        return cls(((i, 1.0),))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def coefficient(self, i: int) -> float:
        for j, f in self.entries:
            if j == i:
                return f
        return 0.0

    def as_dict(self) -> dict[int, float]:
        return dict(self.entries)


def mix_combinations(a: SupportCombination, b: SupportCombination, alpha: float) -> SupportCombination:
    """(1 - alpha) * a + alpha * b, pruned and renormalized."""
    merged: dict[int, float] = {}
    for i, f in a.entries:
        merged[i] = merged.get(i, 0.0) + (1.0 - alpha) * f
    for i, f in b.entries:
        merged[i] = merged.get(i, 0.0) + alpha * f
    kept = {i: f for i, f in merged.items() if f >= PRUNE_TOL}
    total = sum(kept.values())
    return SupportCombination(tuple((i, f / total) for i, f in kept.items()))


@dataclass(frozen=True)
class RefinedCurve:
    """A curve after some knot insertions, with per-point provenance.

    Evaluating the refined curve with any fixed numeric weights reproduces
    the source curve; the boundary combinations stay singletons on the
    first and last original index.
    """

    knot_vector: KnotVector
    combos: tuple[SupportCombination, ...]
    source: CurveSpec

    def __post_init__(self):
        if len(self.combos) != self.knot_vector.num_control:
            raise ValidationError("one combination required per refined control point")

    @classmethod
    def initial(cls, spec: CurveSpec) -> "RefinedCurve":
        combos = tuple(SupportCombination.singleton(i) for i in range(len(spec.control_points)))
        return cls(spec.knot_vector, combos, spec)


@dataclass(frozen=True)
class BezierPieceExtract:
    """One extracted Bezier piece: p+1 combinations over refined lattice indices.

    Piece m covers the refined lattice {(m-1)p, ..., mp} and the knot
    interval between consecutive distinct breakpoints; adjacent pieces
    share their boundary combination.
    """

    piece_index: int
    lattice: LatticeSet
    combos: tuple[SupportCombination, ...]
    knot_domain: tuple[float, float]
    source: CurveSpec

    @property
    def domain(self) -> tuple[float, float]:
        a0, am = self.lattice.hull
        return float(a0), float(am)


def insert_knot(state: RefinedCurve, u_new: float) -> RefinedCurve:
    """Insert one knot by Boehm's rule, blending the provenance combinations.

    new_i = (1 - alpha_i) * old_{i-1} + alpha_i * old_i with
    alpha_i = (u_new - u_i) / (u_{i+p} - u_i) on the affected band.
    """
    u_new = float(u_new)
    if not 0.0 < u_new < 1.0:
        raise KnotInsertionError(f"can only insert strictly inside (0, 1), got {u_new}")
    kv = state.knot_vector
    p, U = kv.degree, kv.knots
    mult = kv.multiplicity(u_new)
    if mult + 1 > p:
        raise KnotInsertionError(f"inserting {u_new} would raise its multiplicity past the degree {p}")
    k = kv.find_span(u_new)
    old = state.combos
    combos: list[SupportCombination] = list(old[: k - p + 1])
    for i in range(k - p + 1, k - mult + 1):
        alpha = (u_new - U[i]) / (U[i + p] - U[i])
        combos.append(mix_combinations(old[i - 1], old[i], alpha))
    combos.extend(old[k - mult :])
    new_knots = U[: k + 1] + (u_new,) + U[k + 1 :]
    return RefinedCurve(KnotVector(new_knots, p), tuple(combos), state.source)


def full_refinement(spec: CurveSpec, order: list[float] | None = None) -> RefinedCurve:
    """Raise every distinct interior knot to multiplicity p.

    `order` optionally fixes the insertion sequence (values, with
    repetitions); the result is independent of it.
    """
    state = RefinedCurve.initial(spec)
    p = spec.degree
    existing = set(spec.knot_vector.distinct_interior)
    if order is None:
        order = []
        for u in spec.knot_vector.distinct_interior:
            order.extend([u] * (p - spec.knot_vector.multiplicity(u)))
    elif any(u not in existing for u in order):
        raise KnotInsertionError("insertion order may only repeat existing interior knots")
    for u in order:
        state = insert_knot(state, u)
    for u in state.knot_vector.distinct_interior:
        if state.knot_vector.multiplicity(u) != p:
            raise KnotInsertionError(f"insertion order left knot {u} below multiplicity {p}")
    return state


def bezier_extract(spec: CurveSpec, order: list[float] | None = None) -> list[BezierPieceExtract]:
    """Split the curve into rational Bezier pieces with provenance.

    Returns one piece per breakpoint interval (number of distinct interior
    knots + 1), in parameter order.
    """
    state = full_refinement(spec, order)
    p = spec.degree
    breaks = spec.knot_vector.breakpoints
    pieces = []
    for m in range(1, len(breaks)):
        lo = (m - 1) * p
        lattice = LatticeSet(tuple(range(lo, lo + p + 1)))
        pieces.append(
            BezierPieceExtract(
                piece_index=m,
                lattice=lattice,
                combos=state.combos[lo : lo + p + 1],
                knot_domain=(breaks[m - 1], breaks[m]),
                source=spec,
            )
        )
    return pieces


def numeric_weights_points(
    piece: BezierPieceExtract,
    weights: tuple[float, ...],
    lifting: LiftingFunction,
    t: float,
) -> tuple[tuple[float, ...], tuple[Point, ...]]:
    """Instantiate a piece's combinations at concrete weights t^lift(i) * w_i.

    weight_j = sum_i f_i t^lift(i) w_i and point_j is the matching weighted
    average of the source control points.  At t = 1 this is the classical
    rational Bezier extraction of the unlifted curve.
    """
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"scale parameter t must be positive, got {t}")
    points = piece.source.control_points
    dim = len(points[0])
    out_w = []
    out_p = []
    for combo in piece.combos:
        acc_w = 0.0
        acc_p = [0.0] * dim
        for i, f in combo.entries:
            term = f * t ** lifting.values[i] * weights[i]
            acc_w += term
            q = points[i]
            for k in range(dim):
                acc_p[k] += term * q[k]
        out_w.append(acc_w)
        out_p.append(tuple(c / acc_w for c in acc_p))
    return tuple(out_w), tuple(out_p)


def support_exponent(combo: SupportCombination, lifting: LiftingFunction) -> float:
    """Largest lift value over the combination's support."""
    return max(lifting.values[i] for i, _ in combo.entries)
