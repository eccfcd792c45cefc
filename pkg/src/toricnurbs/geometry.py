"""Core curve types and evaluators.

Value types for clamped NURBS curves over an integer lattice, lifting
functions that assign a weight growth exponent per control index, and
toric Bezier pieces over arbitrary (possibly gappy) 1-D lattice subsets.
All types are immutable after construction and every operation is a pure
function, so concurrent reads are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, ...]


class ValidationError(ValueError):
    """A constructor invariant or operation precondition was violated."""


class DomainError(ValueError):
    """A parameter lies outside the curve's domain."""


class DegenerateError(ValueError):
    """Input too degenerate to carry the requested geometry."""


def as_point(coords) -> Point:
    """Coerce to a 2-D or 3-D point with finite coordinates."""
    pt = tuple(float(c) for c in coords)
    if len(pt) not in (2, 3):
        raise ValidationError(f"points must be 2-D or 3-D, got {len(pt)} coordinates")
    if not all(math.isfinite(c) for c in pt):
        raise ValidationError(f"point has non-finite coordinate: {pt}")
    return pt


def bounding_box_diameter(points) -> float:
    """Diagonal length of the axis-aligned bounding box of a point set."""
    if not points:
        raise ValidationError("empty point set has no bounding box")
    dim = len(points[0])
    spans = (max(p[k] for p in points) - min(p[k] for p in points) for k in range(dim))
    return math.sqrt(sum(s * s for s in spans))


@dataclass(frozen=True)
class KnotVector:
    """Clamped, nondecreasing knot sequence on [0, 1] for degree p >= 1.

    The first and last knot each repeat p+1 times, interior knots have
    multiplicity at most p, and the length is n + 2p + 1 for n >= 1
    polynomial segments.
    """

    knots: tuple[float, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "knots", tuple(float(u) for u in self.knots))
        p, U = self.degree, self.knots
        if p < 1:
            raise ValidationError("degree must be at least 1")
        if len(U) < 2 * p + 2:
            raise ValidationError(f"need at least {2 * p + 2} knots for degree {p}")
        if any(b < a for a, b in zip(U, U[1:])):
            raise ValidationError("knots must be nondecreasing")
        if any(U[i] != 0.0 for i in range(p + 1)) or any(U[-i - 1] != 1.0 for i in range(p + 1)):
            raise ValidationError("knot vector must be clamped: first/last knot repeated degree+1 times")
        interior = U[p + 1 : len(U) - p - 1]
        if any(not 0.0 < u < 1.0 for u in interior):
            raise ValidationError("interior knots must lie strictly inside (0, 1)")
        for u in set(interior):
            if interior.count(u) > p:
                raise ValidationError(f"interior knot {u} has multiplicity > degree")

    @property
    def num_control(self) -> int:
        return len(self.knots) - self.degree - 1

    @property
    def segments(self) -> int:
        """n in the length formula; counts interior knots with multiplicity."""
        return len(self.knots) - 2 * self.degree - 1

    @property
    def interior(self) -> tuple[float, ...]:
        return self.knots[self.degree + 1 : len(self.knots) - self.degree - 1]

    @property
    def distinct_interior(self) -> tuple[float, ...]:
        return tuple(sorted(set(self.interior)))

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """0, the distinct interior knots, 1: one interval per Bezier piece."""
        return (0.0,) + self.distinct_interior + (1.0,)

    def multiplicity(self, u: float) -> int:
        return self.knots.count(u)

    def find_span(self, u: float) -> int:
        """Index k with knots[k] <= u < knots[k+1] (left limit at u = 1).

        The NURBS Book A2.1, with the closing span clamped so that the last
        basis function evaluates to 1 at the right end.
        """
        if not 0.0 <= u <= 1.0:
            raise DomainError(f"parameter {u} outside [0, 1]")
        U, p = self.knots, self.degree
        high = len(U) - p - 1
        if u >= U[high]:
            return high - 1
        lo, hi = p, high
        while True:
            mid = (lo + hi) // 2
            if u < U[mid]:
                hi = mid
            elif u >= U[mid + 1]:
                lo = mid + 1
            else:
                return mid


@dataclass(frozen=True)
class LatticeSet:
    """Strictly increasing finite set of integer lattice points."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if not self.indices:
            raise ValidationError("lattice set must be nonempty")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValidationError("lattice indices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    @property
    def hull(self) -> tuple[int, int]:
        return self.indices[0], self.indices[-1]

    @property
    def span(self) -> int:
        return self.indices[-1] - self.indices[0]


@dataclass(frozen=True)
class LiftingFunction:
    """Per-lattice-index lift values: the exponent of the weight growth rate."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise ValidationError("lifting function needs at least one value")
        if not all(math.isfinite(v) for v in self.values):
            raise ValidationError("lifting values must be finite")

    def __len__(self) -> int:
        return len(self.values)

    def constant(self) -> bool:
        return max(self.values) == min(self.values)


@dataclass(frozen=True)
class CurveSpec:
    """A clamped NURBS curve: knot vector, control points, positive weights.

    Control index i runs over the lattice {0, ..., n+p-1}; weights and
    points are aligned with it.
    """

    knot_vector: KnotVector
    control_points: tuple[Point, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "control_points", tuple(as_point(q) for q in self.control_points))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        k = self.knot_vector.num_control
        if len(self.control_points) != k:
            raise ValidationError(f"expected {k} control points for this knot vector, got {len(self.control_points)}")
        if len(self.weights) != k:
            raise ValidationError(f"expected {k} weights, got {len(self.weights)}")
        if any(not (math.isfinite(w) and w > 0.0) for w in self.weights):
            raise ValidationError("weights must be positive and finite")
        dims = {len(q) for q in self.control_points}
        if len(dims) != 1:
            raise ValidationError("control points must share one dimension")

    @property
    def degree(self) -> int:
        return self.knot_vector.degree

    @property
    def dimension(self) -> int:
        return len(self.control_points[0])

    @property
    def lattice(self) -> LatticeSet:
        return LatticeSet(tuple(range(len(self.control_points))))

    @property
    def diameter(self) -> float:
        return bounding_box_diameter(self.control_points)

    def validate_lifting(self, lifting: LiftingFunction) -> None:
        if len(lifting) != len(self.control_points):
            raise ValidationError(
                f"lifting has {len(lifting)} values, curve has {len(self.control_points)} control indices"
            )


@dataclass(frozen=True)
class ToricBezierPiece:
    """Rational curve over a lattice subset {a_0 < ... < a_m}.

    Basis over the hull [a_0, a_m]: c_a * (x - a_0)^(a - a_0) * (a_m - x)^(a_m - a).
    A single-index piece is the constant point b_{a_0}.
    """

    lattice: LatticeSet
    coeffs: tuple[float, ...]
    weights: tuple[float, ...]
    points: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        object.__setattr__(self, "points", tuple(as_point(q) for q in self.points))
        k = len(self.lattice)
        if not len(self.coeffs) == len(self.weights) == len(self.points) == k:
            raise ValidationError("lattice, coeffs, weights and points must have equal counts")
        if any(c <= 0.0 for c in self.coeffs) or any(w <= 0.0 for w in self.weights):
            raise ValidationError("basis coefficients and weights must be positive")

    @property
    def domain(self) -> tuple[float, float]:
        a0, am = self.lattice.hull
        return float(a0), float(am)


def binomial_coeffs(lattice: LatticeSet) -> tuple[float, ...]:
    """Basis coefficients binom(span, a - a_0) over the subset's hull.

    Reduces to the Bernstein normalization on gap-free subsets; any common
    positive factor cancels in the rational form.
    """
    a0, am = lattice.hull
    return tuple(float(math.comb(am - a0, a - a0)) for a in lattice)


def bspline_basis_all(kv: KnotVector, u: float) -> list[float]:
    """All B-spline basis values N_{i,p}(u), i = 0..num_control-1.

    Cox-de Boor via the banded recurrence (The NURBS Book A2.2); at most
    p+1 entries are nonzero and they sum to 1.
    """
    span = kv.find_span(u)
    U, p = kv.knots, kv.degree
    left = [0.0] * (p + 1)
    right = [0.0] * (p + 1)
    N = [0.0] * (p + 1)
    N[0] = 1.0
    for j in range(1, p + 1):
        left[j] = u - U[span + 1 - j]
        right[j] = U[span + j] - u
        saved = 0.0
        for r in range(j):
            temp = N[r] / (right[r + 1] + left[j - r])
            N[r] = saved + right[r + 1] * temp
            saved = left[j - r] * temp
        N[j] = saved
    out = [0.0] * kv.num_control
    out[span - p : span + 1] = N
    return out


def eval_nurbs(spec: CurveSpec, u: float) -> Point:
    """Evaluate the curve at u in [0, 1]."""
    basis = bspline_basis_all(spec.knot_vector, u)
    dim = spec.dimension
    num = [0.0] * dim
    den = 0.0
    for N, w, q in zip(basis, spec.weights, spec.control_points):
        if N == 0.0:
            continue
        f = w * N
        den += f
        for k in range(dim):
            num[k] += f * q[k]
    return tuple(c / den for c in num)


def eval_nurbs_lifted(spec: CurveSpec, lifting: LiftingFunction, t: float, u: float) -> Point:
    """Evaluate the curve with weights scaled to t^lift(i) * w_i.

    Every active term is rescaled by t^(-max active lift), which keeps the
    sums finite for t up to 1e8 and |lift| <= 16.
    """
    spec.validate_lifting(lifting)
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"scale parameter t must be positive, got {t}")
    basis = bspline_basis_all(spec.knot_vector, u)
    active = [i for i, N in enumerate(basis) if N != 0.0]
    top = max(lifting.values[i] for i in active)
    dim = spec.dimension
    num = [0.0] * dim
    den = 0.0
    for i in active:
        f = t ** (lifting.values[i] - top) * spec.weights[i] * basis[i]
        den += f
        q = spec.control_points[i]
        for k in range(dim):
            num[k] += f * q[k]
    return tuple(c / den for c in num)


def eval_toric_bezier(piece: ToricBezierPiece, x: float) -> Point:
    """Evaluate a toric Bezier piece at x in its hull [a_0, a_m].

    The endpoints map exactly to the first and last control point because
    every other basis term carries a vanishing factor there.
    """
    a0, am = piece.lattice.hull
    if len(piece.lattice) == 1:
        if x != a0:
            raise DomainError(f"parameter {x} outside point domain [{a0}, {a0}]")
        return piece.points[0]
    if a0 == am:
        raise DegenerateError("zero-length domain with more than one control point")
    if not a0 <= x <= am:
        raise DomainError(f"parameter {x} outside [{a0}, {am}]")
    if x == a0:
        return piece.points[0]
    if x == am:
        return piece.points[-1]
    dim = len(piece.points[0])
    num = [0.0] * dim
    den = 0.0
    for a, c, w, q in zip(piece.lattice, piece.coeffs, piece.weights, piece.points):
        beta = c * (x - a0) ** (a - a0) * (am - x) ** (am - a)
        f = w * beta
        den += f
        for k in range(dim):
            num[k] += f * q[k]
    return tuple(v / den for v in num)
