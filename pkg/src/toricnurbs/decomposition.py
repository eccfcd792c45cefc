"""Regular decompositions of lattice sets from lifted upper hulls.

Lattice indices are lifted to (i, lift(i)) in the plane; the edges of the
upper envelope of their convex hull project back to a cover of the hull
interval, and the indices whose lifted points land on a common upper edge
form one subset of the decomposition.  Abscissas are distinct integers, so
the monotone chain runs without degeneracies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    CurveSpec,
    DegenerateError,
    LatticeSet,
    LiftingFunction,
    ValidationError,
)
from .refinement import BezierPieceExtract, bezier_extract, support_exponent

PlanePoint = tuple[float, float]
Edge = tuple[PlanePoint, PlanePoint]


@dataclass(frozen=True)
class LiftedConfiguration:
    """Planar points (a_i, lift(a_i)) with strictly increasing abscissas."""

    points: tuple[PlanePoint, ...]

    def __post_init__(self):
        pts = tuple((float(x), float(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
            raise ValidationError("lifted abscissas must be strictly increasing")

    @classmethod
    def from_lattice(cls, lattice: LatticeSet, lifting: LiftingFunction) -> "LiftedConfiguration":
        if len(lifting) != len(lattice):
            raise ValidationError("lifting length must match the lattice")
        return cls(tuple((float(a), v) for a, v in zip(lattice, lifting.values)))


@dataclass(frozen=True)
class RegularDecomposition:
    """Ordered subsets on common upper edges plus their domain intervals."""

    subsets: tuple[LatticeSet, ...]
    domain_cells: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.subsets) != len(self.domain_cells):
            raise ValidationError("one domain cell per subset")

    def as_index_lists(self) -> list[list[int]]:
        return [list(s.indices) for s in self.subsets]


@dataclass(frozen=True)
class NurbsRegularDecomposition:
    """Per-piece regular decompositions, in global refined indices."""

    per_piece: tuple[tuple[int, RegularDecomposition], ...]

    def as_nested_lists(self) -> list[list[list[int]]]:
        return [d.as_index_lists() for _, d in self.per_piece]


def upper_hull(config: LiftedConfiguration) -> list[Edge]:
    """Edges of the upper envelope of the lifted points, left to right.

    Monotone chain keeping only right turns, so collinear interior points
    are absorbed into a single maximal edge.
    """
    pts = config.points
    if len(pts) < 2:
        raise DegenerateError("upper hull needs at least 2 lifted points")
    chain: list[PlanePoint] = []
    for q in pts:
        while len(chain) > 1:
            a, b = chain[-2], chain[-1]
            if (b[0] - a[0]) * (q[1] - a[1]) - (q[0] - a[0]) * (b[1] - a[1]) >= 0.0:
                chain.pop()
            else:
                break
        chain.append(q)
    return list(zip(chain, chain[1:]))


def on_edge_tolerance(lifting: LiftingFunction) -> float:
    """Vertical slack for edge membership, scaled by the lift magnitude."""
    return 1e-9 * (1.0 + max(abs(v) for v in lifting.values))


def regular_decomposition(lattice: LatticeSet, lifting: LiftingFunction) -> RegularDecomposition:
    """Decompose the lattice by the upper hull its lifting induces.

    An index joins subset j exactly when its lifted point lies on upper
    edge j (vertical gap within tolerance).
    """
    config = LiftedConfiguration.from_lattice(lattice, lifting)
    edges = upper_hull(config)
    tol = on_edge_tolerance(lifting)
    subsets = []
    cells = []
    for (x0, y0), (x1, y1) in edges:
        slope = (y1 - y0) / (x1 - x0)
        members = tuple(
            a
            for (a, y) in config.points
            if x0 <= a <= x1 and abs(y0 + slope * (a - x0) - y) <= tol
        )
        subsets.append(LatticeSet(tuple(int(a) for a in members)))
        cells.append((x0, x1))
    return RegularDecomposition(tuple(subsets), tuple(cells))


def piece_lifting(piece: BezierPieceExtract, lifting: LiftingFunction) -> LiftingFunction:
    """Induced lift per refined index: the support maximum of its combination."""
    return LiftingFunction(tuple(support_exponent(c, lifting) for c in piece.combos))


def decompose_pieces(pieces: list[BezierPieceExtract], lifting: LiftingFunction) -> NurbsRegularDecomposition:
    per_piece = tuple(
        (piece.piece_index, regular_decomposition(piece.lattice, piece_lifting(piece, lifting)))
        for piece in pieces
    )
    return NurbsRegularDecomposition(per_piece)


def nurbs_regular_decomposition(spec: CurveSpec, lifting: LiftingFunction) -> NurbsRegularDecomposition:
    """Regular decomposition of the fully refined lattice, piece by piece.

    Each extracted piece is decomposed under the induced lifts of its
    combinations; subsets are reported in global refined indices.
    """
    spec.validate_lifting(lifting)
    return decompose_pieces(bezier_extract(spec), lifting)
