"""Toric degeneration engine for NURBS curves.

Evaluate clamped NURBS curves, extract their rational Bezier pieces with
exact coefficient provenance, decompose the refined lattice by a lifting
function's upper hull, build the t -> infinity limit curve, and verify the
convergence numerically.
"""

from .geometry import (
    CurveSpec,
    DegenerateError,
    DomainError,
    KnotVector,
    LatticeSet,
    LiftingFunction,
    Point,
    ToricBezierPiece,
    ValidationError,
    binomial_coeffs,
    bounding_box_diameter,
    bspline_basis_all,
    eval_nurbs,
    eval_nurbs_lifted,
    eval_toric_bezier,
)
from .refinement import (
    BezierPieceExtract,
    KnotInsertionError,
    RefinedCurve,
    SupportCombination,
    bezier_extract,
    full_refinement,
    insert_knot,
    numeric_weights_points,
    support_exponent,
)
from .decomposition import (
    LiftedConfiguration,
    NurbsRegularDecomposition,
    RegularDecomposition,
    nurbs_regular_decomposition,
    regular_decomposition,
    upper_hull,
)
from .degeneration import (
    ControlCurvePiece,
    LimitElement,
    RegularControlCurve,
    limit_element,
    regular_control_curve,
    sample_regular_control_curve,
)
from .verification import (
    ConvergenceReport,
    convergence_report,
    hausdorff_distance,
    sample_lifted_curve,
    self_intersections,
)

__all__ = [
    "BezierPieceExtract",
    "ControlCurvePiece",
    "ConvergenceReport",
    "CurveSpec",
    "DegenerateError",
    "DomainError",
    "KnotInsertionError",
    "KnotVector",
    "LatticeSet",
    "LiftedConfiguration",
    "LiftingFunction",
    "LimitElement",
    "NurbsRegularDecomposition",
    "Point",
    "RefinedCurve",
    "RegularControlCurve",
    "RegularDecomposition",
    "SupportCombination",
    "ToricBezierPiece",
    "ValidationError",
    "binomial_coeffs",
    "bounding_box_diameter",
    "bspline_basis_all",
    "bezier_extract",
    "convergence_report",
    "eval_nurbs",
    "eval_nurbs_lifted",
    "eval_toric_bezier",
    "full_refinement",
    "hausdorff_distance",
    "insert_knot",
    "limit_element",
    "numeric_weights_points",
    "nurbs_regular_decomposition",
    "regular_control_curve",
    "regular_decomposition",
    "sample_lifted_curve",
    "sample_regular_control_curve",
    "self_intersections",
    "support_exponent",
    "upper_hull",
]

__version__ = "0.1.0"
