"""Shared fixtures: the worked example curves and random spec generation.

The quantities asserted against these fixtures (extraction coefficients,
decomposition subsets, limit weights) do not depend on the control point
coordinates, which are chosen here to give pleasantly shaped curves.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toricnurbs import CurveSpec, KnotVector, LiftingFunction

QUARTIC_BEZIER_WEIGHTS = (3.0, 4.0, 2.0, 1.5, 1.0)


@pytest.fixture
def quartic_bezier_spec():
    """Degree-4 curve with no interior knots (a single Bezier piece)."""
    return CurveSpec(
        KnotVector((0, 0, 0, 0, 0, 1, 1, 1, 1, 1), 4),
        ((0.0, 0.0), (1.0, 2.5), (2.5, 3.1), (4.0, 2.2), (5.0, -0.5)),
        QUARTIC_BEZIER_WEIGHTS,
    )


@pytest.fixture
def quad_one_knot_spec():
    """Quadratic, one interior knot 1/4, weights (3,1,2,2)."""
    return CurveSpec(
        KnotVector((0, 0, 0, 0.25, 1, 1, 1), 2),
        ((0.0, 0.0), (1.0, 3.0), (3.5, 2.0), (4.0, -1.0)),
        (3.0, 1.0, 2.0, 2.0),
    )


@pytest.fixture
def quad_two_knot_spec():
    """Quadratic, interior knots 1/4 and 3/4, weights (3,2,3,2,5)."""
    return CurveSpec(
        KnotVector((0, 0, 0, 0.25, 0.75, 1, 1, 1), 2),
        ((0.0, 0.0), (1.0, 2.0), (2.5, 2.4), (4.0, 1.8), (5.0, 0.0)),
        (3.0, 2.0, 3.0, 2.0, 5.0),
    )


@pytest.fixture
def cubic_one_knot_spec():
    """Cubic, one interior knot 1/3, weights (1,4,1,4,1)."""
    return CurveSpec(
        KnotVector((0, 0, 0, 0, 1 / 3, 1, 1, 1, 1), 3),
        ((0.0, 0.0), (0.5, 2.0), (2.0, 3.0), (3.5, 1.5), (4.0, -0.5)),
        (1.0, 4.0, 1.0, 4.0, 1.0),
    )


def random_spec(rng: random.Random, max_degree: int = 4, max_segments: int = 6) -> CurveSpec:
    """Random clamped curve: p <= max_degree, n <= max_segments, unit-box points."""
    p = rng.randint(1, max_degree)
    n = rng.randint(1, max_segments)
    interior = []
    while len(interior) < n - 1:
        u = rng.uniform(0.05, 0.95)
        if all(abs(u - v) > 0.04 for v in interior):
            interior.append(u)
    knots = [0.0] * (p + 1) + sorted(interior) + [1.0] * (p + 1)
    count = n + p
    points = tuple((rng.random(), rng.random()) for _ in range(count))
    weights = tuple(rng.uniform(0.5, 5.0) for _ in range(count))
    return CurveSpec(KnotVector(tuple(knots), p), points, weights)


def random_lifting(rng: random.Random, size: int, lo: int = 0, hi: int = 4) -> LiftingFunction:
    return LiftingFunction(tuple(float(rng.randint(lo, hi)) for _ in range(size)))
