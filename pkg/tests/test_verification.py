"""Hausdorff distance, convergence reports, and crossing detection tests."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricnurbs import (
    CurveSpec,
    KnotVector,
    LiftingFunction,
    ValidationError,
    convergence_report,
    hausdorff_distance,
    self_intersections,
)
from toricnurbs.verification import cover_lifted_curve

from conftest import random_lifting, random_spec
from oracles import brute_force_crossings

POINT_SETS = st.lists(
    st.tuples(
        st.floats(min_value=-50, max_value=50),
        st.floats(min_value=-50, max_value=50),
    ),
    min_size=1,
    max_size=16,
)


class TestHausdorffDistance:
    def test_identical_sets(self):
        pts = [(0.0, 0.0), (1.0, 2.0), (-3.0, 4.0)]
        assert hausdorff_distance(pts, pts) == 0.0

    def test_single_pair(self):
        assert hausdorff_distance([(0.0, 0.0)], [(3.0, 4.0)]) == 5.0

    def test_segment_versus_point(self):
        seg = [(k / 999, 0.0) for k in range(1000)]
        d = hausdorff_distance(seg, [(0.0, 1.0)])
        assert d == pytest.approx(math.sqrt(2.0), abs=1e-3)

    def test_three_dimensional(self):
        assert hausdorff_distance([(0, 0, 0)], [(1, 2, 2)]) == 3.0

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            hausdorff_distance([], [(0.0, 0.0)])

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            hausdorff_distance([(0.0, 0.0)], [(0.0, 0.0, 0.0)])

    @given(a=POINT_SETS, b=POINT_SETS)
    @settings(max_examples=80, deadline=None)
    def test_symmetric_and_nonnegative(self, a, b):
        d = hausdorff_distance(a, b)
        assert d >= 0.0
        assert d == hausdorff_distance(b, a)
        if sorted(set(a)) == sorted(set(b)):
            assert d == 0.0

    @given(a=POINT_SETS, b=POINT_SETS, c=POINT_SETS)
    @settings(max_examples=80, deadline=None)
    def test_triangle_inequality(self, a, b, c):
        dab = hausdorff_distance(a, b)
        dbc = hausdorff_distance(b, c)
        dac = hausdorff_distance(a, c)
        assert dac <= dab + dbc + 1e-12


class TestConvergenceReport:
    def test_constant_lifting_is_immediately_converged(self, quad_two_knot_spec):
        lam = LiftingFunction((2.0,) * 5)
        report = convergence_report(quad_two_knot_spec, lam, [2, 7, 30], samples=200)
        assert all(d <= 1e-6 * report.diameter for d in report.distances)
        assert report.converged

    def test_ridge_lifting_collapse(self, quad_two_knot_spec):
        lam = LiftingFunction((1, 2, 3, 2, 1))
        report = convergence_report(quad_two_knot_spec, lam, [2, 5, 10, 100, 10000], samples=400)
        assert report.distances == tuple(sorted(report.distances, reverse=True))
        assert report.distances[-1] <= 1e-2 * report.diameter
        assert report.converged and report.tail_decreasing

    def test_cubic_two_segment_limit(self, cubic_one_knot_spec):
        lam = LiftingFunction((1, 4, 2, 1, 1))
        report = convergence_report(cubic_one_knot_spec, lam, [2, 5, 10, 100, 10000], samples=400)
        assert report.distances[-1] <= 1e-2 * report.diameter
        assert report.converged

    def test_rejects_non_ascending_schedule(self, quad_two_knot_spec):
        lam = LiftingFunction((1, 2, 3, 2, 1))
        with pytest.raises(ValidationError):
            convergence_report(quad_two_knot_spec, lam, [10, 5, 100])

    def test_rejects_short_schedule(self, quad_two_knot_spec):
        lam = LiftingFunction((1, 2, 3, 2, 1))
        with pytest.raises(ValidationError):
            convergence_report(quad_two_knot_spec, lam, [10, 100])

    def test_random_specs_converge(self):
        rng = random.Random(2024)
        for _ in range(6):
            spec = random_spec(rng)
            lam = random_lifting(rng, len(spec.control_points))
            report = convergence_report(spec, lam, [10, 100, 1000, 10000])
            assert report.distances[-1] <= 1e-2 * report.diameter
            assert report.distances[-1] <= report.distances[0]


class TestSelfIntersections:
    def test_convex_polyline_empty(self):
        pts = [(math.cos(a), math.sin(a)) for a in (0.1 * k for k in range(20))]
        assert self_intersections(pts) == []

    def test_figure_eight(self):
        pts = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]
        hits = self_intersections(pts)
        assert len(hits) == 1
        (i, j), q = hits[0]
        assert (i, j) == (0, 2)
        assert q == pytest.approx((0.5, 0.5), abs=1e-15)

    def test_requires_four_points(self):
        with pytest.raises(ValidationError):
            self_intersections([(0, 0), (1, 1), (2, 0)])

    def test_planar_only(self):
        with pytest.raises(ValidationError):
            self_intersections([(0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 1, 0)])

    def test_shared_endpoints_not_reported(self):
        square = [(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]
        assert self_intersections([tuple(map(float, q)) for q in square]) == []

    def test_matches_brute_force_on_random_polylines(self):
        rng = random.Random(6)
        for _ in range(40):
            count = rng.randint(4, 51)
            pts = [(rng.uniform(0, 1), rng.uniform(0, 1)) for _ in range(count)]
            fast = self_intersections(pts)
            slow = brute_force_crossings(pts)
            assert [ij for ij, _ in fast] == [ij for ij, _ in slow]
            for (_, a), (_, b) in zip(fast, slow):
                assert a == pytest.approx(b, abs=1e-12)

    def test_degeneration_exposes_polygon_crossing(self):
        # lifting chosen so the limit is the control polygon, which crosses
        # itself at (1, 1); at large t the sampled curve must report a
        # crossing there too
        points = ((0.0, 0.0), (2.0, 2.0), (2.0, 0.0), (0.0, 2.0))
        spec = CurveSpec(KnotVector((0, 0, 0, 0.5, 1, 1, 1), 2), points, (1.0,) * 4)
        lam = LiftingFunction((1, 3, 2, 0))
        assert self_intersections([tuple(q) for q in points])  # the limit provably crosses
        collapsed = [
            tuple(q) for q in cover_lifted_curve(spec, lam, 1e4, 400, 0.01 * spec.diameter)
        ]
        hits = self_intersections(collapsed)
        assert hits
        assert any(math.dist(q, (1.0, 1.0)) <= 0.01 * spec.diameter for _, q in hits)
