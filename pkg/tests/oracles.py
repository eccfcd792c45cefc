"""Independent reference implementations used only to check the library.

Each oracle takes a different computational route than the code under
test: the naive Cox-de Boor recursion instead of the banded recurrence,
numeric homogeneous-coordinate insertion instead of symbolic provenance,
supporting-line enumeration instead of the monotone chain, and plain
all-pairs segment tests without prefiltering.
"""

from __future__ import annotations

import math
from fractions import Fraction


def naive_basis(knots, degree, i, u):
    """Textbook recursive B-spline basis N_{i,p}(u), exact over Fractions.

    Closes the final interval so the last basis equals 1 at the right end.
    """
    if degree == 0:
        if knots[i] <= u < knots[i + 1]:
            return Fraction(1)
        if u == knots[-1] and knots[i] < knots[i + 1] == knots[-1]:
            return Fraction(1)
        return Fraction(0)
    total = Fraction(0)
    den = knots[i + degree] - knots[i]
    if den != 0:
        total += Fraction(u - knots[i], den) * naive_basis(knots, degree - 1, i, u)
    den = knots[i + degree + 1] - knots[i + 1]
    if den != 0:
        total += Fraction(knots[i + degree + 1] - u, den) * naive_basis(knots, degree - 1, i + 1, u)
    return total


def naive_basis_all(knots, degree, u):
    knots = [Fraction(k) for k in knots]
    u = Fraction(u)
    return [naive_basis(knots, degree, i, u) for i in range(len(knots) - degree - 1)]


def homogeneous_extract(degree, knots, points, weights):
    """Bezier extraction by numeric Boehm insertion on (w, w*x, w*y, ...).

    Returns per-piece (weights, points) tuples, one piece per distinct
    interior knot interval.
    """
    knots = [float(u) for u in knots]
    hp = [[w] + [w * c for c in q] for q, w in zip(points, weights)]
    for u in sorted(set(knots[degree + 1 : len(knots) - degree - 1])):
        while knots.count(u) < degree:
            mult = knots.count(u)
            k = max(idx for idx, val in enumerate(knots) if val <= u)
            new = hp[: k - degree + 1]
            for i in range(k - degree + 1, k - mult + 1):
                alpha = (u - knots[i]) / (knots[i + degree] - knots[i])
                new.append([(1 - alpha) * a + alpha * b for a, b in zip(hp[i - 1], hp[i])])
            new.extend(hp[k - mult :])
            knots.insert(k + 1, u)
            hp = new
    distinct = sorted(set(knots[degree + 1 : len(knots) - degree - 1]))
    pieces = []
    for m in range(len(distinct) + 1):
        lo = m * degree
        block = hp[lo : lo + degree + 1]
        ws = tuple(h[0] for h in block)
        ps = tuple(tuple(c / h[0] for c in h[1:]) for h in block)
        pieces.append((ws, ps))
    return pieces


def supporting_line_decomposition(lattice, lifts):
    """Upper-edge subsets by exhaustive supporting-line tests.

    Integer arithmetic throughout: a pair supports the configuration when
    every lifted point lies weakly below its line; its subset is the
    on-line points inside its abscissa range; non-maximal subsets drop out.
    """
    pts = list(zip(lattice, lifts))
    n = len(pts)
    candidates = []
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            xj, yj = pts[j]
            dx = xj - xi
            if all((yk - yi) * dx <= (yj - yi) * (xk - xi) for xk, yk in pts):
                members = tuple(
                    xk
                    for xk, yk in pts
                    if xi <= xk <= xj and (yk - yi) * dx == (yj - yi) * (xk - xi)
                )
                candidates.append(members)
    unique = set(candidates)
    maximal = [
        m for m in unique if not any(m != o and set(m) <= set(o) for o in unique)
    ]
    return sorted(maximal, key=lambda m: (m[0], m[-1]))


def brute_force_crossings(polyline):
    """All transversal crossings between nonadjacent segments, no prefilter."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    segs = list(zip(polyline, polyline[1:]))
    found = []
    for i in range(len(segs)):
        for j in range(i + 2, len(segs)):
            p1, p2 = segs[i]
            q1, q2 = segs[j]
            d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
            d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
            if d1 * d2 < 0 and d3 * d4 < 0:
                s = d1 / (d1 - d2)
                found.append(((i, j), (p1[0] + s * (p2[0] - p1[0]), p1[1] + s * (p2[1] - p1[1]))))
    return found


def point_to_segment_distance(q, a, b):
    """Euclidean distance from q to segment ab (any dimension)."""
    ab = [bb - aa for aa, bb in zip(a, b)]
    aq = [qq - aa for aa, qq in zip(a, q)]
    denom = sum(c * c for c in ab)
    if denom == 0.0:
        return math.dist(q, a)
    s = max(0.0, min(1.0, sum(x * y for x, y in zip(ab, aq)) / denom))
    return math.dist(q, [aa + s * c for aa, c in zip(a, ab)])


def distance_to_polyline(q, vertices):
    """Distance from q to a union of segments given by consecutive vertices."""
    return min(point_to_segment_distance(q, a, b) for a, b in zip(vertices, vertices[1:]))
