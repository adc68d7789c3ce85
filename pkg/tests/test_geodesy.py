import math
import random

import numpy as np
import pytest

import tropgeo as tg
from tropgeo.geodesy import (
    EDGE_NAMES,
    POINT_ID,
    SEGMENT_DIAG_ID,
    SEGMENT_X_ID,
    SEGMENT_Y_ID,
    GeodesicRegion,
)

from helpers import independent_masks, random_pl_geodesic

# lengths


def test_polyline_length_worked_values():
    assert tg.polyline_length([(0, 0)]) == 0.0
    assert tg.polyline_length([(0, 0), (1, 1), (1, 2)]) == 2.0
    assert tg.polyline_length([(0, 0), (1, 0), (0, 0)]) == 2.0


def test_polyline_evaluator_hits_breakpoints():
    pts = [(0.0, 0.0), (1.0, 1.0), (1.0, 2.0), (3.0, 2.0), (3.0, 0.0)]
    curve = tg.polyline_evaluator(pts)
    for k, p in enumerate(pts):
        assert curve(k / 4) == p
    mid = curve(1 / 8)
    assert mid == (0.5, 0.5)


def test_curve_length_straight_segment():
    x, y = (1.0, -2.0, 0.5), (4.0, 0.0, 0.25)

    def line(t):
        return tuple((1 - t) * a + t * b for a, b in zip(x, y))

    assert tg.curve_length(line) == pytest.approx(tg.dist(x, y), abs=1e-9)


def test_curve_length_circle():
    for r in (0.5, 1.0, 3.0):
        def circle(t, r=r):
            return (r * math.cos(2 * math.pi * t), r * math.sin(2 * math.pi * t))

        want = (4 + 2 * math.sqrt(2)) * r
        assert tg.curve_length(circle, tol=1e-6) == pytest.approx(want, abs=1e-6)


def test_curve_length_polyline_exact_at_dyadic_breakpoints():
    pts = [(0.0, 0.0), (2.0, 1.0), (2.0, 3.0), (-1.0, 3.0), (-1.0, -1.0)]
    curve = tg.polyline_evaluator(pts)
    # breakpoints sit at quarters, inside the first refinement level
    assert tg.curve_length(curve, tol=1e-9) == tg.polyline_length(pts)


def test_curve_length_reports_bracket_on_nonconvergence():
    def shifted(t):
        return (math.cos(2 * math.pi * t + 0.3), math.sin(2 * math.pi * t + 0.3))

    # both refinement steps available below depth 4 still move the estimate
    # by ~0.2, so a 1e-12 tolerance cannot stabilize in time
    with pytest.raises(tg.ConvergenceError) as exc:
        tg.curve_length(shifted, tol=1e-12, max_depth=4)
    low, high = exc.value.bracket
    assert 0 < low <= high <= 4 + 2 * math.sqrt(2) + 1e-6


def test_curve_length_zero_refinement_budget():
    def circle(t):
        return (math.cos(2 * math.pi * t), math.sin(2 * math.pi * t))

    with pytest.raises(tg.ConvergenceError):
        tg.curve_length(circle, tol=1e-9, max_depth=2)


def test_curve_length_rejects_bad_tol():
    with pytest.raises(tg.DomainError):
        tg.curve_length(lambda t: (t,), tol=0.0)


# geodesic predicates


def test_is_geodesic_worked_values():
    assert tg.is_geodesic(tg.segment((0, 0), (1, 2)).vertices)
    assert not tg.is_geodesic([(0, 0), (1, 0), (0, 1)])
    assert tg.is_geodesic([(5.0, 5.0)])


def test_shuffled_subsegments_stay_geodesic():
    rng = np.random.default_rng(42)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        x = tuple(rng.uniform(-5, 5, n))
        y = tuple(rng.uniform(-5, 5, n))
        assert tg.is_geodesic(random_pl_geodesic(x, y, rng), eps=1e-7)


def test_projections_of_geodesics_are_geodesics():
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(2, 6))
        x = tuple(rng.uniform(-5, 5, n))
        y = tuple(rng.uniform(-5, 5, n))
        poly = random_pl_geodesic(x, y, rng)
        for i in range(n):
            for j in range(i + 1, n):
                proj = [(p[i], p[j]) for p in poly]
                assert tg.is_geodesic(proj, eps=1e-7)


def test_is_between_worked_values():
    assert tg.is_between((0, 0), (0, 0), (1, 2))
    assert tg.is_between((0, 0), (1, 1), (1, 2))
    assert not tg.is_between((0, 0), (1, 0), (0, 1))


# two-point hulls


def test_pair_hull_parallelogram():
    reg = tg.pair_hull((0, 0), (1, 2))
    assert reg.lower == (0.0, 0.0)
    assert reg.upper == (1.0, 2.0)
    # 0 <= y - x <= 1
    assert reg.diff_lb[1][0] == 0.0
    assert reg.diff_lb[0][1] == -1.0
    assert reg.contains((0.5, 1.0))
    assert not reg.contains((0.0, 2.0))  # corner cut off by the diagonal


def test_pair_hull_rectangle_with_redundant_diagonals():
    reg = tg.pair_hull((0, 2), (3, 0))
    assert reg.lower == (0.0, 0.0)
    assert reg.upper == (3.0, 2.0)
    # diagonal bounds don't cut into the box
    for corner in ((0, 0), (3, 0), (0, 2), (3, 2)):
        assert reg.contains(corner)


def test_pair_hull_of_equal_points_is_a_point():
    reg = tg.pair_hull((1.5, -2.0), (1.5, -2.0))
    assert reg.affine_dim() == 0
    assert reg.witness() == (1.5, -2.0)


def test_pair_hull_matches_betweenness_in_low_dimensions():
    # membership in the two-point hull is the same predicate as metric
    # betweenness for n <= 2
    rng = np.random.default_rng(101)
    for n in (1, 2):
        for _ in range(10_000):
            x = tuple(rng.uniform(-3, 3, n))
            y = tuple(rng.uniform(-3, 3, n))
            z = tuple(rng.uniform(-4, 4, n))
            assert tg.pair_hull(x, y).contains(z) == tg.is_between(x, z, y)


def test_pair_hull_members_are_between_in_all_dimensions():
    rng = np.random.default_rng(55)
    r = random.Random(55)
    for n in range(1, 7):
        for _ in range(800):
            x = tuple(rng.uniform(-3, 3, n))
            y = tuple(rng.uniform(-3, 3, n))
            reg = tg.pair_hull(x, y)
            assert tg.is_between(x, reg.sample(r), y, eps=1e-8)
            assert tg.is_between(x, reg.witness(), y, eps=1e-8)


def test_betweenness_is_strictly_wider_than_the_pair_hull_for_n3():
    # a middle coordinate may wander past the coordinatewise extremes while
    # both leg distances stay controlled by the other coordinates, so the
    # bounded region is a strict subset of the metric between-set once n >= 3
    x, y, w = (0, 0, 0), (-4, 4, 0), (-1, 2, 1)
    assert tg.dist(x, w) == 3.0
    assert tg.dist(w, y) == 5.0
    assert tg.dist(x, y) == 8.0
    assert tg.is_between(x, w, y)
    assert not tg.pair_hull(x, y).contains(w)


# finite-set hulls


def test_hull_single_point():
    reg = tg.hull([(2.0, -1.0)])
    assert reg.affine_dim() == 0
    assert reg.witness() == (2.0, -1.0)


SIMPLEX = tg.hull([(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)])


def test_hull_simplex_golden():
    want = GeodesicRegion(
        lower=(0, 0, 0),
        upper=(1, 1, 1),
        diff_lb=((0, 0, 0), (-1, 0, 0), (-1, -1, 0)),
    )
    assert SIMPLEX == want


def test_region_contains_simplex_examples():
    assert tg.region_contains(SIMPLEX, (0.5, 0.2, 0.1))
    assert not tg.region_contains(SIMPLEX, (0.1, 0.5, 0.2))
    for gen in ((0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)):
        assert tg.region_contains(SIMPLEX, gen)


def test_hull_bounds_are_extrema_of_the_generators():
    rng = np.random.default_rng(31)
    for _ in range(200):
        n = int(rng.integers(1, 6))
        pts = [tuple(rng.uniform(-4, 4, n)) for _ in range(int(rng.integers(1, 7)))]
        reg = tg.hull(pts)
        for i in range(n):
            assert reg.lower[i] == min(p[i] for p in pts)
            assert reg.upper[i] == max(p[i] for p in pts)
            for j in range(n):
                if i != j:
                    assert reg.diff_lb[i][j] == min(p[i] - p[j] for p in pts)
        # extremal bounds are already canonical, closed form is a fixed point
        again = GeodesicRegion(reg.lower, reg.upper, reg.diff_lb)
        assert again == reg


def test_hull_is_monotone_and_minimal():
    rng = np.random.default_rng(32)
    r = random.Random(32)
    for _ in range(100):
        n = int(rng.integers(1, 5))
        pts = [tuple(rng.uniform(-4, 4, n)) for _ in range(3)]
        extra = [tuple(rng.uniform(-4, 4, n)) for _ in range(2)]
        small = tg.hull(pts)
        big = tg.hull(pts + extra)
        for _ in range(10):
            assert big.contains(small.sample(r), eps=1e-9)


def test_segments_between_region_members_stay_inside():
    rng = np.random.default_rng(33)
    r = random.Random(33)
    for _ in range(200):
        n = int(rng.integers(1, 6))
        pts = [tuple(rng.uniform(-3, 3, n)) for _ in range(int(rng.integers(2, 6)))]
        reg = tg.hull(pts)
        u, v = reg.sample(r), reg.sample(r)
        for mode in ("min", "max"):
            for vert in tg.segment(u, v, mode).vertices:
                assert reg.contains(vert, eps=1e-7)


def test_is_tropically_geodesic():
    assert tg.is_tropically_geodesic(SIMPLEX.lower, SIMPLEX.upper, SIMPLEX.diff_lb)
    # contradictory bounds: y - x >= 2 inside the unit square
    assert not tg.is_tropically_geodesic(
        (0, 0), (1, 1), ((0, 0), (2, 0))
    )
    ball = tg.hrep(tg.unit_ball(2))
    assert tg.is_tropically_geodesic(ball.lower, ball.upper, ball.diff_lb)


# the region type itself


def test_empty_region_raises():
    with pytest.raises(tg.EmptyRegionError):
        GeodesicRegion((1.0,), (0.0,))


def test_closure_propagates_difference_chains():
    # -100 entries are slack enough to never bind inside the box
    reg = GeodesicRegion(
        lower=(0, 0, 0),
        upper=(20, 20, 20),
        diff_lb=((0, 5, -100), (-100, 0, 5), (-100, -100, 0)),
    )
    assert reg.lower == (10.0, 5.0, 0.0)
    assert reg.upper == (20.0, 15.0, 10.0)
    assert reg.diff_lb[0][2] == 10.0


def test_region_equality_and_hash():
    a = tg.pair_hull((0, 0), (1, 2))
    b = tg.pair_hull((0, 0), (1, 2))
    c = tg.pair_hull((0, 0), (1, 3))
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert a.isclose(b)
    assert "GeodesicRegion" in repr(a)


def test_region_is_immutable():
    reg = tg.pair_hull((0, 0), (1, 2))
    with pytest.raises(AttributeError):
        reg.lower = (5.0, 5.0)


def test_region_intersect():
    square = GeodesicRegion((0, 0), (2, 2))
    shifted = GeodesicRegion((1, 1), (3, 3))
    meet = square.intersect(shifted)
    assert meet.lower == (1.0, 1.0)
    assert meet.upper == (2.0, 2.0)
    with pytest.raises(tg.EmptyRegionError):
        square.intersect(GeodesicRegion((5, 5), (6, 6)))


def test_region_affine_dim():
    assert GeodesicRegion((0, 0), (0, 0)).affine_dim() == 0
    assert GeodesicRegion((0, 0), (1, 0)).affine_dim() == 1
    assert GeodesicRegion((0, 0), (1, 1)).affine_dim() == 2
    # x - y pinned to 1: a diagonal segment
    pinned = GeodesicRegion((0, -1), (1, 0), ((0, 1), (-1, 0)))
    assert pinned.affine_dim() == 1


def test_contains_batch_matches_scalar():
    rng = np.random.default_rng(12)
    reg = tg.hull([tuple(rng.uniform(-2, 2, 3)) for _ in range(4)])
    X = rng.uniform(-3, 3, (200, 3))
    got = reg.contains_batch(X)
    want = np.array([reg.contains(tuple(row)) for row in X])
    assert np.array_equal(got, want)


def test_sample_stays_inside():
    r = random.Random(3)
    reg = SIMPLEX
    for _ in range(200):
        assert reg.contains(reg.sample(r), eps=1e-9)


# planar classification


def test_classify_unit_disk_is_full_hexagon():
    shape = tg.classify2d(tg.hrep(tg.unit_ball(2)))
    assert shape.kind == "polygon"
    assert shape.edge_count == 6
    assert shape.present_edges == (0, 1, 2, 3, 4, 5)
    assert shape.canonical_id == 0


def test_classify_triangle():
    reg = GeodesicRegion((0, 0), (1, 1), ((0, -1), (0, 0)))
    shape = tg.classify2d(reg)
    assert shape.kind == "polygon"
    assert shape.edge_count == 3
    assert shape.present_edges == (1, 3, 5)
    assert {EDGE_NAMES[k] for k in shape.present_edges} == {"y=b'", "x=a", "y-x=c"}
    assert shape.canonical_id == 2**0 + 2**2 + 2**4


def test_classify_degenerates():
    assert tg.classify2d(tg.pair_hull((1, 1), (1, 1))).canonical_id == POINT_ID
    assert tg.classify2d(tg.pair_hull((0, 0), (2, 0))).canonical_id == SEGMENT_X_ID
    assert tg.classify2d(tg.pair_hull((0, 0), (0, 2))).canonical_id == SEGMENT_Y_ID
    assert tg.classify2d(tg.pair_hull((0, 0), (2, 2))).canonical_id == SEGMENT_DIAG_ID
    assert tg.classify2d(tg.pair_hull((1, 1), (1, 1))).kind == "point"
    assert tg.classify2d(tg.pair_hull((0, 0), (2, 0))).kind == "segment-x"


def test_classify_requires_two_dimensions():
    with pytest.raises(tg.DimensionMismatch):
        tg.classify2d(GeodesicRegion((0, 0, 0), (1, 1, 1)))


def test_classified_missing_edges_never_adjacent():
    legal = set(independent_masks())
    rng = np.random.default_rng(17)
    seen = set()
    for _ in range(4000):
        a, a2 = np.sort(rng.uniform(-1, 1, 2))
        b, b2 = np.sort(rng.uniform(-1, 1, 2))
        c, c2 = np.sort(rng.uniform(-2, 2, 2))
        try:
            reg = GeodesicRegion((a, b), (a2, b2), ((0.0, -c2), (c, 0.0)))
        except tg.EmptyRegionError:
            continue
        shape = tg.classify2d(reg)
        if shape.kind == "polygon":
            assert shape.canonical_id in legal
            seen.add(shape.canonical_id)
    assert len(seen) >= 12  # the full 18 take a bigger sweep


# the Monte-Carlo hull oracle


def test_oracle_depth_zero_returns_input():
    pts = [(0.0, 0.0), (1.0, 2.0)]
    assert tg.hull_iterate_oracle(pts, depth=0, samples=50) == pts


def test_oracle_outputs_stay_in_hull():
    pts = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]
    out = tg.hull_iterate_oracle(pts, depth=2, samples=120, seed=5)
    assert len(out) == 4 + 120 + 120
    for p in out:
        assert SIMPLEX.contains(p, eps=1e-9)


def test_oracle_reaches_the_interior():
    pts = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]
    out = tg.hull_iterate_oracle(pts, depth=2, samples=200, seed=5)
    slack = []
    for x, y, z in out:
        slack.append(min(x - y, y - z, z - 0.0, 1.0 - x))
    assert max(slack) > 0.05


def test_interior_witness_line_of_the_simplex():
    # an interior point sits on the straight segment through two boundary
    # points built from its own coordinates
    a, b, c = 0.5, 0.2, 0.1
    p = (a, b, c)
    u = ((a - b) / (1 - b), 0.0, 0.0)
    v = (1.0, 1.0, c / b)
    assert SIMPLEX.contains(u) and SIMPLEX.contains(v)
    assert tg.is_between(u, p, v, eps=1e-12)


def test_oracle_deterministic_under_seed():
    pts = [(0.0, 0.0), (3.0, 1.0)]
    a = tg.hull_iterate_oracle(pts, depth=1, samples=30, seed=9)
    b = tg.hull_iterate_oracle(pts, depth=1, samples=30, seed=9)
    assert a == b
