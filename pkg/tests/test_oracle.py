"""Checks on the brute-force reference implementations themselves.

Everything else in the suite leans on these functions as ground truth, so
they get their own direct tests against hand-checkable instances.
"""
import itertools
import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from kdisperse.errors import InvalidK, TooLarge
from kdisperse.generators import regular_polygon, valtr_polygon
from kdisperse.geometry import diameter
from kdisperse.oracle import (
    brute_force_decide,
    brute_force_kdispersion,
    scan_diameter,
    scan_extreme_points,
    scan_farthest_from_chord,
    scan_nearest_to_bisector,
)

from conftest import SQUARE_POINTS


def polygon_points(P):
    return list(zip(P.xs.tolist(), P.ys.tolist()))


def test_square_triples():
    best = brute_force_kdispersion(SQUARE_POINTS, 3)
    assert best.radius_sq4 == 1.0
    assert best.centers == (0, 1, 2)  # lexicographically smallest optimum


def test_hexagon_triple_alternates(hexagon):
    best = brute_force_kdispersion(polygon_points(hexagon), 3)
    assert best.centers == (0, 2, 4)
    assert best.radius_sq4 == pytest.approx(3.0, rel=1e-12)


def test_k_equals_n_is_forced(hexagon):
    pts = polygon_points(hexagon)
    best = brute_force_kdispersion(pts, 6)
    assert best.centers == (0, 1, 2, 3, 4, 5)
    assert best.radius_sq4 == min(
        hexagon.dsq(i, j) for i in range(6) for j in range(i + 1, 6)
    )


def test_invalid_k():
    with pytest.raises(InvalidK):
        brute_force_kdispersion(SQUARE_POINTS, 0)
    with pytest.raises(InvalidK):
        brute_force_kdispersion(SQUARE_POINTS, 5)


def test_enumeration_limit():
    pts = polygon_points(valtr_polygon(40, 0))
    with pytest.raises(TooLarge):
        brute_force_kdispersion(pts, 20, limit=1000)


def test_decide_square():
    assert brute_force_decide(SQUARE_POINTS, 3, 1.0) is True
    assert brute_force_decide(SQUARE_POINTS, 3, 2.0) is False
    assert brute_force_decide(SQUARE_POINTS, 1, 1e9) is True


@given(n=st.integers(4, 10), seed=st.integers(0, 2**16), k=st.integers(2, 5))
@settings(max_examples=40, deadline=None)
def test_optimum_ignores_input_order(n, seed, k):
    P = valtr_polygon(n, seed)
    pts = polygon_points(P)
    k = min(k, n)
    base = brute_force_kdispersion(pts, k).radius_sq4
    rng_order = pts[::-1]
    assert brute_force_kdispersion(rng_order, k).radius_sq4 == base


@given(n=st.integers(4, 10), seed=st.integers(0, 2**16))
@settings(max_examples=30, deadline=None)
def test_decide_monotone_in_threshold(n, seed):
    P = valtr_polygon(n, seed)
    pts = polygon_points(P)
    values = sorted({P.dsq(i, j) for i in range(n) for j in range(i + 1, n)})
    verdicts = [brute_force_decide(pts, 3, t) for t in values]
    # once infeasible, stays infeasible
    assert verdicts == sorted(verdicts, reverse=True)


def test_oracle_accepts_nonconvex_input():
    # dispersion is defined for any point set; convexity is not assumed here
    pts = [(0.0, 0.0), (4.0, 0.0), (2.0, 0.5), (2.0, 4.0)]
    best = brute_force_kdispersion(pts, 3)
    combos = {
        c: min(
            (pts[a][0] - pts[b][0]) ** 2 + (pts[a][1] - pts[b][1]) ** 2
            for a, b in itertools.combinations(c, 2)
        )
        for c in itertools.combinations(range(4), 3)
    }
    assert best.radius_sq4 == max(combos.values())


def test_scan_extremes_square(square):
    assert scan_extreme_points(square) == (0, 1, 2, 0)


def test_scan_diameter_matches_calipers():
    for seed in (1, 2, 3):
        P = valtr_polygon(64, seed)
        assert scan_diameter(P) == diameter(P)


def test_scan_farthest_hexagon(hexagon):
    # all four off-chord vertices are sqrt(3)/2 from the diagonal through
    # vertices 0 and 3; the float tie-break lands on vertex 5
    assert scan_farthest_from_chord(hexagon, 0, 3) == 5


def test_scan_nearest_bisector_square(square):
    f = scan_nearest_to_bisector(square, 0, 1)
    assert f in (2, 3)  # both remaining corners are 0.5 from the bisector
