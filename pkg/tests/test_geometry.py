import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from kdisperse.generators import valtr_polygon
from kdisperse.geometry import (
    CLOCKWISE,
    COLLINEAR,
    COUNTERCLOCKWISE,
    DegeneratePair,
    Line,
    Reason,
    RejectedInput,
    diameter,
    orientation,
    signed_distance_to_line,
    squared_distance,
    validate_convex,
)

from conftest import SQUARE_POINTS


def test_squared_distance_basics():
    assert squared_distance((0, 0), (0, 0)) == 0.0
    assert squared_distance((0, 0), (1, 1)) == 2.0
    assert squared_distance((0, 0), (3, 4)) == 25.0


@given(
    px=st.floats(-1e6, 1e6), py=st.floats(-1e6, 1e6),
    qx=st.floats(-1e6, 1e6), qy=st.floats(-1e6, 1e6),
)
def test_squared_distance_symmetric(px, py, qx, qy):
    assert squared_distance((px, py), (qx, qy)) == squared_distance((qx, qy), (px, py))


def test_orientation_signs():
    assert orientation((0, 0), (1, 0), (1, 1)) == COUNTERCLOCKWISE
    assert orientation((0, 0), (1, 0), (2, 0)) == COLLINEAR
    assert orientation((0, 0), (0, 1), (1, 1)) == CLOCKWISE


@given(
    ax=st.integers(-50, 50), ay=st.integers(-50, 50),
    bx=st.integers(-50, 50), by=st.integers(-50, 50),
    cx=st.integers(-50, 50), cy=st.integers(-50, 50),
)
def test_orientation_antisymmetric(ax, ay, bx, by, cx, cy):
    """Swapping the last two arguments flips clockwise <-> counterclockwise."""
    a, b, c = (ax, ay), (bx, by), (cx, cy)
    assert orientation(a, b, c) == -orientation(a, c, b)


def test_validate_square_kept_as_is():
    P = validate_convex(SQUARE_POINTS)
    assert P.n == 4
    assert list(zip(P.xs.tolist(), P.ys.tolist())) == SQUARE_POINTS


def test_validate_reverses_counterclockwise_input():
    # A counter-clockwise cycle is accepted and normalized by reversing the
    # list, giving back a clockwise cycle of the same vertices.
    ccw = SQUARE_POINTS[::-1]
    P = validate_convex(ccw)
    assert list(zip(P.xs.tolist(), P.ys.tolist())) == SQUARE_POINTS


@pytest.mark.parametrize(
    "points,reason",
    [
        ([(0, 0), (2, 0), (1, 0.0), (1, 2)], Reason.COLLINEAR),
        ([(0, 0), (1, 1), (2, 0), (1, 0.5)], Reason.NOT_CONVEX),
        ([(0, 0), (1, 0)], Reason.TOO_FEW),
        ([(0, 0), (1, 0), (1, 1), (0, 0)], Reason.DUPLICATE),
        ([(0, 0), (1, 0), (2, 0)], Reason.COLLINEAR),
    ],
)
def test_validate_rejections(points, reason):
    with pytest.raises(RejectedInput) as exc:
        validate_convex(points)
    assert exc.value.reason == reason


def test_validate_rejects_nonfinite():
    with pytest.raises(RejectedInput):
        validate_convex([(0, 0), (1, float("nan")), (1, 1), (0, 1)])


@given(n=st.integers(3, 60), seed=st.integers(0, 2**20))
@settings(max_examples=60, deadline=None)
def test_validate_idempotent(n, seed):
    P = valtr_polygon(n, seed)
    pts = list(zip(P.xs.tolist(), P.ys.tolist()))
    Q = validate_convex(pts)
    assert list(zip(Q.xs.tolist(), Q.ys.tolist())) == pts


def test_line_through_degenerate():
    with pytest.raises(DegeneratePair):
        Line.through((1, 2), (1, 2))


def test_signed_distance_conventions():
    horiz = Line.through((0, 0), (1, 0))
    assert signed_distance_to_line(horiz, (0.5, 2)) == 2.0
    assert signed_distance_to_line(horiz, (3, 0)) == 0.0
    vert = Line.through((0, 0), (0, 1))
    assert signed_distance_to_line(vert, (-4, 7)) == -4.0


def test_diameter_square(square):
    i, j, d_sq = diameter(square)
    assert (i, j, d_sq) == (0, 2, 2.0)


def test_diameter_hexagon(hexagon):
    i, j, d_sq = diameter(hexagon)
    assert (i, j) == (0, 3)
    assert d_sq == 4.0  # opposite vertices of a unit-circumradius hexagon


@given(n=st.integers(3, 120), seed=st.integers(0, 2**20))
@settings(max_examples=80, deadline=None)
def test_diameter_matches_pairwise_max(n, seed):
    P = valtr_polygon(n, seed)
    i, j, d_sq = diameter(P)
    assert i < j
    best = max(
        P.dsq(a, b) for a in range(P.n) for b in range(a + 1, P.n)
    )
    assert d_sq == best
    assert P.dsq(i, j) == d_sq


def test_diameter_500_scan():
    P = valtr_polygon(500, 3)
    _, _, d_sq = diameter(P)
    assert d_sq == max(
        P.dsq(a, b) for a in range(P.n) for b in range(a + 1, P.n)
    )
