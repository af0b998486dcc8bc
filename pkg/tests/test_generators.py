import math

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from kdisperse.generators import circle_polygon, regular_polygon, valtr_polygon
from kdisperse.geometry import validate_convex


def test_regular_hexagon_lands_on_unit_circle():
    P = regular_polygon(6)
    assert P.n == 6
    radii = np.hypot(P.xs, P.ys)
    assert np.allclose(radii, 1.0, atol=1e-12)
    # vertex 0 sits at the top of the circle
    assert P.ys[0] == pytest.approx(1.0, abs=1e-12)
    assert P.xs[0] == pytest.approx(0.0, abs=1e-12)


def test_regular_polygon_edge_lengths_equal():
    P = regular_polygon(9)
    edges = [math.sqrt(P.dsq(i, (i + 1) % 9)) for i in range(9)]
    assert max(edges) - min(edges) < 1e-12


@given(n=st.integers(3, 200), seed=st.integers(0, 2**30))
@settings(max_examples=50, deadline=None)
def test_circle_polygon_valid_and_on_circle(n, seed):
    P = circle_polygon(n, seed)
    assert P.n == n
    assert np.allclose(np.hypot(P.xs, P.ys), 1.0, atol=1e-9)
    validate_convex(list(zip(P.xs.tolist(), P.ys.tolist())))


@given(n=st.integers(3, 200), seed=st.integers(0, 2**30))
@settings(max_examples=50, deadline=None)
def test_valtr_polygon_valid(n, seed):
    P = valtr_polygon(n, seed)
    assert P.n == n
    validate_convex(list(zip(P.xs.tolist(), P.ys.tolist())))


@pytest.mark.parametrize("make", [valtr_polygon, circle_polygon])
def test_generators_deterministic(make):
    A = make(40, 7)
    B = make(40, 7)
    assert A.xs.tolist() == B.xs.tolist()
    assert A.ys.tolist() == B.ys.tolist()
    C = make(40, 8)
    assert A.xs.tolist() != C.xs.tolist()
