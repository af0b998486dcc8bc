import pytest

from kdisperse.generators import regular_polygon
from kdisperse.geometry import validate_convex

# Already a clockwise cycle, so validation keeps the order verbatim.
SQUARE_POINTS = [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]


@pytest.fixture
def square():
    return validate_convex(SQUARE_POINTS)


@pytest.fixture
def hexagon():
    return regular_polygon(6)
