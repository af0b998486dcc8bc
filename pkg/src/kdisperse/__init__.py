"""Max-min dispersion of k points on the vertices of a convex polygon."""

from .approx3 import (
    AccessCounter,
    CaseRadii,
    ExtremeQuad,
    PairCase,
    approx_3,
    bisector_offset,
    case_radii,
    extreme_points,
    farthest_from_chord,
    nearest_to_bisector,
)
from .decision import (
    CandidateTable,
    DecideStats,
    Packing,
    SearchState,
    decide,
    next_center,
    next_center_naive,
    precompute_candidates,
)
from .errors import InvalidK, TooLarge
from .exact import SolveStats, solve_exact
from .geometry import (
    ConvexPolygon,
    DegeneratePair,
    Line,
    Point,
    Reason,
    RejectedInput,
    diameter,
    orientation,
    signed_distance_to_line,
    squared_distance,
    validate_convex,
)
from .ladder import DistanceLadder, build_ladder

__version__ = "0.1.0"

__all__ = [
    "AccessCounter",
    "CandidateTable",
    "CaseRadii",
    "ConvexPolygon",
    "DecideStats",
    "DegeneratePair",
    "DistanceLadder",
    "ExtremeQuad",
    "InvalidK",
    "Line",
    "Packing",
    "PairCase",
    "Point",
    "Reason",
    "RejectedInput",
    "SearchState",
    "SolveStats",
    "TooLarge",
    "approx_3",
    "bisector_offset",
    "build_ladder",
    "case_radii",
    "decide",
    "diameter",
    "extreme_points",
    "farthest_from_chord",
    "nearest_to_bisector",
    "next_center",
    "next_center_naive",
    "orientation",
    "precompute_candidates",
    "signed_distance_to_line",
    "solve_exact",
    "squared_distance",
    "validate_convex",
    "__version__",
]
