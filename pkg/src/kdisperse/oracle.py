"""Brute-force and linear-scan ground truth.

Everything here is deliberately unclever: exhaustive subset enumeration and
O(n) scans, vectorized just enough to be usable as a test oracle at moderate
sizes.  The solver modules must agree with these on every instance; nothing
in this module may import from them (`decision` is imported only for the
shared `Packing` record type).

The brute-force entry points accept arbitrary point sequences, not just
convex polygons — the dispersion objective does not need convexity, and
keeping the oracle convexity-blind guards against the solver accidentally
relying on it where it shouldn't.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import numpy as np

from .decision import Packing
from .errors import InvalidK, TooLarge
from .geometry import ConvexPolygon

#: Upper bound on C(n, k) before brute force refuses to run.
DEFAULT_SUBSET_LIMIT = 10_000_000

#: Subsets per vectorized batch; bounds peak memory at ~tens of MB.
_BATCH = 1 << 15


def _as_coords(points: Sequence) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be a sequence of (x, y) pairs")
    return pts


def _pairwise_sq(pts: np.ndarray) -> np.ndarray:
    dx = pts[:, 0][:, None] - pts[:, 0][None, :]
    dy = pts[:, 1][:, None] - pts[:, 1][None, :]
    return dx * dx + dy * dy


def _subset_batches(n: int, k: int) -> Iterator[np.ndarray]:
    """Yield (m, k) index arrays covering all k-subsets in lexicographic order."""
    combos = itertools.combinations(range(n), k)
    while True:
        flat = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(combos, _BATCH)),
            dtype=np.intp,
        )
        if flat.size == 0:
            return
        yield flat.reshape(-1, k)


def _check_args(n: int, k: int, limit: int) -> None:
    if k < 1 or k > n:
        raise InvalidK(k, 1, n)
    total = math.comb(n, k)
    if total > limit:
        raise TooLarge(f"C({n}, {k}) = {total} exceeds enumeration limit {limit}")


def brute_force_kdispersion(
    points: Sequence, k: int, *, limit: int = DEFAULT_SUBSET_LIMIT
) -> Packing:
    """Exhaustive max-min k-dispersion over all k-subsets of `points`.

    Ties are broken by the lexicographically smallest index subset, which is
    the first optimum encountered in enumeration order.  For k=1 the min over
    an empty pair set is +inf.
    """
    pts = _as_coords(points)
    n = len(pts)
    _check_args(n, k, limit)
    if k == 1:
        return Packing(centers=(0,), radius_sq4=math.inf)

    dsq = _pairwise_sq(pts)
    ra, rb = np.array(list(itertools.combinations(range(k), 2)), dtype=np.intp).T
    best_val = -math.inf
    best: np.ndarray | None = None
    for subsets in _subset_batches(n, k):
        vals = dsq[subsets[:, ra], subsets[:, rb]].min(axis=1)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best = subsets[i]
    assert best is not None
    return Packing(centers=tuple(int(v) for v in best), radius_sq4=best_val)


def brute_force_decide(
    points: Sequence, k: int, four_r_sq: float, *, limit: int = DEFAULT_SUBSET_LIMIT
) -> bool:
    """True iff some k-subset has min pairwise squared distance >= four_r_sq."""
    pts = _as_coords(points)
    n = len(pts)
    _check_args(n, k, limit)
    if k == 1:
        return True

    dsq = _pairwise_sq(pts)
    ra, rb = np.array(list(itertools.combinations(range(k), 2)), dtype=np.intp).T
    for subsets in _subset_batches(n, k):
        vals = dsq[subsets[:, ra], subsets[:, rb]].min(axis=1)
        if vals.max() >= four_r_sq:
            return True
    return False


# ---------------------------------------------------------------------------
# Linear-scan references for the logarithmic searches.
#
# Tie rules match the search counterparts exactly: smallest index, which for
# numpy argmin/argmax is simply the first occurrence.
# ---------------------------------------------------------------------------


def scan_extreme_points(P: ConvexPolygon) -> tuple[int, int, int, int]:
    """(min-x, max-y, max-x, min-y) vertex indices by full scan."""
    return (
        int(np.argmin(P.xs)),
        int(np.argmax(P.ys)),
        int(np.argmax(P.xs)),
        int(np.argmin(P.ys)),
    )


def chord_cross(P: ConvexPolygon, u: int, v: int) -> np.ndarray:
    """Cross-product numerators of distance from line(u, v), all vertices."""
    ux, uy = P.xs[u], P.ys[u]
    ex, ey = P.xs[v] - ux, P.ys[v] - uy
    return ex * (P.ys - uy) - ey * (P.xs - ux)


def scan_farthest_from_chord(P: ConvexPolygon, u: int, v: int) -> int:
    """Vertex maximizing distance from the line through u and v, by scan."""
    return int(np.argmax(np.abs(chord_cross(P, u, v))))


def bisector_proj(P: ConvexPolygon, u: int, v: int) -> np.ndarray:
    """Signed offsets of all vertices from the perpendicular bisector of uv.

    The offset of p is (p - midpoint) . (v - u); it is a positive multiple of
    the true signed distance, so minima and sign changes coincide.
    """
    ex, ey = P.xs[v] - P.xs[u], P.ys[v] - P.ys[u]
    mx, my = (P.xs[u] + P.xs[v]) / 2.0, (P.ys[u] + P.ys[v]) / 2.0
    return (P.xs - mx) * ex + (P.ys - my) * ey


def scan_nearest_to_bisector(P: ConvexPolygon, u: int, v: int) -> int:
    """Vertex (other than u, v) nearest the perpendicular bisector of uv."""
    offs = np.abs(bisector_proj(P, u, v))
    offs[u] = math.inf
    offs[v] = math.inf
    return int(np.argmin(offs))


def scan_diameter(P: ConvexPolygon) -> tuple[int, int, float]:
    """Farthest vertex pair by full O(n^2) scan; first max in (i, j) order."""
    dx = P.xs[:, None] - P.xs[None, :]
    dy = P.ys[:, None] - P.ys[None, :]
    dsq = dx * dx + dy * dy
    flat = int(np.argmax(dsq))
    i, j = divmod(flat, P.n)
    if i > j:
        i, j = j, i
    return i, j, float(dsq[i, j])
