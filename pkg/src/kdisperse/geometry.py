"""Planar primitives for vertex-restricted disk packing.

Conventions used across the package:

* Polygons are stored in **clockwise** vertex order (counter-clockwise input
  is reversed on validation).  "Clockwise from index i" always means walking
  toward increasing index mod n.
* All distance logic works on *squared* distances.  Feasibility thresholds
  are drawn from the set of stored pairwise squared distances, so comparisons
  are exact float comparisons -- no epsilon anywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

CLOCKWISE = -1
COLLINEAR = 0
COUNTERCLOCKWISE = 1


class Point(NamedTuple):
    x: float
    y: float


class Reason(enum.Enum):
    """Why validate_convex rejected its input."""

    TOO_FEW = "too_few"
    DUPLICATE = "duplicate"
    COLLINEAR = "collinear"
    NOT_CONVEX = "not_convex"


class RejectedInput(ValueError):
    """Input point list is not a strictly convex cycle.

    ``reason`` classifies the defect and ``index`` is the first input index
    at which it is detected (for TOO_FEW, the input length).
    """

    def __init__(self, reason: Reason, index: int, detail: str = ""):
        self.reason = reason
        self.index = index
        msg = f"{reason.value} at index {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DegeneratePair(ValueError):
    """Two coincident points where distinct ones are required."""


def squared_distance(p: Sequence[float], q: Sequence[float]) -> float:
    """(p.x-q.x)^2 + (p.y-q.y)^2; symmetric, zero iff p == q."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def orientation(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> int:
    """Sign of the cross product (b-a) x (c-a).

    Returns COUNTERCLOCKWISE (+1), CLOCKWISE (-1) or COLLINEAR (0); collinear
    iff the cross product is exactly zero.
    """
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if cross > 0.0:
        return COUNTERCLOCKWISE
    if cross < 0.0:
        return CLOCKWISE
    return COLLINEAR


@dataclass(frozen=True)
class Line:
    """Line through ``anchor`` with a nonzero ``direction`` vector."""

    anchor: Point
    direction: tuple[float, float]

    def __post_init__(self) -> None:
        dx, dy = self.direction
        if dx * dx + dy * dy == 0.0:
            raise DegeneratePair("line direction must be nonzero")

    @classmethod
    def through(cls, p: Sequence[float], q: Sequence[float]) -> "Line":
        if p[0] == q[0] and p[1] == q[1]:
            raise DegeneratePair(f"cannot span a line through coincident points {tuple(p)}")
        return cls(Point(p[0], p[1]), (q[0] - p[0], q[1] - p[1]))


def signed_distance_to_line(line: Line, p: Sequence[float]) -> float:
    """Perpendicular distance from ``p`` to ``line``, signed by side.

    The sign convention is coordinate-fixed rather than direction-relative:
    the unit normal is chosen with positive y component (positive x when the
    line is vertical), so points above a horizontal line are positive and
    points left of a vertical line are negative.  Zero iff ``p`` lies on the
    line.
    """
    dx, dy = line.direction
    nx, ny = -dy, dx
    if ny < 0.0 or (ny == 0.0 and nx < 0.0):
        nx, ny = -nx, -ny
    num = (p[0] - line.anchor.x) * nx + (p[1] - line.anchor.y) * ny
    return num / math.hypot(nx, ny)


class ConvexPolygon:
    """Strictly convex clockwise vertex cycle.

    Construct through :func:`validate_convex`; coordinates are held in
    read-only numpy arrays so big instances avoid per-vertex objects.
    """

    __slots__ = ("xs", "ys", "n", "_verts")

    def __init__(self, xs: np.ndarray, ys: np.ndarray):
        xs = np.ascontiguousarray(xs, dtype=np.float64)
        ys = np.ascontiguousarray(ys, dtype=np.float64)
        xs.flags.writeable = False
        ys.flags.writeable = False
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "n", int(xs.shape[0]))
        object.__setattr__(self, "_verts", None)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("ConvexPolygon is immutable")

    def __len__(self) -> int:
        return self.n

    def vertex(self, i: int) -> Point:
        return Point(float(self.xs[i]), float(self.ys[i]))

    @property
    def vertices(self) -> tuple[Point, ...]:
        if self._verts is None:
            verts = tuple(Point(float(x), float(y)) for x, y in zip(self.xs, self.ys))
            object.__setattr__(self, "_verts", verts)
        return self._verts

    def dsq(self, i: int, j: int) -> float:
        dx = self.xs[i] - self.xs[j]
        dy = self.ys[i] - self.ys[j]
        return float(dx * dx + dy * dy)

    def __repr__(self) -> str:
        return f"ConvexPolygon(n={self.n})"


def _first_duplicate_index(xs: np.ndarray, ys: np.ndarray) -> int | None:
    """Smallest index j whose point coincides exactly with an earlier one."""
    order = np.lexsort((ys, xs))
    sx, sy = xs[order], ys[order]
    same = (sx[1:] == sx[:-1]) & (sy[1:] == sy[:-1])
    if not same.any():
        return None
    pos = np.flatnonzero(same)
    return int(np.maximum(order[pos], order[pos + 1]).min())


def _sign_blocks(d: np.ndarray) -> int:
    """Number of maximal constant-sign runs in the cyclic nonzero sign pattern."""
    signs = np.sign(d)
    signs = signs[signs != 0]
    if signs.size == 0:
        return 0
    changes = int((signs != np.roll(signs, 1)).sum())
    return max(changes, 1)


def validate_convex(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Check a point list is a strictly convex cycle and normalize it.

    Clockwise input is accepted as-is; counter-clockwise input is reversed.
    Raises :class:`RejectedInput` naming the first offending input index for
    anything else: fewer than 3 points, duplicate points, a collinear triple,
    or a non-convex (reflex or self-winding) cycle.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    m = len(pts)
    if m < 3:
        raise RejectedInput(Reason.TOO_FEW, m, "need at least 3 points")
    xs = np.array([p[0] for p in pts], dtype=np.float64)
    ys = np.array([p[1] for p in pts], dtype=np.float64)
    if not (np.isfinite(xs).all() and np.isfinite(ys).all()):
        bad = int(np.flatnonzero(~(np.isfinite(xs) & np.isfinite(ys)))[0])
        raise RejectedInput(Reason.NOT_CONVEX, bad, "non-finite coordinate")

    dup = _first_duplicate_index(xs, ys)
    if dup is not None:
        raise RejectedInput(Reason.DUPLICATE, dup)

    # cross product of consecutive edges at every cyclic triple (i, i+1, i+2)
    ex = np.roll(xs, -1) - xs
    ey = np.roll(ys, -1) - ys
    cross = ex * np.roll(ey, -1) - ey * np.roll(ex, -1)
    zero = cross == 0.0
    if zero.any():
        raise RejectedInput(Reason.COLLINEAR, int(np.flatnonzero(zero)[0]))
    pos = bool((cross > 0.0).any())
    neg = bool((cross < 0.0).any())
    if pos and neg:
        # dominant orientation by signed area; first triple turning against it
        area2 = float(np.sum(xs * np.roll(ys, -1) - np.roll(xs, -1) * ys))
        against = cross > 0.0 if area2 < 0.0 else cross < 0.0
        raise RejectedInput(Reason.NOT_CONVEX, int(np.flatnonzero(against)[0]), "reflex turn")

    # all turns agree; reject self-winding cycles (e.g. star polygons walked
    # twice around): a simple convex cycle is bitonic in both coordinates,
    # so the edge deltas form exactly 2 cyclic sign blocks per axis
    if _sign_blocks(ex) > 2 or _sign_blocks(ey) > 2:
        dblocks = _sign_blocks(ex)
        axis = ex if dblocks > 2 else ey
        signs = np.sign(axis)
        nz = np.flatnonzero(signs)
        flips = nz[signs[nz] != np.roll(signs[nz], 1)]
        idx = int(flips[2]) if flips.size > 2 else 0
        raise RejectedInput(Reason.NOT_CONVEX, idx, "winding > 1")

    if pos:  # counter-clockwise input: normalize by reversal
        xs, ys = xs[::-1].copy(), ys[::-1].copy()
    return ConvexPolygon(xs, ys)


def diameter(P: ConvexPolygon) -> tuple[int, int, float]:
    """Farthest vertex pair by rotating calipers, O(n).

    Returns ``(i, j, d_sq)`` with ``i < j``.
    """
    n = P.n
    # work on the counter-clockwise view w_t = v_{(n-t) mod n}
    def orig(t: int) -> int:
        return (n - t) % n

    wx = np.concatenate((P.xs[:1], P.xs[:0:-1]))
    wy = np.concatenate((P.ys[:1], P.ys[:0:-1]))

    def edge_cross(i: int, j: int) -> float:
        # cross of edge_i and edge_j of the ccw view
        i1, j1 = (i + 1) % n, (j + 1) % n
        return float((wx[i1] - wx[i]) * (wy[j1] - wy[j]) - (wy[i1] - wy[i]) * (wx[j1] - wx[j]))

    def wdsq(i: int, j: int) -> float:
        dx = wx[i] - wx[j]
        dy = wy[i] - wy[j]
        return float(dx * dx + dy * dy)

    best = (-1.0, 0, 0)
    j = 1
    for i in range(n):
        while edge_cross(i, j) > 0.0:
            j = (j + 1) % n
        for cand in (j, (j + 1) % n):
            for anchor in (i, (i + 1) % n):
                d = wdsq(anchor, cand)
                if d > best[0]:
                    best = (d, anchor, cand)
    d, ti, tj = best
    a, b = orig(ti), orig(tj)
    if a > b:
        a, b = b, a
    return a, b, d
