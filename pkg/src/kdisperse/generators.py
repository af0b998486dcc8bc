"""Seeded instance generators.  All outputs are valid clockwise polygons."""

from __future__ import annotations

import numpy as np

from .geometry import ConvexPolygon, RejectedInput, validate_convex

#: Attempts before giving up on a seed whose raw sample fails validation
#: (rare: float collinearity can sneak in at large n).
_MAX_TRIES = 32


def regular_polygon(n: int, *, radius: float = 1.0) -> ConvexPolygon:
    """Regular n-gon, vertex 0 at the top (angle 90°), clockwise order."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    ang = np.pi / 2.0 - 2.0 * np.pi * np.arange(n) / n
    return validate_convex(np.column_stack((radius * np.cos(ang),
                                            radius * np.sin(ang))))


def circle_polygon(n: int, seed: int, *, radius: float = 1.0) -> ConvexPolygon:
    """n evenly spaced points on a circle with a seeded random phase.

    Even spacing keeps every triple far from collinear at any n, which the
    huge sublinearity instances need; the phase varies the coordinates.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    phase = np.random.default_rng(seed).uniform(0.0, 2.0 * np.pi)
    ang = phase - 2.0 * np.pi * np.arange(n) / n
    return validate_convex(np.column_stack((radius * np.cos(ang),
                                            radius * np.sin(ang))))


def _valtr_sample(n: int, rng: np.random.Generator) -> np.ndarray:
    """One draw of n points in convex position in the unit square.

    Random x-deltas and y-deltas that each sum to zero are paired up,
    sorted by angle, and walked; the walk closes into a convex cycle.
    """

    def deltas(coords: np.ndarray) -> np.ndarray:
        coords = np.sort(coords)
        lo, hi = coords[0], coords[-1]
        inner = coords[1:-1]
        side = rng.random(n - 2) < 0.5
        chain_a = np.concatenate(([lo], inner[side], [hi]))
        chain_b = np.concatenate(([lo], inner[~side], [hi]))
        return np.concatenate((np.diff(chain_a), -np.diff(chain_b)))

    dx = deltas(rng.random(n))
    dy = rng.permutation(deltas(rng.random(n)))
    order = np.argsort(np.arctan2(dy, dx))
    return np.cumsum(np.column_stack((dx[order], dy[order])), axis=0)


def valtr_polygon(n: int, seed: int) -> ConvexPolygon:
    """Seeded random polygon with n vertices in convex position.

    Samples are redrawn (with a derived seed) in the rare event the raw
    points fail strict-convexity validation in floating point.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    for attempt in range(_MAX_TRIES):
        rng = np.random.default_rng((seed, attempt))
        try:
            return validate_convex(_valtr_sample(n, rng))
        except RejectedInput:
            continue
    raise RuntimeError(f"no valid sample for n={n}, seed={seed} "
                       f"after {_MAX_TRIES} tries")
