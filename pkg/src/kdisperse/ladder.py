"""The candidate radius set: every optimum satisfies (2*r_max)^2 = some
pairwise squared distance, so optimizing means binary-searching this ladder."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import ConvexPolygon


@dataclass
class DistanceLadder:
    """Sorted distinct squared pairwise distances with search cursors.

    ``values`` is strictly increasing; ``witness[t]`` is one vertex pair
    (i, j), i < j, attaining ``values[t]``.  ``lo``/``hi`` are cursor indices
    owned by a single search driver (invariant 0 <= lo <= hi <= len(values)).
    Deduplication is exact float equality: near-equal distinct values stay
    distinct candidates, which is harmless.
    """

    values: np.ndarray
    witness: list[tuple[int, int]]
    lo: int = 0
    hi: int = field(default=0)

    def __len__(self) -> int:
        return int(self.values.shape[0])


def _pair_from_flat(flat: np.ndarray, n: int) -> list[tuple[int, int]]:
    """Invert row-major upper-triangle flattening: flat index -> (i, j), i<j."""
    # offsets[i] = index of pair (i, i+1); row i spans [offsets[i], offsets[i+1])
    i_arr = np.arange(n, dtype=np.int64)
    offsets = np.concatenate(([0], np.cumsum(n - 1 - i_arr[:-1])))
    rows = np.searchsorted(offsets, flat, side="right") - 1
    cols = flat - offsets[rows] + rows + 1
    return [(int(i), int(j)) for i, j in zip(rows, cols)]


def build_ladder(P: ConvexPolygon) -> DistanceLadder:
    """All unordered-pair squared distances, sorted and deduplicated."""
    n = P.n
    xs, ys = P.xs, P.ys
    chunks = []
    for i in range(n - 1):
        dx = xs[i + 1 :] - xs[i]
        dy = ys[i + 1 :] - ys[i]
        chunks.append(dx * dx + dy * dy)
    flat = np.concatenate(chunks)
    values, first = np.unique(flat, return_index=True)
    witness = _pair_from_flat(first.astype(np.int64), n)
    return DistanceLadder(values=values, witness=witness, lo=0, hi=int(values.shape[0]))
