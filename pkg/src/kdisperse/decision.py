"""Feasibility search: can k disks of radius r sit on distinct vertices?

Centers must be polygon vertices and every pair of chosen centers must be at
squared distance >= four_r_sq (tangency counts as non-overlapping, so the
comparison is closed).  The search tries each start vertex in index order and
grows the chosen set outward as a depth-first 2-way tree: at every node it
first tries the next admissible vertex clockwise of the clockwise frontier,
then the next one counter-clockwise of the counter-clockwise frontier,
backtracking on dead ends.  The first success — smallest start index,
clockwise branch preferred — is the deterministic witness.

Two interchangeable engines locate the next admissible vertex: a naive linear
boundary walk, and a fast engine that intersects precomputed per-vertex
candidate intervals with the remaining arc.  Both implement the exact same
contract and must return identical results on every input.
"""

from __future__ import annotations

import math
import os
import sys
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import InvalidK
from .geometry import ConvexPolygon

CW: Literal["cw"] = "cw"
CCW: Literal["ccw"] = "ccw"
Direction = Literal["cw", "ccw"]

#: Vertices validated per vectorized slice while walking an interval, so a
#: hit near the frontier never pays for the interval's full length.
_VALIDATE_CHUNK = 256


@dataclass(frozen=True)
class Packing:
    """A feasible placement: distinct vertex indices, ascending.

    ``radius_sq4`` is (2r)^2 for the packed radius r; the min pairwise
    squared distance over ``centers`` is >= ``radius_sq4``.
    """

    centers: tuple[int, ...]
    radius_sq4: float

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_sq4) / 2.0


def min_pairwise_sq(P: ConvexPolygon, centers) -> float:
    """Smallest squared distance over all pairs of the given vertices."""
    idx = list(centers)
    best = math.inf
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            best = min(best, P.dsq(idx[a], idx[b]))
    return best


@dataclass
class DecideStats:
    """Instrumentation for one decide() call."""

    nodes: int = 0


@dataclass(frozen=True)
class SearchState:
    """One node of the 2-way tree.

    ``start`` is the first placed center; ``cw`` / ``ccw`` are the placed
    centers most clockwise / counter-clockwise of it.  All placed centers lie
    on the closed arc from ccw through start to cw; candidates for the next
    disk lie strictly inside the complementary open arc from cw to ccw.
    """

    start: int
    cw: int
    ccw: int
    placed: list[int]


class CandidateTable:
    """Per-vertex intervals of admissible partners for one fixed threshold.

    For each vertex s the table stores the set { u != s : dsq(s, u) >=
    four_r_sq } as maximal runs in the cyclic order starting just after s.
    Runs are kept as offset pairs relative to s (offsets 1..n-1, ascending),
    which is the form the arc intersection in next_center needs.
    """

    __slots__ = ("four_r_sq", "n", "_starts", "_ends")

    def __init__(self, four_r_sq: float, n: int,
                 starts: list[np.ndarray], ends: list[np.ndarray]):
        self.four_r_sq = four_r_sq
        self.n = n
        self._starts = starts
        self._ends = ends

    def intervals(self, s: int) -> list[tuple[int, int]]:
        """Cyclic [from, to] vertex-index intervals of s's admissible set."""
        n = self.n
        return [
            (int((s + a) % n), int((s + b) % n))
            for a, b in zip(self._starts[s], self._ends[s])
        ]

    def interval_count(self, s: int) -> int:
        return len(self._starts[s])

    def contains(self, s: int, u: int) -> bool:
        """Membership of u in s's admissible set, by offset binary search."""
        off = (u - s) % self.n
        if off == 0:
            return False
        starts = self._starts[s]
        i = int(np.searchsorted(starts, off, side="right")) - 1
        return i >= 0 and off <= int(self._ends[s][i])


def precompute_candidates(P: ConvexPolygon, four_r_sq: float) -> CandidateTable:
    """Build the candidate table in O(n^2): one linear pass per vertex."""
    if four_r_sq < 0:
        raise ValueError(f"four_r_sq must be >= 0, got {four_r_sq}")
    n = P.n
    starts: list[np.ndarray] = []
    ends: list[np.ndarray] = []
    for s in range(n):
        dx = P.xs - P.xs[s]
        dy = P.ys - P.ys[s]
        mask = dx * dx + dy * dy >= four_r_sq
        mask[s] = False
        # Reorder to offsets 1..n-1 relative to s, then take run boundaries.
        m = np.roll(mask, -s)[1:]
        edges = np.diff(np.concatenate(([False], m, [False])).view(np.int8))
        starts.append(np.flatnonzero(edges == 1) + 1)
        ends.append(np.flatnonzero(edges == -1))
    return CandidateTable(four_r_sq, n, starts, ends)


def _arc_window(state: SearchState, n: int) -> tuple[int, int]:
    """Open offset window (relative to start) holding all candidates."""
    s = state.start
    ocw = (state.cw - s) % n
    occw = (state.ccw - s) % n
    if occw == 0:  # ccw frontier still at start: arc extends the full cycle
        occw = n
    return ocw, occw


def next_center_naive(
    P: ConvexPolygon, state: SearchState, direction: Direction, four_r_sq: float
) -> int | None:
    """Reference implementation: linear walk of the remaining open arc."""
    n = P.n
    s = state.start
    ocw, occw = _arc_window(state, n)
    if direction == CW:
        offsets = range(ocw + 1, occw)
    else:
        offsets = range(occw - 1, ocw, -1)
    for off in offsets:
        u = (s + off) % n
        if all(P.dsq(u, p) >= four_r_sq for p in state.placed):
            return u
    return None


def _first_admissible(
    P: ConvexPolygon,
    base: int,
    lo: int,
    hi: int,
    px: np.ndarray,
    py: np.ndarray,
    four_r_sq: float,
    reverse: bool,
) -> int | None:
    """First vertex (base+lo .. base+hi mod n) admissible against all placed.

    Walks forward for the clockwise direction, backward when ``reverse``;
    validates a bounded slice at a time so near hits stay cheap.
    """
    n = P.n
    while lo <= hi:
        if reverse:
            a, b = max(lo, hi - _VALIDATE_CHUNK + 1), hi
            hi = a - 1
        else:
            a, b = lo, min(hi, lo + _VALIDATE_CHUNK - 1)
            lo = b + 1
        idx = (base + np.arange(a, b + 1)) % n
        ux = P.xs[idx]
        uy = P.ys[idx]
        ok = np.ones(idx.shape, dtype=bool)
        for j in range(len(px)):
            dx = ux - px[j]
            dy = uy - py[j]
            ok &= dx * dx + dy * dy >= four_r_sq
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(idx[hits[-1] if reverse else hits[0]])
    return None


def next_center(
    P: ConvexPolygon,
    state: SearchState,
    direction: Direction,
    four_r_sq: float,
    table: CandidateTable,
) -> int | None:
    """Fast engine: walk the frontier vertex's intervals clipped to the arc.

    Same contract as next_center_naive.  Every candidate the naive walk
    would test and reject against the frontier itself is absent from the
    frontier's intervals, so only the remaining ones are validated against
    the placed set.
    """
    if table.four_r_sq != four_r_sq:
        raise ValueError("candidate table built for a different threshold")
    n = P.n
    ocw, occw = _arc_window(state, n)
    if occw - ocw <= 1:
        return None
    pidx = np.asarray(state.placed, dtype=np.intp)
    px = P.xs[pidx]
    py = P.ys[pidx]

    if direction == CW:
        f = state.cw
        width = occw - ocw - 1  # arc in offsets relative to f: [1, width]
        for a, b in zip(table._starts[f], table._ends[f]):
            if a > width:
                break
            u = _first_admissible(
                P, f, int(a), min(int(b), width), px, py, four_r_sq, reverse=False
            )
            if u is not None:
                return u
        return None

    g = state.ccw
    lo_g = ocw + n - occw + 1  # arc in offsets relative to g: [lo_g, n-1]
    starts_g = table._starts[g]
    ends_g = table._ends[g]
    for i in range(len(starts_g) - 1, -1, -1):
        a, b = int(starts_g[i]), int(ends_g[i])
        if b < lo_g:
            break
        u = _first_admissible(
            P, g, max(a, lo_g), b, px, py, four_r_sq, reverse=True
        )
        if u is not None:
            return u
    return None


def _ensure_stack_depth(k: int) -> None:
    """The descent recurses once per placed disk; make room for large k."""
    needed = k + 128
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def _search_fast(
    n: int,
    xs: list[float],
    ys: list[float],
    iv_starts: list[list[int]],
    iv_ends: list[list[int]],
    k: int,
    four_r_sq: float,
    start: int,
) -> tuple[tuple[int, ...] | None, int]:
    """Depth-first 2-way search rooted at one start vertex (fast engine).

    Returns (centers or None, nodes created).  Exploration order is the
    contract one — clockwise branch first, a vertex reachable from both
    directions branched on once — with two outcome-preserving cuts:

    * capacity: an open arc with fewer vertices than disks still to place
      cannot succeed;
    * failure memo: the subtree outcome is a pure function of (placed set,
      frontiers), so a state that already failed is not re-explored.  Only
      failed states are memoized, which leaves the first success — and with
      it the reported witness — exactly where the uncut traversal finds it.

    The candidate walk is an interval merge: when a position fails the
    distance test against some placed center p, the walk jumps straight to
    the boundary of p's next admissible interval, skipping p's entire
    exclusion run.  Walk positions are monotone in every placed center's
    offset frame (candidates lie strictly between the frontiers, placed
    centers outside), so the jumps never wrap and an exhausted interval
    table proves nothing further ahead can succeed.
    """
    placed = [start]
    px = [xs[start]]
    py = [ys[start]]
    nodes = 1
    failed: set = set()
    t = four_r_sq
    bisect = bisect_right

    def next_cw(lo_off: int, hi_off: int) -> int | None:
        # First admissible vertex at start-offsets lo_off..hi_off, ascending.
        j = len(placed)
        o = lo_off
        while o <= hi_off:
            u = start + o
            if u >= n:
                u -= n
            ux = xs[u]
            uy = ys[u]
            i = j - 1
            while i >= 0:
                dx = ux - px[i]
                dy = uy - py[i]
                if dx * dx + dy * dy < t:
                    break
                i -= 1
            if i < 0:
                return u
            p = placed[i]
            off_p = u - p
            if off_p < 0:
                off_p += n
            sp = iv_starts[p]
            idx = bisect(sp, off_p)
            if idx == len(sp):
                return None
            o += sp[idx] - off_p
        return None

    def next_ccw(lo_off: int, hi_off: int) -> int | None:
        # First admissible vertex at start-offsets hi_off..lo_off, descending.
        j = len(placed)
        o = hi_off
        while o >= lo_off:
            u = start + o
            if u >= n:
                u -= n
            ux = xs[u]
            uy = ys[u]
            i = j - 1
            while i >= 0:
                dx = ux - px[i]
                dy = uy - py[i]
                if dx * dx + dy * dy < t:
                    break
                i -= 1
            if i < 0:
                return u
            p = placed[i]
            off_p = u - p
            if off_p < 0:
                off_p += n
            sp = iv_starts[p]
            idx = bisect(sp, off_p) - 1
            if idx < 0:
                return None
            o -= off_p - iv_ends[p][idx]
        return None

    def descend(cw: int, ccw: int) -> bool:
        nonlocal nodes
        j = len(placed)
        if j == k:
            return True
        ocw = (cw - start) % n
        occw = (ccw - start) % n
        if occw == 0:
            occw = n
        if occw - ocw - 1 < k - j:
            return False
        key = (cw, ccw, frozenset(placed))
        if key in failed:
            return False
        first = next_cw(ocw + 1, occw - 1)
        if first is not None:
            nodes += 1
            placed.append(first)
            px.append(xs[first])
            py.append(ys[first])
            if descend(first, ccw):
                return True
            placed.pop()
            px.pop()
            py.pop()
        second = next_ccw(ocw + 1, occw - 1)
        if second is not None and second != first:
            nodes += 1
            placed.append(second)
            px.append(xs[second])
            py.append(ys[second])
            if descend(cw, second):
                return True
            placed.pop()
            px.pop()
            py.pop()
        failed.add(key)
        return False

    if descend(start, start):
        return tuple(placed), nodes
    return None, nodes


def _search_naive(
    P: ConvexPolygon,
    dsq_rows: list[list[float]] | None,
    k: int,
    four_r_sq: float,
    start: int,
) -> tuple[tuple[int, ...] | None, int]:
    """Reference descent: same traversal, candidates by plain linear walk.

    No memo, no capacity cut — this is the independently simple engine the
    fast one is differentially tested against.
    """
    n = P.n
    placed = [start]
    nodes = 1

    def walk(offsets: range) -> int | None:
        for off in offsets:
            u = (start + off) % n
            if dsq_rows is not None:
                row = dsq_rows[u]
                if all(row[p] >= four_r_sq for p in placed):
                    return u
            elif all(P.dsq(u, p) >= four_r_sq for p in placed):
                return u
        return None

    def descend(cw: int, ccw: int) -> bool:
        nonlocal nodes
        if len(placed) == k:
            return True
        ocw = (cw - start) % n
        occw = (ccw - start) % n
        if occw == 0:
            occw = n
        first = walk(range(ocw + 1, occw))
        if first is not None:
            nodes += 1
            placed.append(first)
            if descend(first, ccw):
                return True
            placed.pop()
        second = walk(range(occw - 1, ocw, -1))
        if second is not None and second != first:
            nodes += 1
            placed.append(second)
            if descend(cw, second):
                return True
            placed.pop()
        return False

    if descend(start, start):
        return tuple(placed), nodes
    return None, nodes


#: Build the full squared-distance matrix for the naive engine only below
#: this size; above it, fall back to on-the-fly distances.
_NAIVE_MATRIX_MAX = 2048


def _run_starts(
    P: ConvexPolygon,
    k: int,
    four_r_sq: float,
    engine: str,
    lo: int,
    hi: int,
) -> tuple[tuple[int, ...] | None, int]:
    """Run the searches rooted at starts [lo, hi); first success wins."""
    total = 0
    if engine == "fast":
        table = precompute_candidates(P, four_r_sq)
        iv_starts = [a.tolist() for a in table._starts]
        iv_ends = [a.tolist() for a in table._ends]
        xs = P.xs.tolist()
        ys = P.ys.tolist()
        for s in range(lo, hi):
            centers, nodes = _search_fast(
                P.n, xs, ys, iv_starts, iv_ends, k, four_r_sq, s
            )
            total += nodes
            if centers is not None:
                return centers, total
    else:
        rows = None
        if P.n <= _NAIVE_MATRIX_MAX:
            dx = P.xs[:, None] - P.xs[None, :]
            dy = P.ys[:, None] - P.ys[None, :]
            rows = (dx * dx + dy * dy).tolist()
        for s in range(lo, hi):
            centers, nodes = _search_naive(P, rows, k, four_r_sq, s)
            total += nodes
            if centers is not None:
                return centers, total
    return None, total


def _decide_range(args) -> tuple[tuple[int, ...] | None, int]:
    """Process-pool worker around _run_starts."""
    xs, ys, k, four_r_sq, engine, lo, hi = args
    _ensure_stack_depth(k)
    P = ConvexPolygon(xs, ys)
    return _run_starts(P, k, four_r_sq, engine, lo, hi)


def decide(
    P: ConvexPolygon,
    k: int,
    four_r_sq: float,
    engine: Literal["fast", "naive"] = "fast",
    *,
    stats: DecideStats | None = None,
    parallel: bool = False,
    max_workers: int | None = None,
) -> Packing | None:
    """Feasibility of k centers with min pairwise squared distance >= four_r_sq.

    Returns a witness Packing, or None when infeasible.  The witness is
    deterministic: smallest feasible start vertex, clockwise-first descent.
    With ``parallel=True`` the independent root searches are partitioned
    across processes; results are reduced in start order, so the verdict and
    witness match the sequential ones.
    """
    n = P.n
    if k < 1 or k > n:
        raise InvalidK(k, 1, n)
    if four_r_sq < 0:
        raise ValueError(f"four_r_sq must be >= 0, got {four_r_sq}")
    if engine not in ("fast", "naive"):
        raise ValueError(f"unknown engine {engine!r}")

    if k == 1:
        if stats is not None:
            stats.nodes += 1
        return Packing(centers=(0,), radius_sq4=four_r_sq)

    _ensure_stack_depth(k)
    if parallel and n > 1:
        workers = max_workers or os.cpu_count() or 1
        chunk = max(1, -(-n // (workers * 4)))
        tasks = [
            (P.xs, P.ys, k, four_r_sq, engine, lo, min(lo + chunk, n))
            for lo in range(0, n, chunk)
        ]
        total = 0
        found: tuple[int, ...] | None = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_decide_range, t) for t in tasks]
            for fut in futures:
                centers, nodes = fut.result()
                total += nodes
                if centers is not None:
                    found = centers
                    for other in futures:
                        other.cancel()
                    break
        if stats is not None:
            stats.nodes += total
        if found is None:
            return None
        return Packing(centers=tuple(sorted(found)), radius_sq4=four_r_sq)

    centers, total = _run_starts(P, k, four_r_sq, engine, 0, n)
    if stats is not None:
        stats.nodes += total
    if centers is None:
        return None
    return Packing(centers=tuple(sorted(centers)), radius_sq4=four_r_sq)
