"""Logarithmic-time 3-dispersion approximation with a 1/(2*sqrt(2)) bound.

Everything here reads only O(log n) vertices per query.  The building
blocks exploit one structural fact: on a strictly convex cycle, any linear
functional of the vertices (a coordinate, a cross product against a fixed
chord, a projection onto a fixed direction) is cyclically bitonic — one
maximal run up, one run down, with equal adjacent values possible only at
the two turning points.

The AccessCounter counts bisection steps: one tick per halving iteration of
any search loop.  Constant-cost boundary work (anchor reads, final tie
checks) is not ticked — it is exactly the part of the cost that does not
grow with n, and the counter exists to expose the logarithmic growth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .decision import Packing
from .geometry import ConvexPolygon, DegeneratePair, Reason, RejectedInput


class AccessCounter:
    """Counts bisection steps across the searches it is threaded through."""

    __slots__ = ("steps",)

    def __init__(self) -> None:
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1


@dataclass(frozen=True)
class ExtremeQuad:
    """Extreme vertex indices: min-x, max-y, max-x, min-y."""

    a: int
    b: int
    c: int
    d: int

    @property
    def distinct_count(self) -> int:
        return len({self.a, self.b, self.c, self.d})

    def distinct(self) -> list[int]:
        """The distinct extreme indices, ascending."""
        return sorted({self.a, self.b, self.c, self.d})


def _cyclic_peak(f: Callable[[int], float], n: int, counter: AccessCounter) -> int:
    """Index of the maximum of a cyclically bitonic sequence.

    Ties (a two-element plateau, always adjacent) resolve to the smaller
    index, with the wrapping plateau {n-1, 0} resolving to 0.

    The search keeps a window (a, b] known to contain the plateau entry q
    (the max whose cyclic predecessor is strictly smaller), along with
    f(a) and a flag for which run a sits on: ascending toward q, or
    descending away from the max.  Each step probes c = (a+b)//2, reads
    f(c) and f(c+1), and shrinks the window by half; the case analysis
    below is exhaustive because between a and q there is exactly one
    descent run and one valley.  The one configuration the window can
    never contain is a maximum at index 0 itself, which the final
    candidate comparison picks up instead.
    """
    f0 = f(0)
    f1 = f(1)
    if f1 == f0:
        # Adjacent equal values sit at a turning point: {0, 1} is the max
        # plateau or the min plateau; a third read tells which.
        if f(2) < f0:
            return 0  # max plateau {0, 1}, smaller index
        a, b = 1, n - 1
        fa = f1
        asc = True
    elif f1 > f0:
        a, b = 0, n - 1
        fa = f0
        asc = True
    else:
        a, b = 0, n - 1
        fa = f0
        asc = False

    q = -1
    while b - a > 1:
        counter.tick()
        c = (a + b) // 2
        fc = f(c)
        fc1 = f(c + 1)
        if fc1 == fc:
            if fc > fa:
                q = c  # max plateau {c, c+1}
                break
            # Valley pair {c, c+1} ahead of the max (asc) or before it.
            if asc:
                b = c
            else:
                a, fa, asc = c, fc, True
        elif fc1 > fc:
            if asc:
                if fc >= fa:
                    a, fa = c, fc
                else:
                    b = c  # second ascent, already past the max
            else:
                a, fa, asc = c, fc, True
        else:
            if asc:
                b = c
            else:
                if fc < fa:
                    a, fa = c, fc  # still on the same descent
                else:
                    b = c  # past the max on the wrapped descent
    if q < 0:
        q = b

    # Resolve plateaus and the only window-escaping case (max at 0).
    best = q
    fbest = f(q)
    for cand in ((q + 1) % n, 0):
        fcand = f(cand)
        if fcand > fbest or (fcand == fbest and cand < best):
            best, fbest = cand, fcand
    return best


def extreme_points(
    P: ConvexPolygon, counter: AccessCounter | None = None
) -> ExtremeQuad:
    """Locate min-x, max-y, max-x, min-y vertices in O(log n) each."""
    if counter is None:
        counter = AccessCounter()
    xs, ys = P.xs, P.ys
    n = P.n
    return ExtremeQuad(
        a=_cyclic_peak(lambda i: -float(xs[i]), n, counter),
        b=_cyclic_peak(lambda i: float(ys[i]), n, counter),
        c=_cyclic_peak(lambda i: float(xs[i]), n, counter),
        d=_cyclic_peak(lambda i: -float(ys[i]), n, counter),
    )


def _chains(n: int, u: int, v: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two boundary chains strictly between u and v.

    Each chain is (first_vertex, length) walking in index order from just
    past one endpoint to just before the other.
    """
    len1 = (v - u) % n - 1
    len2 = (u - v) % n - 1
    return ((u + 1) % n, len1), ((v + 1) % n, len2)


def farthest_from_chord(
    P: ConvexPolygon, u: int, v: int, counter: AccessCounter | None = None
) -> int:
    """Vertex farthest from the line through u and v, in O(log n).

    Per chain the unsigned cross product against the chord rises to a
    single peak (a parallel edge can tie only at the top), so a first-
    descent bisection finds each chain's peak; ties resolve to the
    smallest vertex index, across chains too.
    """
    if u == v:
        raise DegeneratePair(f"chord endpoints coincide: {u}")
    if counter is None:
        counter = AccessCounter()
    xs, ys = P.xs, P.ys
    n = P.n
    ux, uy = float(xs[u]), float(ys[u])
    ex, ey = float(xs[v]) - ux, float(ys[v]) - uy

    def height(i: int) -> float:
        val = ex * (float(ys[i]) - uy) - ey * (float(xs[i]) - ux)
        return -val if val < 0 else val

    best = -1
    best_h = -1.0
    for first, length in _chains(n, u, v):
        if length == 0:
            continue

        def g(t: int) -> float:
            return height((first + t) % n)

        lo, hi = 0, length - 1
        while lo < hi:
            counter.tick()
            mid = (lo + hi) // 2
            if g(mid + 1) <= g(mid):
                hi = mid
            else:
                lo = mid + 1
        idx = (first + lo) % n
        h = g(lo)
        if lo + 1 < length and g(lo + 1) == h:
            idx = min(idx, (first + lo + 1) % n)
        if h > best_h or (h == best_h and idx < best):
            best, best_h = idx, h
    return best


def bisector_offset(P: ConvexPolygon, u: int, v: int, i: int) -> float:
    """Signed offset of vertex i from the perpendicular bisector of uv.

    A positive multiple of the signed distance: (p - midpoint) . (v - u).
    """
    ux, uy = float(P.xs[u]), float(P.ys[u])
    vx, vy = float(P.xs[v]), float(P.ys[v])
    ex, ey = vx - ux, vy - uy
    mx, my = (ux + vx) / 2.0, (uy + vy) / 2.0
    return (float(P.xs[i]) - mx) * ex + (float(P.ys[i]) - my) * ey


def nearest_to_bisector(
    P: ConvexPolygon, u: int, v: int, counter: AccessCounter | None = None
) -> list[int]:
    """Bracketing vertices around the bisector of uv, at most two per chain.

    The bisector separates u from v, so it crosses each chain's portion of
    the boundary exactly once: signed offsets along a chain flip sign at
    most once.  One chain walks from u's side toward v's and sees offsets
    go negative-to-positive; the other walks v-to-u and sees the reverse,
    so its offsets are negated before the same bisection.  Offsets along a
    chain trace at most three monotone runs, so each chain's closest vertex
    is either one straddling the flip or the chain vertex next to u or v
    (the run entering an endpoint can slide under the flip gap when the uv
    edge is short).  Per chain the two closest of those at most four
    candidates are returned, in boundary order.
    """
    if u == v:
        raise DegeneratePair(f"bisector endpoints coincide: {u}")
    if counter is None:
        counter = AccessCounter()
    n = P.n
    out: list[int] = []
    for sign, (first, length) in zip((1.0, -1.0), _chains(n, u, v)):
        if length == 0:
            continue

        def h(t: int) -> float:
            return sign * bisector_offset(P, u, v, (first + t) % n)

        lo, hi = 0, length
        while lo < hi:
            counter.tick()
            mid = (lo + hi) // 2
            if h(mid) >= 0.0:
                hi = mid
            else:
                lo = mid + 1
        spots = {0, length - 1}
        if 0 < lo:
            spots.add(lo - 1)
        if lo < length:
            spots.add(lo)
        ranked = sorted(
            spots, key=lambda t: (abs(h(t)), (first + t) % n)
        )[:2]
        out.extend((first + t) % n for t in sorted(ranked))
    return out


@dataclass(frozen=True)
class PairCase:
    """Case evaluations for one unordered pair of extreme vertices."""

    u: int
    v: int
    r_l1_sq4: float
    witness1: tuple[int, int, int]
    r_l2_sq4: float
    witness2: tuple[int, int, int]


@dataclass(frozen=True)
class CaseRadii:
    """Unpruned per-case values, for inspection and tests.

    r1_sq4 is the best extreme-triple value (absent when fewer than three
    distinct extremes exist); pair_cases holds the chord (r_l1) and
    bisector (r_l2) values for every extreme pair.
    """

    r1_sq4: float | None
    r1_witness: tuple[int, int, int] | None
    pair_cases: list[PairCase]


def _triple_sq4(P: ConvexPolygon, a: int, b: int, c: int) -> float:
    return min(P.dsq(a, b), P.dsq(a, c), P.dsq(b, c))


def _best_triple(
    P: ConvexPolygon, extremes: list[int]
) -> tuple[float, tuple[int, int, int]]:
    best = -1.0
    witness: tuple[int, int, int] = (-1, -1, -1)
    for tri in itertools.combinations(extremes, 3):
        val = _triple_sq4(P, *tri)
        if val > best:
            best, witness = val, tri
    return best, witness


def case_radii(
    P: ConvexPolygon, counter: AccessCounter | None = None
) -> CaseRadii:
    """Evaluate every case for every extreme pair, without pruning."""
    if counter is None:
        counter = AccessCounter()
    ext = extreme_points(P, counter).distinct()
    r1_sq4: float | None = None
    r1_witness = None
    if len(ext) >= 3:
        r1_sq4, r1_witness = _best_triple(P, ext)
    pairs = []
    for u, v in itertools.combinations(ext, 2):
        e = farthest_from_chord(P, u, v, counter)
        w1 = (u, v, e)
        cands = nearest_to_bisector(P, u, v, counter)
        best2 = -1.0
        w2 = w1
        for fv in cands:
            val = _triple_sq4(P, u, v, fv)
            if val > best2:
                best2, w2 = val, (u, v, fv)
        pairs.append(
            PairCase(
                u=u,
                v=v,
                r_l1_sq4=_triple_sq4(P, *w1),
                witness1=w1,
                r_l2_sq4=best2,
                witness2=w2,
            )
        )
    return CaseRadii(r1_sq4=r1_sq4, r1_witness=r1_witness, pair_cases=pairs)


def approx_3(
    P: ConvexPolygon, counter: AccessCounter | None = None
) -> Packing:
    """3-dispersion within a factor 1/(2*sqrt(2)) of optimal, O(log n) reads.

    Evaluates the best extreme triple, then for each pair of distinct
    extreme vertices the farthest-from-chord and nearest-to-bisector
    completions, keeping the triple with the largest min pairwise squared
    distance.  A pair whose own distance cannot beat the current best is
    skipped: every completion of it is capped by that distance, so the
    returned maximum is unchanged and the vertex reads stay logarithmic.
    """
    if P.n < 3:
        raise RejectedInput(Reason.TOO_FEW, P.n, "approximation needs k=3 slots")
    if counter is None:
        counter = AccessCounter()
    if P.n == 3:
        return Packing(centers=(0, 1, 2), radius_sq4=_triple_sq4(P, 0, 1, 2))

    ext = extreme_points(P, counter).distinct()
    best = -1.0
    witness: tuple[int, int, int] | None = None
    if len(ext) >= 3:
        best, witness = _best_triple(P, ext)
    for u, v in itertools.combinations(ext, 2):
        if P.dsq(u, v) <= best:
            continue
        e = farthest_from_chord(P, u, v, counter)
        val = _triple_sq4(P, u, v, e)
        if val > best:
            best, witness = val, (u, v, e)
        for fv in nearest_to_bisector(P, u, v, counter):
            val = _triple_sq4(P, u, v, fv)
            if val > best:
                best, witness = val, (u, v, fv)
    assert witness is not None, "at least one pair must produce a triple"
    return Packing(centers=tuple(sorted(witness)), radius_sq4=best)
