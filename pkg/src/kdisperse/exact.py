"""Optimal vertex dispersion: binary search over the distance ladder.

The optimum squared min-pairwise distance is always an element of the ladder
(it is the min over some pair of chosen vertices), so the search probes
ladder values with the feasibility test and keeps the window [lo, hi) of
indices that could still be optimal: a feasible probe raises lo to it, an
infeasible one lowers hi.  The window halves per probe; one extra confirming
call is needed only when the optimum turns out to be the smallest ladder
value, which no interior probe ever touches.  The smallest value is always
feasible — any k vertices have min pairwise distance at least the global
minimum — so the search cannot fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .decision import DecideStats, Packing, decide
from .errors import InvalidK
from .geometry import ConvexPolygon
from .ladder import DistanceLadder, build_ladder


@dataclass
class SolveStats:
    """Instrumentation for one solve_exact() call."""

    ladder_size: int = 0
    decide_calls: int = 0
    nodes_per_call: list[int] = field(default_factory=list)

    @property
    def total_nodes(self) -> int:
        return sum(self.nodes_per_call)


def solve_exact(
    P: ConvexPolygon,
    k: int,
    *,
    engine: Literal["fast", "naive"] = "fast",
    ladder: DistanceLadder | None = None,
    stats: SolveStats | None = None,
    parallel: bool = False,
    max_workers: int | None = None,
) -> Packing:
    """Largest ladder value t with a feasible k-packing, plus its witness.

    The returned radius_sq4 is exactly that ladder element; the max-min
    radius is sqrt(radius_sq4) / 2.  A prebuilt ladder may be passed to
    avoid recomputing it; its lo/hi cursors are updated in place as the
    candidate window shrinks.
    """
    n = P.n
    if k < 2 or k > n:
        raise InvalidK(k, 2, n)
    if ladder is None:
        ladder = build_ladder(P)
    values = ladder.values
    m = len(values)
    ladder.lo, ladder.hi = 0, m

    def probe(i: int) -> Packing | None:
        ds = DecideStats()
        pk = decide(
            P,
            k,
            float(values[i]),
            engine,
            stats=ds,
            parallel=parallel,
            max_workers=max_workers,
        )
        if stats is not None:
            stats.decide_calls += 1
            stats.nodes_per_call.append(ds.nodes)
        return pk

    if stats is not None:
        stats.ladder_size = m

    best: Packing | None = None
    while ladder.hi - ladder.lo > 1:
        mid = (ladder.lo + ladder.hi) // 2
        pk = probe(mid)
        if pk is not None:
            ladder.lo = mid
            best = pk
        else:
            ladder.hi = mid
    if best is None:
        # Window collapsed to the smallest value without a feasible probe.
        best = probe(ladder.lo)
        assert best is not None, "smallest ladder value must be feasible"
    return best
