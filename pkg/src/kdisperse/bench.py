"""Benchmark driver: run solve_exact over a suite, write CSV and figures.

The suite file is JSON: either a list of rows or ``{"rows": [...]}``, each
row ``{"n": int, "k": int, "seed": int, "shape": "valtr"|"regular"|"circle"}``
(shape defaults to valtr).  Failures are recorded in the row, not raised,
so a long suite always produces a complete table.
"""

from __future__ import annotations

import csv
import json
import math
import time
from pathlib import Path
from typing import Any

from .exact import SolveStats, solve_exact
from .generators import circle_polygon, regular_polygon, valtr_polygon
from .io import BadInstance
from .ladder import build_ladder

FIELDS = [
    "n",
    "k",
    "seed",
    "shape",
    "status",
    "radius",
    "radius_sq4",
    "centers",
    "ladder_size",
    "decide_calls",
    "decide_call_budget",
    "nodes_total",
    "nodes_max",
    "node_budget",
    "gen_seconds",
    "solve_seconds",
]


def load_suite(path: str | Path) -> list[dict[str, Any]]:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInstance(f"cannot read suite {path}: {exc}") from exc
    rows = obj.get("rows") if isinstance(obj, dict) else obj
    if not isinstance(rows, list):
        raise BadInstance("suite must be a list of rows or {'rows': [...]}")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, dict) or "n" not in row or "k" not in row:
            raise BadInstance(f"suite row {i} needs at least 'n' and 'k'")
        out.append(
            {
                "n": int(row["n"]),
                "k": int(row["k"]),
                "seed": int(row.get("seed", 0)),
                "shape": str(row.get("shape", "valtr")),
            }
        )
    return out


def _make_polygon(shape: str, n: int, seed: int):
    if shape == "valtr":
        return valtr_polygon(n, seed)
    if shape == "regular":
        return regular_polygon(n)
    if shape == "circle":
        return circle_polygon(n, seed)
    raise BadInstance(f"unknown shape {shape!r}")


def run_row(row: dict[str, Any], *, engine: str = "fast") -> dict[str, Any]:
    out: dict[str, Any] = {"seed": 0, "shape": "valtr", **row}
    n, k = row["n"], row["k"]
    try:
        t0 = time.perf_counter()
        P = _make_polygon(out["shape"], n, out["seed"])
        ladder = build_ladder(P)
        t1 = time.perf_counter()
        stats = SolveStats()
        best = solve_exact(P, k, engine=engine, ladder=ladder, stats=stats)
        t2 = time.perf_counter()
    except Exception as exc:  # recorded, not raised: keep the table complete
        out.update(status=f"error: {exc}")
        return out
    out.update(
        status="ok",
        radius=best.radius,
        radius_sq4=best.radius_sq4,
        centers=" ".join(map(str, best.centers)),
        ladder_size=stats.ladder_size,
        decide_calls=stats.decide_calls,
        decide_call_budget=math.ceil(math.log2(stats.ladder_size)) + 1,
        nodes_total=stats.total_nodes,
        nodes_max=max(stats.nodes_per_call, default=0),
        node_budget=n * (2**k),
        gen_seconds=round(t1 - t0, 6),
        solve_seconds=round(t2 - t1, 6),
    )
    return out


def run_suite(
    rows: list[dict[str, Any]],
    *,
    engine: str = "fast",
    csv_path: str | Path | None = None,
    figures: bool = False,
) -> list[dict[str, Any]]:
    results = [run_row(row, engine=engine) for row in rows]
    if csv_path is not None:
        with open(csv_path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=FIELDS, extrasaction="ignore")
            writer.writeheader()
            writer.writerows(results)
        if figures:
            _write_figures(results, Path(csv_path))
    return results


def _write_figures(results: list[dict[str, Any]], csv_path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ok = [r for r in results if r.get("status") == "ok"]
    if not ok:
        return
    ks = sorted({r["k"] for r in ok})

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for k in ks:
        pts = sorted((r["n"], r["solve_seconds"]) for r in ok if r["k"] == k)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o-", label=f"k={k}")
    ax.set_xlabel("n")
    ax.set_ylabel("solve seconds")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(csv_path.with_name(csv_path.stem + "_time.png"), dpi=120)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for k in ks:
        pts = sorted((r["n"], r["nodes_max"]) for r in ok if r["k"] == k)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o-", label=f"k={k} max/call")
    pts = sorted((r["n"], r["node_budget"]) for r in ok)
    ax.plot(
        [p[0] for p in pts],
        [p[1] for p in pts],
        "k--",
        alpha=0.6,
        label="budget n*2^k",
    )
    ax.set_xlabel("n")
    ax.set_ylabel("decision-search nodes")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(csv_path.with_name(csv_path.stem + "_nodes.png"), dpi=120)
    plt.close(fig)
