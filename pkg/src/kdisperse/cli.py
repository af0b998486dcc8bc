"""Command-line surface.

Subcommands: solve, approx, decide, oracle, gen, render, bench.
Exit codes: 0 ok, 2 unusable input (files, geometry), 3 bad parameters.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .approx3 import AccessCounter, approx_3
from .bench import load_suite, run_suite
from .decision import DecideStats, decide
from .errors import InvalidK, TooLarge
from .exact import SolveStats, solve_exact
from .generators import circle_polygon, regular_polygon, valtr_polygon
from .geometry import RejectedInput, validate_convex
from .io import BadInstance, ResultRecord, dump_instance, load_instance, load_result
from .render import packing_svg

OK, BAD_INPUT, BAD_PARAMS = 0, 2, 3


def _fail(code: int, msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _load_polygon(path: str):
    return validate_convex(load_instance(path))


def _emit(record: ResultRecord, out: str | None) -> None:
    text = record.to_json()
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        P = _load_polygon(args.instance)
    except (BadInstance, RejectedInput) as exc:
        return _fail(BAD_INPUT, str(exc))
    stats = SolveStats()
    try:
        t0 = time.perf_counter()
        best = solve_exact(
            P, args.k, engine=args.engine, stats=stats, parallel=args.parallel
        )
        wall = time.perf_counter() - t0
    except (InvalidK, ValueError) as exc:
        return _fail(BAD_PARAMS, str(exc))
    _emit(
        ResultRecord(
            algorithm=f"exact[{args.engine}]",
            k=args.k,
            radius=best.radius,
            radius_sq4=best.radius_sq4,
            centers=best.centers,
            decide_calls=stats.decide_calls,
            nodes=stats.total_nodes,
            wall_time=round(wall, 6),
        ),
        args.out,
    )
    return OK


def cmd_approx(args: argparse.Namespace) -> int:
    try:
        P = _load_polygon(args.instance)
    except (BadInstance, RejectedInput) as exc:
        return _fail(BAD_INPUT, str(exc))
    counter = AccessCounter()
    t0 = time.perf_counter()
    best = approx_3(P, counter)
    wall = time.perf_counter() - t0
    _emit(
        ResultRecord(
            algorithm="approx3",
            k=3,
            radius=best.radius,
            radius_sq4=best.radius_sq4,
            centers=best.centers,
            accesses=counter.steps,
            wall_time=round(wall, 6),
        ),
        args.out,
    )
    return OK


def cmd_decide(args: argparse.Namespace) -> int:
    try:
        P = _load_polygon(args.instance)
    except (BadInstance, RejectedInput) as exc:
        return _fail(BAD_INPUT, str(exc))
    if args.four_r_sq is not None:
        four_r_sq = args.four_r_sq
    elif args.r is not None:
        four_r_sq = 4.0 * args.r * args.r
    else:
        return _fail(BAD_PARAMS, "decide needs --r or --four-r-sq")
    stats = DecideStats()
    try:
        packing = decide(
            P, args.k, four_r_sq, engine=args.engine, stats=stats,
            parallel=args.parallel,
        )
    except (InvalidK, ValueError) as exc:
        return _fail(BAD_PARAMS, str(exc))
    print(
        json.dumps(
            {
                "k": args.k,
                "four_r_sq": four_r_sq,
                "feasible": packing is not None,
                "centers": list(packing.centers) if packing else None,
                "nodes": stats.nodes,
            },
            indent=2,
        )
    )
    return OK


def cmd_oracle(args: argparse.Namespace) -> int:
    from .oracle import brute_force_kdispersion

    try:
        points = load_instance(args.instance)
    except BadInstance as exc:
        return _fail(BAD_INPUT, str(exc))
    try:
        t0 = time.perf_counter()
        best = brute_force_kdispersion(points, args.k)
        wall = time.perf_counter() - t0
    except (InvalidK, TooLarge) as exc:
        return _fail(BAD_PARAMS, str(exc))
    _emit(
        ResultRecord(
            algorithm="oracle",
            k=args.k,
            radius=best.radius,
            radius_sq4=best.radius_sq4,
            centers=best.centers,
            wall_time=round(wall, 6),
        ),
        args.out,
    )
    return OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 3:
        return _fail(BAD_PARAMS, f"need n >= 3, got {args.n}")
    try:
        if args.shape == "valtr":
            P = valtr_polygon(args.n, args.seed)
        elif args.shape == "regular":
            P = regular_polygon(args.n)
        else:
            P = circle_polygon(args.n, args.seed)
    except RuntimeError as exc:
        return _fail(BAD_PARAMS, str(exc))
    pts = list(zip(P.xs.tolist(), P.ys.tolist()))
    text = dump_instance(
        pts, name=f"{args.shape}-{args.n}-{args.seed}", seed=args.seed
    )
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(text)
    return OK


def cmd_render(args: argparse.Namespace) -> int:
    try:
        points = load_instance(args.infile)
        result = load_result(args.result)
    except BadInstance as exc:
        return _fail(BAD_INPUT, str(exc))
    n = len(points)
    centers = result.centers
    if not centers or len(set(centers)) != len(centers):
        return _fail(BAD_INPUT, "result has empty or duplicate centers")
    if any(not (0 <= c < n) for c in centers):
        return _fail(BAD_INPUT, "result centers out of range for this instance")
    if not math.isfinite(result.radius) or result.radius < 0:
        return _fail(BAD_INPUT, "result radius is not renderable")
    if len(centers) > 1:
        dmin = min(
            (points[a][0] - points[b][0]) ** 2 + (points[a][1] - points[b][1]) ** 2
            for i, a in enumerate(centers)
            for b in centers[i + 1 :]
        )
        if abs(dmin - result.radius_sq4) > 1e-9 * max(1.0, dmin):
            return _fail(
                BAD_INPUT,
                "result does not match instance: min center distance "
                f"{dmin} vs recorded {result.radius_sq4}",
            )
    Path(args.out).write_text(packing_svg(points, centers, result.radius) + "\n")
    print(f"wrote {args.out}", file=sys.stderr)
    return OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        rows = load_suite(args.spec)
    except BadInstance as exc:
        return _fail(BAD_INPUT, str(exc))
    results = run_suite(
        rows, engine=args.engine, csv_path=args.out, figures=args.out is not None
    )
    for r in results:
        print(
            f"n={r['n']} k={r['k']} seed={r['seed']} {r['status']}"
            f" radius={r.get('radius', '-')}"
            f" calls={r.get('decide_calls', '-')}"
            f" nodes={r.get('nodes_total', '-')}"
            f" t={r.get('solve_seconds', '-')}s"
        )
    if args.out:
        print(f"wrote {args.out}", file=sys.stderr)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kdisperse",
        description="max-min k-dispersion on convex-position points",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact solver")
    p.add_argument("instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--out", help="also write the result JSON here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("approx", help="k=3 approximation")
    p.add_argument("instance")
    p.add_argument("--out", help="also write the result JSON here")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("decide", help="single feasibility probe")
    p.add_argument("instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=float, help="disk radius")
    p.add_argument(
        "--four-r-sq",
        type=float,
        dest="four_r_sq",
        help="threshold (2r)^2 directly, for exact ladder probes",
    )
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="brute-force reference")
    p.add_argument("instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="also write the result JSON here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--shape", choices=("valtr", "regular", "circle"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="SVG of a packing")
    p.add_argument("--in", dest="infile", required=True, help="instance JSON")
    p.add_argument("--result", required=True, help="result JSON from solve/approx")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="run a suite, print/write a table")
    p.add_argument("--spec", required=True, help="suite JSON")
    p.add_argument("--out", help="CSV path; figures are written alongside")
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
