"""Instance and result files.

An instance is a minimal JSON object ``{"points": [[x, y], ...]}`` with
optional ``name`` and ``seed`` fields.  Coordinates round-trip exactly:
json emits the shortest representation that parses back to the same float,
so distance ladders rebuilt from a file match the in-memory ones bit for
bit.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any


class BadInstance(ValueError):
    """The file is not a usable instance/result document."""


@dataclass
class ResultRecord:
    """One algorithm run: what was asked, what came back, what it cost."""

    algorithm: str
    k: int
    radius: float
    radius_sq4: float
    centers: tuple[int, ...]
    decide_calls: int = 0
    nodes: int = 0
    accesses: int = 0
    wall_time: float = 0.0

    def to_json(self) -> str:
        d = dataclasses.asdict(self)
        d["centers"] = list(self.centers)
        return json.dumps(d, indent=2)


def points_from_obj(obj: Any) -> list[tuple[float, float]]:
    if not isinstance(obj, dict) or "points" not in obj:
        raise BadInstance("expected a JSON object with a 'points' field")
    raw = obj["points"]
    if not isinstance(raw, list):
        raise BadInstance("'points' must be a list of [x, y] pairs")
    pts = []
    for i, item in enumerate(raw):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise BadInstance(f"point {i} is not an [x, y] pair")
        x, y = item
        try:
            x, y = float(x), float(y)
        except (TypeError, ValueError):
            raise BadInstance(f"point {i} has a non-numeric coordinate") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise BadInstance(f"point {i} has a non-finite coordinate")
        pts.append((x, y))
    return pts


def load_instance(path: str | Path) -> list[tuple[float, float]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BadInstance(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInstance(f"{path} is not valid JSON: {exc}") from exc
    return points_from_obj(obj)


def dump_instance(
    points: list[tuple[float, float]],
    *,
    name: str | None = None,
    seed: int | None = None,
) -> str:
    obj: dict[str, Any] = {"points": [[x, y] for x, y in points]}
    if name is not None:
        obj["name"] = name
    if seed is not None:
        obj["seed"] = seed
    return json.dumps(obj)


def load_result(path: str | Path) -> ResultRecord:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInstance(f"cannot read result {path}: {exc}") from exc
    try:
        return ResultRecord(
            algorithm=str(obj["algorithm"]),
            k=int(obj["k"]),
            radius=float(obj["radius"]),
            radius_sq4=float(obj["radius_sq4"]),
            centers=tuple(int(c) for c in obj["centers"]),
            decide_calls=int(obj.get("decide_calls", 0)),
            nodes=int(obj.get("nodes", 0)),
            accesses=int(obj.get("accesses", 0)),
            wall_time=float(obj.get("wall_time", 0.0)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInstance(f"result {path} is missing fields: {exc}") from exc
