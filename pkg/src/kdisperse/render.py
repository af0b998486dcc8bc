"""Static SVG rendering of a packing: polygon, vertices, exact disks.

The disks are drawn with the exact result radius in problem coordinates,
so tangency in the solution is tangency in the picture; only stroke widths
and dot sizes are cosmetic.
"""

from __future__ import annotations


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def packing_svg(
    points: list[tuple[float, float]],
    centers: tuple[int, ...],
    radius: float,
    *,
    size: int = 640,
) -> str:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = radius + 0.05 * span
    x0, y0 = min(xs) - pad, min(ys) - pad
    w = (max(xs) - min(xs)) + 2 * pad
    h = (max(ys) - min(ys)) + 2 * pad

    def tx(x: float) -> float:
        return x - x0

    def ty(y: float) -> float:
        return (y0 + h) - y  # svg y grows downward

    sw = 0.003 * max(w, h)
    dot = 2.5 * sw
    outline = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in points)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(w)} {_fmt(h)}"'
        f' width="{size}" height="{_fmt(size * h / w)}">',
        f'<polygon points="{outline}" fill="#f8f8f4" stroke="#444"'
        f' stroke-width="{_fmt(sw)}"/>',
    ]
    for x, y in points:
        parts.append(
            f'<circle cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="{_fmt(dot)}"'
            f' fill="#666"/>'
        )
    for c in centers:
        x, y = points[c]
        parts.append(
            f'<circle cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="{_fmt(radius)}"'
            f' fill="#3b7dd8" fill-opacity="0.35" stroke="#1a4e9c"'
            f' stroke-width="{_fmt(sw)}"/>'
        )
    for c in centers:
        x, y = points[c]
        parts.append(
            f'<circle cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="{_fmt(dot * 1.4)}"'
            f' fill="#1a4e9c"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
