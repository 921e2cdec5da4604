"""Self-contained SVG drawings of decorated grids with Dyck paths."""

from __future__ import annotations

from typing import Sequence

from .core import LOWER_RIGHT, grid_of

CELL = 40
MARGIN = 30
NOTCH = 0.3


def _vertices(path: str) -> list[tuple[int, int]]:
    x = y = 0
    pts = [(0, 0)]
    for step in path:
        if step == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def render_svg(sigma: Sequence[int], path: str | None = None, second_path: str | None = None) -> str:
    """Draw the grid for ``sigma``, ``path`` in blue and ``second_path`` in magenta.

    The second path is reflected across the diagonal so that it sits above it.
    """
    grid = grid_of(sigma)
    n = grid.n
    size = n * CELL + 2 * MARGIN

    def px(x: float, y: float) -> tuple[float, float]:
        return MARGIN + x * CELL, MARGIN + (n - y) * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for i in range(n + 1):
        x1, y1 = px(i, 0)
        x2, y2 = px(i, n)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#bbb" stroke-width="1"/>')
        x1, y1 = px(0, i)
        x2, y2 = px(n, i)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#bbb" stroke-width="1"/>')
    x1, y1 = px(0, 0)
    x2, y2 = px(n, n)
    out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#888" stroke-dasharray="4 3"/>')

    for i, label in enumerate(grid.column_labels, 1):
        cx, cy = px(i - 0.5, 0)
        out.append(f'<text x="{cx}" y="{cy + 18}" font-size="14" text-anchor="middle">{label}</text>')
    for i, label in enumerate(grid.row_labels, 1):
        cx, cy = px(n, i - 0.5)
        out.append(f'<text x="{cx + 12}" y="{cy + 5}" font-size="14" text-anchor="middle">{label}</text>')

    for d in sorted(grid.vertical_red_lines):
        x1, y1 = px(d, 0)
        x2, y2 = px(d, d)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="red" stroke-width="2"/>')
    for d in sorted(grid.horizontal_red_lines):
        x1, y1 = px(d, d)
        x2, y2 = px(n, d)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="red" stroke-width="2"/>')
    for (col, row), kind in grid.notches:
        if kind == LOWER_RIGHT:
            ax, ay = col, row - 1
            bx, by = ax - NOTCH, ay + NOTCH
        else:
            ax, ay = col - 1, row
            bx, by = ax + NOTCH, ay - NOTCH
        x1, y1 = px(ax, ay)
        x2, y2 = px(bx, by)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="red" stroke-width="1.5"/>')

    for p, colour, reflect in ((path, "blue", False), (second_path, "magenta", True)):
        if not p:
            continue
        pts = _vertices(p)
        if reflect:
            pts = [(y, x) for x, y in pts]
        coords = " ".join("{},{}".format(*px(x, y)) for x, y in pts)
        out.append(f'<polyline points="{coords}" fill="none" stroke="{colour}" stroke-width="3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
