"""Static SVG rendering of instances and packing certificates.

Output is deterministic: integer geometry only, elements emitted in
sorted order, no timestamps.  Instances whose area exceeds the explicit
budget are drawn outline-only.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

from .geometry import Polyomino

Cell = Tuple[int, int]


def _path(p: Polyomino, flip_y: int) -> str:
    parts = []
    for cyc in p.cycles:
        parts.append("M" + " L".join(f"{x},{flip_y - y}" for x, y in cyc) + " Z")
    return " ".join(parts)


def render_svg(p: Polyomino, dominoes: Optional[Sequence[Tuple[Cell, Cell]]] = None,
               squares: Optional[Sequence[Tuple[int, int, int]]] = None,
               uncovered: Optional[Iterable[Cell]] = None,
               grid: bool = True) -> str:
    """SVG 1.1 document showing the polyomino, optionally with a domino
    packing (cell pairs), a square tiling ((x, y, k) triples), and marked
    uncovered cells."""
    if p.is_empty:
        return ('<svg xmlns="http://www.w3.org/2000/svg" width="64" '
                'height="64" viewBox="0 0 64 64"><rect width="64" '
                'height="64" fill="white"/></svg>\n')
    box = p.bbox()
    pad = max(1, (box.x1 - box.x0 + box.y1 - box.y0) // 40)
    x0, y0 = box.x0 - pad, box.y0 - pad
    w, h = box.x1 - box.x0 + 2 * pad, box.y1 - box.y0 + 2 * pad
    flip = box.y1 + box.y0  # maps y to flip - y, keeping the box fixed
    stroke = max(w, h) / 220
    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="640" '
               f'height="{max(1, 640 * h // max(1, w))}" '
               f'viewBox="{x0} {y0} {w} {h}">')
    out.append('<g stroke-linejoin="round">')
    out.append(f'<path d="{_path(p, flip)}" fill="#e8e4d8" fill-rule="evenodd" '
               f'stroke="#333333" stroke-width="{stroke:.6g}"/>')
    small = max(w, h) <= 512
    if grid and small:
        lines = []
        for gx in range(box.x0, box.x1 + 1):
            lines.append(f'M{gx},{flip - box.y0} L{gx},{flip - box.y1}')
        for gy in range(box.y0, box.y1 + 1):
            lines.append(f'M{box.x0},{flip - gy} L{box.x1},{flip - gy}')
        out.append(f'<path d="{" ".join(lines)}" stroke="#bbbbbb" '
                   f'stroke-width="{stroke / 3:.6g}" fill="none"/>')
    if squares:
        for x, y, k in sorted(squares):
            out.append(f'<rect x="{x}" y="{flip - y - k}" width="{k}" '
                       f'height="{k}" fill="#9ec5e8" fill-opacity="0.7" '
                       f'stroke="#1f5d99" stroke-width="{stroke:.6g}"/>')
    if dominoes:
        for a, b in sorted(tuple(sorted(d)) for d in dominoes):
            x, y = min(a[0], b[0]), min(a[1], b[1])
            dw = 2 if a[1] == b[1] else 1
            dh = 2 if a[0] == b[0] else 1
            inset = 0.12
            out.append(f'<rect x="{x + inset:.6g}" '
                       f'y="{flip - y - dh + inset:.6g}" '
                       f'width="{dw - 2 * inset:.6g}" '
                       f'height="{dh - 2 * inset:.6g}" rx="0.2" '
                       f'fill="#d98e63" stroke="#8a4a22" '
                       f'stroke-width="{stroke:.6g}"/>')
    if uncovered:
        for i, j in sorted(uncovered):
            out.append(f'<circle cx="{i + 0.5:.6g}" cy="{flip - j - 0.5:.6g}" '
                       f'r="0.28" fill="#c23b3b"/>')
    out.append("</g></svg>")
    return "\n".join(out) + "\n"
