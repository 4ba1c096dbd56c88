"""Instance JSON format, canonical writer, and the instance generators.

The on-disk format is one JSON object with a "cycles" field: a list of
cycles, each a list of [x, y] integer pairs.  The first cycle of a
component is its outer boundary (counterclockwise), followed by its holes
(clockwise); every cycle starts at its lexicographically smallest corner.
Readers accept any orientation and order and renormalize.
"""

from __future__ import annotations

import json
import random
from typing import List, Optional, Sequence

from . import geometry
from .errors import BadParams
from .geometry import Polyomino


def to_json_dict(p: Polyomino) -> dict:
    return {"cycles": [[[x, y] for x, y in c] for c in p.cycles]}


def dumps(p: Polyomino) -> str:
    return json.dumps(to_json_dict(p), separators=(", ", ": "))


def from_json_dict(data: dict, require_connected: bool = False) -> Polyomino:
    if not isinstance(data, dict) or "cycles" not in data:
        raise BadParams('instance JSON must be an object with a "cycles" field')
    cycles = [[tuple(pt) for pt in cyc] for cyc in data["cycles"]]
    return geometry.validate(cycles, require_connected=require_connected)


def loads(text: str, require_connected: bool = False) -> Polyomino:
    return from_json_dict(json.loads(text), require_connected)


def load_file(path: str, require_connected: bool = False) -> Polyomino:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh), require_connected)


def save_file(p: Polyomino, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(p))
        fh.write("\n")


# ---------------------------------------------------------------------------
# generator families


def gen_rect(width: int, height: int) -> Polyomino:
    if width < 1 or height < 1:
        raise BadParams("rect needs positive width and height")
    return Polyomino.from_rect(0, 0, width, height)


def gen_mutilated_board(size: int) -> Polyomino:
    """size x size board minus two diagonally opposite corner cells."""
    if size < 2:
        raise BadParams("board size must be at least 2")
    m = size
    return geometry.validate([[
        (1, 1), (1, 0), (m, 0), (m, m - 1), (m - 1, m - 1), (m - 1, m),
        (0, m), (0, 1),
    ]])


def gen_staircase(n: int) -> Polyomino:
    """Boundary made of four staircases of n/4 corners each, every step
    n x n.  The area is Theta(n^4) while the corner count is exactly n,
    which is the worst case for any area-proportional algorithm."""
    if n < 8 or n % 8 != 0:
        raise BadParams("staircase size must be a multiple of 8, at least 8")
    m = n // 8
    s = n
    r = m * s
    pts: List[tuple] = []
    x, y = r, 0
    for _ in range(m):  # north-east: up, left
        pts += [(x, y), (x, y + s)]
        x, y = x - s, y + s
    for _ in range(m):  # north-west: down, left
        pts += [(x, y), (x, y - s)]
        x, y = x - s, y - s
    for _ in range(m):  # south-west: down, right
        pts += [(x, y), (x, y - s)]
        x, y = x + s, y - s
    for _ in range(m):  # south-east: up, right
        pts += [(x, y), (x, y + s)]
        x, y = x + s, y + s
    assert (x, y) == (r, 0)
    p = geometry.validate([pts])
    assert p.corner_count == n
    return p


def gen_pipe(length: int, width: int, left_rows: Sequence[int] = (0,),
             right_rows: Sequence[int] = (0,)) -> Polyomino:
    """Corridor [0,length] x [0,width] with cap cells on the left at
    x = -1 (rows in left_rows) and on the right at x = length."""
    if length < 1 or width < 1:
        raise BadParams("pipe needs positive length and width")
    if any(r < 0 or r >= width for r in (*left_rows, *right_rows)):
        raise BadParams("cap rows must lie in [0, width)")
    cells = [(-1, r) for r in left_rows] + [(length, r) for r in right_rows]
    body = Polyomino.from_rect(0, 0, length, width)
    if cells:
        caps = Polyomino.from_cells(cells)
        body = geometry.union(body, caps)
    return body


def pipe_imbalance(length: int, width: int, left_rows: Sequence[int] = (0,),
                   right_rows: Sequence[int] = (0,)) -> int:
    """Closed-form |black - white| for a pipe instance, computable without
    building anything: an even-length corridor is balanced, so only the cap
    cells contribute."""
    if length % 2 == 0:
        body = 0
    else:
        # odd rows of odd length leave one extra cell of colour (row % 2)
        body = sum(1 if r % 2 == 0 else -1 for r in range(width))
    left = sum(1 if (r - 1) % 2 == 0 else -1 for r in left_rows)
    right = sum(1 if (length + r) % 2 == 0 else -1 for r in right_rows)
    return abs(body + left + right)


def gen_random(seed: int, bbox: int = 14, hole_prob: float = 0.3) -> Polyomino:
    """Seeded random connected polyomino: a union of rectangles, largest
    component kept, with holes punched so that a hole_prob fraction of
    instances keeps at least one hole."""
    if bbox < 4:
        raise BadParams("bbox must be at least 4")
    rng = random.Random(seed)
    region = Polyomino.empty()
    for _ in range(rng.randrange(2, 7)):
        w = rng.randrange(1, bbox // 2 + 1)
        h = rng.randrange(1, bbox // 2 + 1)
        x = rng.randrange(0, bbox - w + 1)
        y = rng.randrange(0, bbox - h + 1)
        region = geometry.union(region, Polyomino.from_rect(x, y, x + w, y + h))
    region = _largest_component(region)
    if rng.random() < hole_prob:
        region = _punch_holes(region, rng)
    return region


def _largest_component(p: Polyomino) -> Polyomino:
    comps = geometry.components(p)
    return max(comps, key=lambda c: (c.area, c.cycles[0][0]))


def _punch_holes(p: Polyomino, rng: random.Random) -> Polyomino:
    from . import oracle
    cells = oracle.rasterize(p)
    result = p
    for _ in range(rng.randrange(1, 4)):
        # prefer an even-aligned 2x2 hole (it survives the even snap and
        # exercises channel carving), else a single deep cell
        blocks = sorted(
            (i, j) for (i, j) in cells
            if i % 2 == 0 and j % 2 == 0
            and all((i + di, j + dj) in cells
                    for di in range(-1, 3) for dj in range(-1, 3)))
        hole: Optional[Polyomino] = None
        if blocks and rng.random() < 0.7:
            i, j = blocks[rng.randrange(len(blocks))]
            hole = Polyomino.from_rect(i, j, i + 2, j + 2)
        else:
            deep = sorted(
                c for c in cells
                if all((c[0] + dx, c[1] + dy) in cells
                       for dx in (-1, 0, 1) for dy in (-1, 0, 1)))
            if deep:
                c = deep[rng.randrange(len(deep))]
                hole = Polyomino.from_rect(c[0], c[1], c[0] + 1, c[1] + 1)
        if hole is None:
            break
        punched = geometry.difference(result, geometry.intersection(result, hole))
        punched = _largest_component(punched)
        if punched.area > 4:
            result = punched
            cells = oracle.rasterize(result)
    return result


GENERATORS = {
    "rect": gen_rect,
    "staircase": gen_staircase,
    "pipe": gen_pipe,
    "mutilated-board": gen_mutilated_board,
    "random": gen_random,
}
