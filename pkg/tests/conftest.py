"""Shared fixtures and cell-level reference implementations.

The cell-level helpers here are deliberately dumb: they materialize every
cell and apply definitions directly, so they serve as independent oracles
for the corner-representation code.
"""

import random

import pytest

from polytile import geometry, instances, oracle
from polytile.geometry import Polyomino

NEIGHBORHOOD = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)]


def cells_of(p):
    return oracle.rasterize(p)


def brute_erode(cells):
    cells = set(cells)
    return {c for c in cells
            if all((c[0] + dx, c[1] + dy) in cells for dx, dy in NEIGHBORHOOD)}


def brute_dilate(cells):
    return {(c[0] + dx, c[1] + dy) for c in cells for dx, dy in NEIGHBORHOOD}


def brute_even_snap(cells):
    cells = set(cells)
    out = set()
    for i, j in cells:
        bi, bj = i - i % 2, j - j % 2
        block = [(bi + di, bj + dj) for di in (0, 1) for dj in (0, 1)]
        if all(b in cells for b in block):
            out.add((i, j))
    return out


def brute_components(cells):
    cells = set(cells)
    seen = set()
    comps = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            i, j = frontier.pop()
            for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if n in cells and n not in comp:
                    comp.add(n)
                    frontier.append(n)
        seen |= comp
        comps.append(comp)
    return comps


def black_white(cells):
    black = sum(1 for i, j in cells if (i + j) % 2 == 0)
    return black, len(cells) - black


def shoelace_area(p):
    total = 0
    for cyc in p.cycles:
        m = len(cyc)
        for i in range(m):
            ax, ay = cyc[i]
            bx, by = cyc[(i + 1) % m]
            total += ax * by - bx * ay
    return total // 2


def random_corpus(seed, count, bbox=14, hole_prob=0.3):
    return [instances.gen_random(seed + i, bbox, hole_prob)
            for i in range(count)]


@pytest.fixture(scope="session")
def corpus_small():
    """Mixed random corpus for cross-checks in unit tests."""
    return random_corpus(1000, 120)


@pytest.fixture(scope="session")
def corpus_tiny_box():
    """Random polyominoes within a 12x12 box, no holes punched."""
    rng = random.Random(4242)
    out = []
    for _ in range(80):
        cells = set()
        for _ in range(rng.randrange(2, 6)):
            w, h = rng.randrange(1, 7), rng.randrange(1, 7)
            x, y = rng.randrange(0, 13 - w), rng.randrange(0, 13 - h)
            cells.update((x + i, y + j) for i in range(w) for j in range(h))
        out.append(Polyomino.from_cells(cells))
    return out


@pytest.fixture(scope="session")
def chessboard():
    return instances.gen_mutilated_board(8)


@pytest.fixture
def square4():
    return geometry.validate([[(0, 0), (4, 0), (4, 4), (0, 4)]])


@pytest.fixture
def annulus6():
    return geometry.validate([[(0, 0), (6, 0), (6, 6), (0, 6)],
                              [(2, 2), (2, 4), (4, 4), (4, 2)]])
