"""Area-representation reference solvers.

These materialize every cell, so they are pseudo-polynomial and guarded by
a cell budget.  They exist to cross-check the corner-representation
solvers at desk scale, not as a production path.
"""

from __future__ import annotations

from typing import Iterable, Set

from . import geometry, matching
from .errors import BudgetExceeded
from .geometry import Polyomino

DEFAULT_CELL_BUDGET = 10 ** 6


def rasterize(p: Polyomino, budget: int = DEFAULT_CELL_BUDGET) -> Set[tuple]:
    """The exact cell set of p; refuses areas above the budget."""
    if p.area > budget:
        raise BudgetExceeded(f"area {p.area} exceeds cell budget {budget}")
    cells: Set[tuple] = set()
    for rect in geometry.rectangle_partition(p):
        cells.update(rect.cells())
    return cells


def naive_square_tiling(p: Polyomino, k: int,
                        budget: int = DEFAULT_CELL_BUDGET) -> bool:
    """Greedy corner recursion: the smallest uncovered cell must be the
    lower-left cell of its k x k tile, so the tiling is forced (and unique
    when it exists)."""
    if k < 1:
        raise ValueError("k must be positive")
    if p.area % (k * k) != 0:
        return False
    remaining = rasterize(p, budget)
    while remaining:
        i, j = min(remaining)
        square = [(i + di, j + dj) for di in range(k) for dj in range(k)]
        for cell in square:
            if cell not in remaining:
                return False
            remaining.remove(cell)
    return True


def cell_graph(cells: Iterable[tuple]) -> matching.BipartiteGraph:
    return matching.BipartiteGraph.from_cells(cells)


def naive_domino_packing(p: Polyomino,
                         budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Maximum number of dominoes packable into p, as the maximum matching
    of the cell-adjacency graph."""
    cells = rasterize(p, budget)
    return len(matching.max_matching(cell_graph(cells)))
