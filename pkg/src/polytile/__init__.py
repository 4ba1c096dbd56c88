"""polytile: square tilings and maximum domino packings of polyominoes
represented by their corner coordinates.

The running time of every solver depends on the number of corners of the
input, not on its area, so instances with coordinates around 10**9 are
solved exactly in well under a second.
"""

from . import errors
from .geometry import (
    Polyomino,
    Rect,
    area,
    components,
    difference,
    dilate_unit,
    erode_unit,
    has_consistent_parity,
    intersection,
    is_connected,
    offset,
    rectangle_partition,
    union,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Polyomino",
    "Rect",
    "area",
    "components",
    "difference",
    "dilate_unit",
    "erode_unit",
    "errors",
    "has_consistent_parity",
    "intersection",
    "is_connected",
    "offset",
    "rectangle_partition",
    "union",
    "validate",
]
