"""Sweep-line decider for tileability by k x k axis-aligned squares.

A vertical line sweeps left to right over the vertical edges of the
polyomino.  The state is a set of disjoint y-intervals covering the
current cross-section, each carrying the residue mod k of the x-coordinate
where its tiling column started.  An edge that shrinks the cross-section
must meet intervals of its own residue; an edge that grows it inserts a
new interval and merges equal-residue true neighbours.  Whenever the sweep
is about to move right, every interval touched at the current x must have
length divisible by k.  Everything is O(n log n) in the corner count and
never looks at the area.
"""

from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from . import geometry
from .geometry import Polyomino


@dataclass(frozen=True)
class ParityInterval:
    lo: int
    hi: int
    parity: int

    def __post_init__(self):
        assert self.lo < self.hi

    @property
    def length(self) -> int:
        return self.hi - self.lo


@dataclass(frozen=True)
class SweepEvent:
    """A vertical edge; grows=True means the interior lies to its right."""

    x: int
    y0: int
    y1: int
    grows: bool

    @property
    def side(self) -> str:
        return "interior-right" if self.grows else "interior-left"


class NoTiling(Exception):
    """Internal control flow: the sweep proved untileability."""


@dataclass
class IntervalSet:
    """Ordered disjoint intervals; a sorted list with bisect stands in for
    the balanced tree, which is the right trade at these sizes."""

    items: List[ParityInterval] = field(default_factory=list)
    keys: List[int] = field(default_factory=list)  # lo values, kept in sync

    def _insert(self, iv: ParityInterval) -> None:
        pos = bisect_right(self.keys, iv.lo)
        self.keys.insert(pos, iv.lo)
        self.items.insert(pos, iv)

    def _remove_at(self, pos: int) -> ParityInterval:
        self.keys.pop(pos)
        return self.items.pop(pos)

    def overlapping(self, y0: int, y1: int) -> List[int]:
        """Indices of intervals whose interiors meet (y0, y1)."""
        pos = bisect_right(self.keys, y0)
        if pos and self.items[pos - 1].hi > y0:
            pos -= 1
        out = []
        while pos < len(self.items) and self.items[pos].lo < y1:
            if min(self.items[pos].hi, y1) > max(self.items[pos].lo, y0):
                out.append(pos)
            pos += 1
        return out

    def check_invariants(self) -> None:
        for a, b in zip(self.items, self.items[1:]):
            assert a.hi <= b.lo, "intervals overlap"
            if a.hi == b.lo:
                assert a.parity != b.parity, "true neighbours share parity"


def handle_edge(state: IntervalSet, event: SweepEvent, k: int
                ) -> List[ParityInterval]:
    """Apply one edge to the state; returns the intervals it created or
    modified.  Raises NoTiling on a parity clash."""
    touched: List[ParityInterval] = []
    y0, y1, x = event.y0, event.y1, event.x
    if not event.grows:
        # cross-section shrinks: overlapped intervals shrink/split/vanish
        cover = 0
        for pos in reversed(state.overlapping(y0, y1)):
            iv = state.items[pos]
            if iv.parity != x % k:
                raise NoTiling(
                    f"edge x={x} [{y0},{y1}] overlaps parity {iv.parity}")
            cover += min(iv.hi, y1) - max(iv.lo, y0)
            state._remove_at(pos)
            for a, b in ((iv.lo, y0), (y1, iv.hi)):
                if a < min(b, iv.hi) and max(a, iv.lo) < b:
                    piece = ParityInterval(max(a, iv.lo), min(b, iv.hi),
                                           iv.parity)
                    state._insert(piece)
                    touched.append(piece)
        assert cover == y1 - y0, "shrinking edge not covered by state"
    else:
        # cross-section grows: insert and merge same-parity true neighbours
        assert not state.overlapping(y0, y1), "growing edge overlaps state"
        new = ParityInterval(y0, y1, x % k)
        state._insert(new)
        pos = state.keys.index(new.lo)
        lo, hi = new.lo, new.hi
        if pos + 1 < len(state.items) and state.items[pos + 1].lo == hi \
                and state.items[pos + 1].parity == new.parity:
            hi = state._remove_at(pos + 1).hi
        if pos > 0 and state.items[pos - 1].hi == lo \
                and state.items[pos - 1].parity == new.parity:
            lo = state._remove_at(pos - 1).lo
            pos -= 1
        if (lo, hi) != (new.lo, new.hi):
            state._remove_at(pos)
            new = ParityInterval(lo, hi, new.parity)
            state._insert(new)
        touched.append(new)
    return touched


def check_advance(touched: List[ParityInterval], state: IntervalSet, k: int,
                  recheck_all: bool = False) -> None:
    """Before the sweep moves right, touched intervals (all intervals in
    debug mode) must have length divisible by k."""
    live = state.items if recheck_all else \
        [iv for iv in touched if iv in state.items]
    for iv in live:
        if iv.length % k != 0:
            raise NoTiling(f"interval [{iv.lo},{iv.hi}] has length "
                           f"{iv.length} not divisible by {k}")


def _sweep_events(p: Polyomino) -> List[SweepEvent]:
    events = []
    for axis, c, lo, hi, sign in p.boundary_edges():
        if axis == "v":
            events.append(SweepEvent(c, lo, hi, grows=sign > 0))
    # shrinking edges first at equal x, then by y0, for determinism
    events.sort(key=lambda e: (e.x, e.grows, e.y0))
    return events


def _tile_component(p: Polyomino, k: int, debug: bool,
                    trace: Optional[Callable] = None) -> bool:
    state = IntervalSet()
    events = _sweep_events(p)
    touched: List[ParityInterval] = []
    try:
        for i, ev in enumerate(events):
            touched += handle_edge(state, ev, k)
            if debug:
                state.check_invariants()
            if trace is not None:
                trace(ev, state)
            last_here = i + 1 == len(events) or events[i + 1].x > ev.x
            if last_here:
                check_advance(touched, state, k, recheck_all=debug)
                touched = []
    except NoTiling:
        return False
    assert not state.items, "sweep finished with a non-empty cross-section"
    return True


def tile_squares(p: Polyomino, k: int, debug: bool = False,
                 trace: Optional[Callable] = None) -> bool:
    """True iff p is a union of interior-disjoint, axis-aligned, integer
    k x k squares.  The empty polyomino is vacuously tileable."""
    if k < 1:
        raise ValueError("k must be positive")
    if p.is_empty:
        return True
    if p.area % (k * k) != 0:
        return False
    return all(_tile_component(c, k, debug, trace)
               for c in geometry.components(p))
