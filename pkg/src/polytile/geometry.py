"""Exact integer geometry for polyominoes in corner representation.

A polyomino is a finite union of grid cells, represented by the integer
corner coordinates of its boundary cycles (one outer cycle per connected
component, plus one cycle per hole).  All operations here are exact: the
cost depends on the number of corners, never on the covered area, so
coordinates around 10**9 and beyond are routine.

Internally every polyomino also carries its *slab decomposition*: the
plane is cut at the x-coordinates of the corners, and inside each slab
the region is a constant set of disjoint y-intervals.  Merging runs of
identical intervals across neighbouring slabs yields exactly the classic
partition of a rectilinear polygon into rectangles by vertical chords
through the reflex corners, which is what `rectangle_partition` returns.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    Disconnected,
    HoleOutsideOuter,
    NonRectilinear,
    NotContained,
    OverlappingHoles,
    Overflow,
    SelfIntersecting,
)

COORD_LIMIT = 1 << 60

Point = tuple  # (x, y) pair of ints
Cycle = tuple  # tuple of Points, cyclic, axis-parallel edges


class Rect(NamedTuple):
    """Closed axis-aligned rectangle [x0,x1] x [y0,y1] with x0<x1, y0<y1."""

    x0: int
    y0: int
    x1: int
    y1: int

    @property
    def width(self) -> int:
        return self.x1 - self.x0

    @property
    def height(self) -> int:
        return self.y1 - self.y0

    @property
    def area(self) -> int:
        return self.width * self.height

    def cells(self) -> Iterator[tuple]:
        for i in range(self.x0, self.x1):
            for j in range(self.y0, self.y1):
                yield (i, j)


# ---------------------------------------------------------------------------
# interval-set helpers
#
# An interval set ("ivs") is a tuple of (y0, y1) pairs with y0 < y1, sorted,
# pairwise disjoint and non-touching.  It stands for the closed region
# union([y0, y1]).


def _iv_norm(parts: Iterable[tuple]) -> tuple:
    """Merge overlapping or touching intervals into canonical form."""
    parts = sorted(p for p in parts if p[0] < p[1])
    out = []
    for y0, y1 in parts:
        if out and y0 <= out[-1][1]:
            if y1 > out[-1][1]:
                out[-1] = (out[-1][0], y1)
        else:
            out.append((y0, y1))
    return tuple(out)


def _iv_union(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return _iv_norm(list(a) + list(b))


def _iv_intersect(a: tuple, b: tuple) -> tuple:
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        lo = max(a[i][0], b[j][0])
        hi = min(a[i][1], b[j][1])
        if lo < hi:
            out.append((lo, hi))
        if a[i][1] <= b[j][1]:
            i += 1
        else:
            j += 1
    return tuple(out)


def _iv_diff(a: tuple, b: tuple) -> tuple:
    """Closure of the open set difference a \\ b."""
    out = []
    j = 0
    for y0, y1 in a:
        cur = y0
        while j < len(b) and b[j][1] <= cur:
            j += 1
        k = j
        while k < len(b) and b[k][0] < y1:
            if b[k][0] > cur:
                out.append((cur, b[k][0]))
            cur = max(cur, b[k][1])
            k += 1
        if cur < y1:
            out.append((cur, y1))
    return tuple(out)


def _iv_contains(a: tuple, b: tuple) -> bool:
    """True iff the region of b is a subset of the region of a."""
    i = 0
    for y0, y1 in b:
        while i < len(a) and a[i][1] < y1:
            if a[i][0] <= y0 and y0 < a[i][1]:
                return False  # b interval sticks out past a[i]
            i += 1
        if i == len(a) or a[i][0] > y0 or a[i][1] < y1:
            return False
    return True

def _iv_erode(ivs: tuple, r: int) -> tuple:
    return tuple((y0 + r, y1 - r) for y0, y1 in ivs if y1 - y0 > 2 * r)


def _iv_dilate(ivs: tuple, r: int) -> tuple:
    return _iv_norm((y0 - r, y1 + r) for y0, y1 in ivs)


def _iv_length(ivs: tuple) -> int:
    return sum(y1 - y0 for y0, y1 in ivs)


# ---------------------------------------------------------------------------
# slab lists
#
# A slab list is a list of (x0, x1, ivs) with x0 < x1, sorted by x0, with
# pairwise disjoint x-ranges (gaps allowed), non-empty ivs, and consecutive
# touching slabs carrying different ivs.


def _slabs_canonical(slabs: list) -> tuple:
    out = []
    for x0, x1, ivs in slabs:
        if x0 >= x1 or not ivs:
            continue
        if out and out[-1][1] == x0 and out[-1][2] == ivs:
            out[-1] = (out[-1][0], x1, ivs)
        else:
            out.append((x0, x1, ivs))
    return tuple(out)


def _slabs_combine(sa: Sequence, sb: Sequence, op) -> tuple:
    """Apply a binary interval-set op slab-wise over the union of events."""
    xs = sorted({x for s in sa for x in (s[0], s[1])}
                | {x for s in sb for x in (s[0], s[1])})
    ia = ib = 0
    out = []
    for x0, x1 in zip(xs, xs[1:]):
        while ia < len(sa) and sa[ia][1] <= x0:
            ia += 1
        while ib < len(sb) and sb[ib][1] <= x0:
            ib += 1
        iva = sa[ia][2] if ia < len(sa) and sa[ia][0] <= x0 else ()
        ivb = sb[ib][2] if ib < len(sb) and sb[ib][0] <= x0 else ()
        out.append((x0, x1, op(iva, ivb)))
    return _slabs_canonical(out)


def _slabs_contains(sa: Sequence, sb: Sequence) -> bool:
    xs = sorted({x for s in sa for x in (s[0], s[1])}
                | {x for s in sb for x in (s[0], s[1])})
    ia = ib = 0
    for x0, x1 in zip(xs, xs[1:]):
        while ia < len(sa) and sa[ia][1] <= x0:
            ia += 1
        while ib < len(sb) and sb[ib][1] <= x0:
            ib += 1
        iva = sa[ia][2] if ia < len(sa) and sa[ia][0] <= x0 else ()
        ivb = sb[ib][2] if ib < len(sb) and sb[ib][0] <= x0 else ()
        if ivb and not _iv_contains(iva, ivb):
            return False
    return True


def _slabs_morph(slabs: Sequence, r: int, erode: bool) -> tuple:
    """Unit-style L-infinity erosion or dilation by radius r >= 1.

    Degenerate (measure-zero) parts of the true offset are dropped, which
    is exactly the corridor cleanup that must follow each offset step.
    """
    if not slabs:
        return ()
    xs = sorted({v for s in slabs for x in (s[0], s[1]) for v in (x - r, x + r)})
    out = []
    n = len(slabs)
    lo = 0
    for x0, x1 in zip(xs, xs[1:]):
        # window of old slabs touched by (x - r, x + r) for x in (x0, x1);
        # doubled midpoint arithmetic keeps everything integral
        m2 = x0 + x1
        while lo < n and 2 * slabs[lo][1] <= m2 - 2 * r:
            lo += 1
        ivs: tuple | None = None
        if erode:
            cover = None  # x up to which the window is covered so far
            ok = True
            i = lo
            while i < n and 2 * slabs[i][0] < m2 + 2 * r:
                s0, s1, siv = slabs[i]
                if cover is None:
                    ok = 2 * s0 <= m2 - 2 * r
                elif s0 > cover:
                    ok = False
                if not ok:
                    break
                cover = s1
                ivs = siv if ivs is None else _iv_intersect(ivs, siv)
                i += 1
            if not ok or cover is None or 2 * cover < m2 + 2 * r or ivs is None:
                ivs = ()
            else:
                ivs = _iv_erode(ivs, r)
        else:
            acc = []
            i = lo
            while i < n and 2 * slabs[i][0] < m2 + 2 * r:
                acc.extend(_iv_dilate(slabs[i][2], r))
                i += 1
            ivs = _iv_norm(acc)
        out.append((x0, x1, ivs))
    return _slabs_canonical(out)


def _slabs_from_cells(cells: Iterable[tuple]) -> tuple:
    cols: dict = {}
    for i, j in cells:
        cols.setdefault(i, []).append(j)
    out = []
    for i in sorted(cols):
        js = sorted(cols[i])
        ivs = _iv_norm((j, j + 1) for j in js)
        out.append((i, i + 1, ivs))
    return _slabs_canonical(out)


# ---------------------------------------------------------------------------
# coverage sweep: boundary cycles -> slab list


def _vertical_edges(cycles: Iterable[Cycle]):
    """Yield (x, ylo, yhi, delta) for every vertical edge.

    delta is the winding contribution for points to the right of the edge:
    +1 for a downward edge, -1 for an upward edge.  Zero-length edges are
    skipped, which silently discards degenerate (collapsed) features.
    """
    for cyc in cycles:
        m = len(cyc)
        for idx in range(m):
            ax, ay = cyc[idx]
            bx, by = cyc[(idx + 1) % m]
            if ax != bx or ay == by:
                continue
            if by < ay:
                yield (ax, by, ay, 1)
            else:
                yield (ax, ay, by, -1)


def _cycles_to_slabs(cycles: Sequence[Cycle], strict: bool = False) -> tuple:
    """Sweep the winding coverage of the given cycles into a slab list.

    The region is where coverage >= 1.  With strict=True, coverage must be
    exactly 0 or 1 everywhere; negative coverage means a hole escapes its
    enclosing cycle and coverage 2 means overlapping interiors.
    """
    byx: dict = {}
    for x, ylo, yhi, d in _vertical_edges(cycles):
        byx.setdefault(x, []).append((ylo, yhi, d))
    if not byx:
        return ()
    steps: dict = {}  # y -> coverage step at y
    out = []
    xs = sorted(byx)
    for xi, x in enumerate(xs):
        for ylo, yhi, d in byx[x]:
            steps[ylo] = steps.get(ylo, 0) + d
            steps[yhi] = steps.get(yhi, 0) - d
            if steps[ylo] == 0:
                del steps[ylo]
            if steps.get(yhi) == 0:
                del steps[yhi]
        ivs = []
        cov = 0
        start = None
        for y in sorted(steps):
            prev = cov
            cov += steps[y]
            if strict and cov not in (0, 1):
                if cov < 0:
                    raise HoleOutsideOuter(
                        f"negative coverage below y={y} at x={x}")
                raise OverlappingHoles(
                    f"coverage {cov} above y={y} at x={x}")
            if prev <= 0 and cov >= 1:
                start = y
            elif prev >= 1 and cov <= 0:
                ivs.append((start, y))
                start = None
        if cov != 0:
            raise SelfIntersecting("unbalanced vertical edges in sweep")
        if xi + 1 < len(xs):
            out.append((x, xs[xi + 1], _iv_norm(ivs)))
        elif ivs:
            raise SelfIntersecting("region extends past the last edge")
    return _slabs_canonical(out)


# ---------------------------------------------------------------------------
# boundary extraction: slab list -> canonical cycles, partition, components


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


_LEFT_TURN = {(1, 0): (0, 1), (0, 1): (-1, 0), (-1, 0): (0, -1), (0, -1): (1, 0)}
_RIGHT_TURN = {v: k for k, v in _LEFT_TURN.items()}


def _extract(slabs: Sequence):
    """Compute the rectangle partition, components and canonical cycles.

    Returns (rects, comp_labels, comps, slab_owners) where comps is a list
    of (outer_cycle, [hole_cycles...]) sorted canonically and slab_owners
    aligns a rect index with every interval of every slab.
    """
    rects: list = []  # [x0, x1, y0, y1] mutable while runs extend
    dsu = _DSU(0)
    prev_map: dict = {}
    prev_x1 = None
    slab_list = list(slabs)
    slab_owners = []
    vert_edges = []  # (x, ylo, yhi, direction up?, owner rect)

    def interval_rect(mapping, y):
        # mapping: iv -> rect index; find interval containing coordinate y
        for (a, b), idx in mapping.items():
            if a <= y < b:
                return idx
        raise AssertionError("no owning interval")

    def close_right(x):
        for a, b in _iv_norm(tuple(prev_map)):
            vert_edges.append((x, a, b, True, interval_rect(prev_map, a)))

    for x0, x1, ivs in slab_list:
        if prev_x1 is not None and prev_x1 < x0:
            close_right(prev_x1)  # gap: previous slab ends here
            prev_map = {}
        touching = prev_x1 == x0
        cur_map = {}
        for iv in ivs:
            if touching and iv in prev_map:
                idx = prev_map[iv]
                rects[idx][1] = x1  # extend run
            else:
                idx = len(rects)
                rects.append([x0, x1, iv[0], iv[1]])
                dsu.parent.append(idx)
            cur_map[iv] = idx
        slab_owners.append(tuple(cur_map[iv] for iv in ivs))
        if touching:
            # connect rects sharing positive-length vertical boundary
            for iva, ia in prev_map.items():
                for ivb, ib in cur_map.items():
                    if min(iva[1], ivb[1]) > max(iva[0], ivb[0]):
                        dsu.union(ia, ib)
        # vertical boundary edges at x0 between prev slab and this one
        livs = _iv_norm(tuple(prev_map)) if touching else ()
        for a, b in _iv_diff(ivs, livs):
            vert_edges.append((x0, a, b, False, interval_rect(cur_map, a)))
        for a, b in _iv_diff(livs, ivs):
            vert_edges.append((x0, a, b, True, interval_rect(prev_map, a)))
        prev_map, prev_x1 = cur_map, x1
    if slab_list:
        close_right(prev_x1)

    # directed edges: left boundaries run downward, right boundaries upward,
    # bottoms run +x and tops -x, so the interior is always on the left
    edges = []  # (start, end, owner)
    for x, a, b, up, owner in vert_edges:
        if up:
            edges.append(((x, a), (x, b), owner))
        else:
            edges.append(((x, b), (x, a), owner))
    for x0, x1, y0, y1 in rects:
        edges.append(((x0, y0), (x1, y0), None))
        edges.append(((x1, y1), (x0, y1), None))

    out_at: dict = {}
    for ei, (s, e, _owner) in enumerate(edges):
        d = (_sign(e[0] - s[0]), _sign(e[1] - s[1]))
        out_at.setdefault(s, {})[d] = ei

    used = [False] * len(edges)
    raw_cycles = []  # (cycle points, owner rect)
    order = sorted(range(len(edges)), key=lambda i: (edges[i][0], edges[i][1]))
    for start in order:
        if used[start]:
            continue
        pts = []
        owner = None
        ei = start
        while True:
            used[ei] = True
            s, e, own = edges[ei]
            if own is not None and owner is None:
                owner = own
            pts.append(s)
            d = (_sign(e[0] - s[0]), _sign(e[1] - s[1]))
            choices = out_at.get(e, {})
            for nd in (_LEFT_TURN[d], d, _RIGHT_TURN[d]):
                nei = choices.get(nd)
                if nei is not None and not used[nei]:
                    ei = nei
                    break
            else:
                if e != edges[start][0]:
                    raise AssertionError("open boundary walk")
                break
        # merge collinear corners
        cyc = []
        m = len(pts)
        for i in range(m):
            p_prev, p, p_next = pts[i - 1], pts[i], pts[(i + 1) % m]
            if (p_prev[0] == p[0] == p_next[0]) or (p_prev[1] == p[1] == p_next[1]):
                continue
            cyc.append(p)
        raw_cycles.append((_cycle_canonical(tuple(cyc)), owner))

    comp_of_rect = [dsu.find(i) for i in range(len(rects))]
    groups: dict = {}
    for cyc, owner in raw_cycles:
        comp = comp_of_rect[owner]
        groups.setdefault(comp, []).append(cyc)
    comps = []
    for comp, cycs in groups.items():
        outer = None
        holes = []
        for c in cycs:
            if _signed_area(c) > 0:
                if outer is not None:
                    raise AssertionError("two outer cycles in one component")
                outer = c
            else:
                holes.append(c)
        if outer is None:
            raise AssertionError("component without outer cycle")
        holes.sort(key=lambda c: c[0])
        comps.append((outer, holes))
    comps.sort(key=lambda oc: oc[0][0])
    frects = [Rect(r[0], r[2], r[1], r[3]) for r in rects]
    comp_ids: dict = {}
    comp_labels = []
    for i in range(len(rects)):
        root = comp_of_rect[i]
        comp_labels.append(comp_ids.setdefault(root, len(comp_ids)))
    return frects, comp_labels, comps, slab_owners


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _signed_area(cycle: Cycle) -> int:
    """Twice the signed area (positive for counterclockwise)."""
    total = 0
    m = len(cycle)
    for i in range(m):
        ax, ay = cycle[i]
        bx, by = cycle[(i + 1) % m]
        total += ax * by - bx * ay
    return total


def _cycle_canonical(cycle: Cycle) -> Cycle:
    """Rotate so the cycle starts at its lexicographically smallest corner."""
    k = min(range(len(cycle)), key=lambda i: cycle[i])
    return cycle[k:] + cycle[:k]


# ---------------------------------------------------------------------------
# the Polyomino class


class Polyomino:
    """An immutable polyomino, possibly empty or with several components.

    Equality and hashing use the canonical boundary cycles.  All derived
    data (area, partition, components) is computed from the slab list and
    cached.
    """

    __slots__ = ("_slabs", "_rects", "_comp_labels", "_comps", "_cycles",
                 "_slab_owners", "_area", "_hash")

    def __init__(self, slabs: tuple):
        self._slabs = slabs
        (self._rects, self._comp_labels, self._comps,
         self._slab_owners) = _extract(slabs)
        self._cycles = tuple(c for outer, holes in self._comps
                             for c in (outer, *holes))
        self._area = sum(r.area for r in self._rects)
        self._hash = hash(self._cycles)

    # -- constructors -------------------------------------------------

    @staticmethod
    def empty() -> "Polyomino":
        return Polyomino(())

    @staticmethod
    def from_rect(x0: int, y0: int, x1: int, y1: int) -> "Polyomino":
        if x0 >= x1 or y0 >= y1:
            return Polyomino.empty()
        return Polyomino(((x0, x1, ((y0, y1),)),))

    @staticmethod
    def from_cells(cells: Iterable[tuple]) -> "Polyomino":
        return Polyomino(_slabs_from_cells(cells))

    # -- basic accessors ----------------------------------------------

    @property
    def cycles(self) -> tuple:
        """Canonical cycles: per component the outer (counterclockwise)
        cycle followed by its holes (clockwise), components ordered by
        smallest corner, every cycle starting at its smallest corner."""
        return self._cycles

    @property
    def is_empty(self) -> bool:
        return not self._slabs

    @property
    def area(self) -> int:
        return self._area

    @property
    def corner_count(self) -> int:
        return sum(len(c) for c in self._cycles)

    @property
    def hole_count(self) -> int:
        return sum(len(holes) for _outer, holes in self._comps)

    @property
    def corners(self) -> Iterator[Point]:
        return (p for c in self._cycles for p in c)

    def bbox(self) -> Rect | None:
        if self.is_empty:
            return None
        xs = [p[0] for c in self._cycles for p in c]
        ys = [p[1] for c in self._cycles for p in c]
        return Rect(min(xs), min(ys), max(xs), max(ys))

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyomino) and self._cycles == other._cycles

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.is_empty:
            return "Polyomino(empty)"
        b = self.bbox()
        return (f"Polyomino(area={self.area}, corners={self.corner_count}, "
                f"holes={self.hole_count}, bbox=[{b.x0},{b.x1}]x[{b.y0},{b.y1}])")

    # -- containment ---------------------------------------------------

    def contains_rect(self, rect: Rect) -> bool:
        probe = ((rect.x0, rect.x1, ((rect.y0, rect.y1),)),)
        return _slabs_contains(self._slabs, probe)

    def contains(self, other: "Polyomino") -> bool:
        return _slabs_contains(self._slabs, other._slabs)

    def contains_cell(self, i: int, j: int) -> bool:
        return self.contains_rect(Rect(i, j, i + 1, j + 1))

    # -- transforms ----------------------------------------------------

    def translate(self, dx: int, dy: int) -> "Polyomino":
        slabs = tuple((x0 + dx, x1 + dx,
                       tuple((y0 + dy, y1 + dy) for y0, y1 in ivs))
                      for x0, x1, ivs in self._slabs)
        return Polyomino(slabs)

    def rotate90(self) -> "Polyomino":
        """Rotate counterclockwise: (x, y) -> (-y, x)."""
        cycles = [tuple((-y, x) for x, y in c) for c in self._cycles]
        return Polyomino(_cycles_to_slabs(cycles))

    def reflect_x(self) -> "Polyomino":
        """Mirror across the y-axis: (x, y) -> (-x, y)."""
        cycles = [tuple((-x, y) for x, y in reversed(c)) for c in self._cycles]
        return Polyomino(_cycles_to_slabs(cycles))

    # -- boundary edges --------------------------------------------------

    def boundary_edges(self):
        """Yield maximal boundary edges as (axis, c, lo, hi, interior_sign).

        axis "v": vertical edge at x=c spanning y in [lo,hi], interior on
        the +x side when interior_sign is +1.  axis "h": horizontal edge at
        y=c spanning x in [lo,hi], interior above when interior_sign is +1.
        Collinear co-oriented edges from touching cycles are merged.
        """
        vert: dict = {}
        horiz: dict = {}
        for cyc in self._cycles:
            m = len(cyc)
            for i in range(m):
                (ax, ay), (bx, by) = cyc[i], cyc[(i + 1) % m]
                if ax == bx:
                    # interior is left of travel: downward => interior +x
                    sign = 1 if by < ay else -1
                    vert.setdefault((ax, sign), []).append(
                        (min(ay, by), max(ay, by)))
                else:
                    # +x travel (bottom edge) => interior above
                    sign = 1 if bx > ax else -1
                    horiz.setdefault((ay, sign), []).append(
                        (min(ax, bx), max(ax, bx)))
        for (x, sign), parts in sorted(vert.items()):
            for lo, hi in _iv_norm(parts):
                yield ("v", x, lo, hi, sign)
        for (y, sign), parts in sorted(horiz.items()):
            for lo, hi in _iv_norm(parts):
                yield ("h", y, lo, hi, sign)


# ---------------------------------------------------------------------------
# validation


def _clean_cycle(raw: Sequence) -> Cycle:
    pts = []
    for p in raw:
        x, y = p
        if not isinstance(x, int) or not isinstance(y, int) \
                or isinstance(x, bool) or isinstance(y, bool):
            raise NonRectilinear(f"non-integer corner {p!r}")
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise Overflow(f"coordinate magnitude exceeds 2**60 at {p!r}")
        pts.append((x, y))
    # drop repeated and collinear corners
    out = []
    for p in pts:
        if out and p == out[-1]:
            continue
        out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        res = []
        m = len(out)
        for i in range(m):
            a, b, c = out[i - 1], out[i], out[(i + 1) % m]
            if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
                if (_sign(b[0] - a[0]), _sign(b[1] - a[1])) != \
                        (_sign(c[0] - b[0]), _sign(c[1] - b[1])):
                    raise SelfIntersecting(f"boundary reverses at {b}")
                changed = True
                continue
            res.append(b)
        out = res
    if len(out) < 4:
        raise NonRectilinear("cycle has fewer than 4 corners")
    m = len(out)
    for i in range(m):
        a, b = out[i], out[(i + 1) % m]
        if a[0] != b[0] and a[1] != b[1]:
            raise NonRectilinear(f"edge {a}-{b} is not axis-parallel")
    return tuple(out)


def _check_simple(cycle: Cycle) -> None:
    m = len(cycle)
    if len(set(cycle)) != m:
        raise SelfIntersecting("cycle revisits a corner")
    segs = [(cycle[i], cycle[(i + 1) % m]) for i in range(m)]

    def seg_box(s):
        (ax, ay), (bx, by) = s
        return min(ax, bx), min(ay, by), max(ax, bx), max(ay, by)

    for i in range(m):
        bi = seg_box(segs[i])
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue  # consecutive edges share a corner by design
            bj = seg_box(segs[j])
            if bi[0] <= bj[2] and bj[0] <= bi[2] and bi[1] <= bj[3] and bj[1] <= bi[3]:
                raise SelfIntersecting(
                    f"edges {segs[i]} and {segs[j]} intersect")


def _cell_center_inside(cycle: Cycle, px2: int, py2: int) -> bool:
    """Exact point-in-polygon for a point given in doubled coordinates.

    The point is a cell center, so the horizontal ray through it never
    meets a corner and only crosses vertical edges transversally.
    """
    crossings = 0
    m = len(cycle)
    for i in range(m):
        (ax, ay), (bx, by) = cycle[i], cycle[(i + 1) % m]
        if ax != bx:
            continue
        ylo, yhi = (ay, by) if ay < by else (by, ay)
        if 2 * ylo < py2 < 2 * yhi and 2 * ax > px2:
            crossings += 1
    return crossings % 2 == 1


def validate(raw_cycles: Sequence[Sequence], *, require_connected: bool = False
             ) -> Polyomino:
    """Build a Polyomino from raw corner cycles.

    Input orientations and cycle order are ignored: nesting depth decides
    which cycles are outers and which are holes, and orientations are
    normalized (outer counterclockwise, holes clockwise).  Cycles may touch
    each other at grid points.
    """
    if not raw_cycles:
        raise NonRectilinear("no cycles given")
    cycles = [_clean_cycle(c) for c in raw_cycles]
    for c in cycles:
        _check_simple(c)
    oriented = []
    for i, c in enumerate(cycles):
        x0, y0 = min(c)
        px2, py2 = 2 * x0 + 1, 2 * y0 + 1
        depth = sum(1 for j, other in enumerate(cycles)
                    if j != i and _cell_center_inside(other, px2, py2))
        ccw = _signed_area(c) > 0
        want_ccw = depth % 2 == 0
        oriented.append(c if ccw == want_ccw else tuple(reversed(c)))
    slabs = _cycles_to_slabs(oriented, strict=True)
    poly = Polyomino(slabs)
    if require_connected and len(components(poly)) != 1:
        raise Disconnected(f"{len(components(poly))} components, expected 1")
    return poly


# ---------------------------------------------------------------------------
# module-level operations


def area(p: Polyomino) -> int:
    return p.area


def rectangle_partition(p: Polyomino) -> list:
    """Interior-disjoint rectangles covering p, obtained by cutting with
    vertical chords through the reflex corners.  The piece count is at most
    n/2 + h - 1 and at most 3n/4 - 2 for n corners and h holes."""
    return list(p._rects)


def components(p: Polyomino) -> list:
    """Connected components (cells sharing an edge; corner contact does not
    connect), each as an independent Polyomino."""
    ncomp = max(p._comp_labels, default=-1) + 1
    if ncomp <= 1:
        return [] if p.is_empty else [p]
    buckets: list = [[] for _ in range(ncomp)]
    for (x0, x1, ivs), owners in zip(p._slabs, p._slab_owners):
        per: dict = {}
        for iv, own in zip(ivs, owners):
            per.setdefault(p._comp_labels[own], []).append(iv)
        for label, sub in per.items():
            buckets[label].append((x0, x1, tuple(sub)))
    out = [Polyomino(_slabs_canonical(b)) for b in buckets]
    out.sort(key=lambda q: q.cycles[0][0])
    return out


def is_connected(p: Polyomino) -> bool:
    return len(components(p)) == 1


def has_consistent_parity(p: Polyomino) -> bool:
    """True iff all corner x-coordinates share one parity and all corner
    y-coordinates share one parity.  Vacuously true for the empty region."""
    xs = {x % 2 for c in p.cycles for x, _ in c}
    ys = {y % 2 for c in p.cycles for _, y in c}
    return len(xs) <= 1 and len(ys) <= 1


def erode_unit(p: Polyomino) -> Polyomino:
    return Polyomino(_slabs_morph(p._slabs, 1, erode=True))


def dilate_unit(p: Polyomino) -> Polyomino:
    return Polyomino(_slabs_morph(p._slabs, 1, erode=False))


def offset(p: Polyomino, r: int) -> Polyomino:
    """L-infinity offset B(p, r): dilation for r > 0, erosion for r < 0,
    computed as |r| repeated unit steps with degenerate-corridor cleanup
    after each step."""
    slabs = p._slabs
    for _ in range(abs(r)):
        if not slabs:
            break
        slabs = _slabs_morph(slabs, 1, erode=r < 0)
    return Polyomino(slabs)


def difference(p: Polyomino, q: Polyomino) -> Polyomino:
    """Closure of p minus q.  Requires q to be a subset of p."""
    if not _slabs_contains(p._slabs, q._slabs):
        raise NotContained("difference requires Q to be contained in P")
    return Polyomino(_slabs_combine(p._slabs, q._slabs, _iv_diff))


def union(p: Polyomino, q: Polyomino) -> Polyomino:
    return Polyomino(_slabs_combine(p._slabs, q._slabs, _iv_union))


def intersection(p: Polyomino, q: Polyomino) -> Polyomino:
    return Polyomino(_slabs_combine(p._slabs, q._slabs, _iv_intersect))


def grid_touch_points(p: Polyomino) -> list:
    """Grid points where distinct boundary cycles (or two stretches of the
    boundary) meet.  Such contacts are legal but worth flagging: corridor
    reasoning downstream assumes positive-width features."""
    seen: dict = {}
    for c in p.cycles:
        for pt in c:
            seen[pt] = seen.get(pt, 0) + 1
    return sorted(pt for pt, k in seen.items() if k > 1)


def even_snap(p: Polyomino) -> Polyomino:
    """Maximal subpolyomino whose corners all have even coordinates.

    Every boundary edge is moved inward to the nearest even line and the
    region is re-extracted, which drops the corridors that collapse."""
    snapped = []
    for cyc in p.cycles:
        m = len(cyc)
        coord = []
        for i in range(m):
            (ax, ay), (bx, by) = cyc[i], cyc[(i + 1) % m]
            if ax == bx:  # vertical edge
                if by < ay:  # downward: interior on +x side
                    c = ax if ax % 2 == 0 else ax + 1
                else:
                    c = ax if ax % 2 == 0 else ax - 1
                coord.append(("v", c))
            else:
                if bx > ax:  # bottom edge: interior above
                    c = ay if ay % 2 == 0 else ay + 1
                else:
                    c = ay if ay % 2 == 0 else ay - 1
                coord.append(("h", c))
        pts = []
        for i in range(m):
            prev_axis, prev_c = coord[i - 1]
            axis, c = coord[i]
            if prev_axis == axis:
                raise AssertionError("edges must alternate axes")
            if axis == "v":
                pts.append((c, prev_c))
            else:
                pts.append((prev_c, c))
        snapped.append(tuple(pts))
    return Polyomino(_cycles_to_slabs(snapped))


def adjacency_counts(p: Polyomino) -> tuple:
    """(horizontal, vertical) counts of edge-adjacent cell pairs, computed
    arithmetically from the slab decomposition."""
    horiz = 0
    vert = 0
    prev = None
    for x0, x1, ivs in p._slabs:
        width = x1 - x0
        total = _iv_length(ivs)
        vert += width * sum(y1 - y0 - 1 for y0, y1 in ivs)
        horiz += (width - 1) * total
        if prev is not None and prev[1] == x0:
            horiz += _iv_length(_iv_intersect(prev[2], ivs))
        prev = (x0, x1, ivs)
    return horiz, vert


def black_white_counts(p: Polyomino) -> tuple:
    """Chessboard cell counts (black, white) with black = (i+j) even."""
    black = 0
    for r in p._rects:
        w, h = r.width, r.height
        ceo, cee = w - w // 2, w // 2  # odd-index counts etc. via parity split
        reo, ree = h - h // 2, h // 2
        if (r.x0 + r.y0) % 2 == 0:
            black += ceo * reo + cee * ree
        else:
            black += ceo * ree + cee * reo
    return black, p.area - black
