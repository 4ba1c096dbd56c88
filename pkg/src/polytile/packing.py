"""Maximum domino packing of a polyomino in corner representation.

The pipeline reduces the packing problem to a maximum matching on a graph
whose size is polynomial in the corner count n, regardless of area:

1. keep the maximal subpolyomino P1 with all-even corners;
2. carve minimal channels of even 2x2 squares to make it hole-free (P2);
3. erode P2 by floor(3n/2) to get a deep core Q whose removal is provably
   harmless, and work on P3 = P minus Q;
4. find the maximal long pipes (corridors with length >= 3 * width) of P3;
5. replace each pipe's middle by one long edge per cell row, giving the
   reduced graph G*;
6. output |M| + (area(P) - |V(G*)|) / 2 for a maximum matching M of G*.

Everything removed along the way (Q and the pipe middles) admits a
canonical tiling, so the certificate stays implicit and compact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import geometry, matching
from .errors import BudgetExceeded, ParityViolation, PipelineError, PipesOverlap
from .geometry import Polyomino, Rect

DEFAULT_GSTAR_BUDGET = 10 ** 6

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Pipe:
    """A maximal rectangular corridor whose two long sides lie on the
    boundary; horizontal orientation means the contained sides are the
    horizontal ones."""

    rect: Rect
    orientation: str  # "h" or "v"

    @property
    def width(self) -> int:
        return self.rect.height if self.orientation == "h" else self.rect.width

    @property
    def length(self) -> int:
        return self.rect.width if self.orientation == "h" else self.rect.height

    @property
    def is_long(self) -> bool:
        return self.length >= 3 * self.width


@dataclass(frozen=True)
class Channel:
    """A carved corridor of even-aligned 2x2 squares: one rectangle when
    straight, two sharing the bend square when L-shaped."""

    rects: Tuple[Rect, ...]
    squares: int

    @property
    def shape(self) -> str:
        return "straight" if len(self.rects) == 1 else "L"

    @property
    def anchor(self) -> Tuple[int, int]:
        return min((r.x0, r.y0) for r in self.rects)

    def region(self) -> Polyomino:
        out = Polyomino.from_rect(*self.rects[0])
        for r in self.rects[1:]:
            out = geometry.union(out, Polyomino.from_rect(*r))
        return out


@dataclass
class ReducedGraph:
    """G*: the cells surviving pipe contraction plus one long edge per
    contracted pipe row."""

    region: Polyomino
    middles: Tuple[Tuple[Rect, str], ...]
    contraction_edges: Tuple[Tuple[Cell, Cell], ...]

    @property
    def vertex_count(self) -> int:
        return self.region.area

    @property
    def edge_count(self) -> int:
        h, v = geometry.adjacency_counts(self.region)
        return h + v + len(self.contraction_edges)

    def build(self, budget: int = DEFAULT_GSTAR_BUDGET) -> matching.BipartiteGraph:
        from . import oracle
        cells = oracle.rasterize(self.region, budget)
        return matching.BipartiteGraph.from_cells(cells, self.contraction_edges)


@dataclass
class PipelineTrace:
    p1: Polyomino
    p2: Polyomino
    q: Polyomino
    p3: Polyomino
    pipes: List[Pipe]
    graph: Optional[ReducedGraph]
    n0: int
    n2: int
    channels: List[Channel] = field(default_factory=list)
    pipe_overlap_diagnostic: bool = False


@dataclass(frozen=True)
class Certificate:
    """Implicit packing description: the matching on G* plus canonical
    fillings of everything that was removed."""

    gstar_matching: Tuple[Tuple[Cell, Cell], ...]
    contraction_edges: Tuple[Tuple[Cell, Cell, bool], ...]  # (a, b, matched)
    middles: Tuple[Tuple[Rect, str], ...]
    q_region: Polyomino


@dataclass
class PackingResult:
    max_dominoes: int
    uncovered: int
    certificate: Optional[Certificate] = None
    traces: Optional[List[PipelineTrace]] = None


# ---------------------------------------------------------------------------
# step 1


def step1_even_subpolyomino(p: Polyomino) -> Polyomino:
    """Union of all 2x2 squares [2i,2i+2]x[2j,2j+2] inside p."""
    p1 = geometry.even_snap(p)
    assert p.contains(p1), "P1 must be a subpolyomino of P"
    assert geometry.has_consistent_parity(p1) and all(
        x % 2 == 0 and y % 2 == 0 for c in p1.cycles for x, y in c), \
        "P1 corners must be even"
    return p1


# ---------------------------------------------------------------------------
# step 2: hole elimination by channel carving


def _cycle_edges(cycle):
    """(axis, c, lo, hi, interior_sign) for each edge of one cycle."""
    m = len(cycle)
    for i in range(m):
        (ax, ay), (bx, by) = cycle[i], cycle[(i + 1) % m]
        if ax == bx:
            yield ("v", ax, min(ay, by), max(ay, by), 1 if by < ay else -1)
        else:
            yield ("h", ay, min(ax, bx), max(ax, bx), 1 if bx > ax else -1)


def _even_candidates(lo: int, hi: int, hints: Sequence[int]) -> List[int]:
    """Even values v with lo <= v <= hi, taken from the range ends and the
    neighbourhoods of the hinted coordinates.  All inputs are even."""
    if hi < lo:
        return []
    cand = {lo, hi}
    for h in hints:
        base = h - h % 2
        for v in (base - 2, base, base + 2):
            if lo <= v <= hi:
                cand.add(v)
    return sorted(cand)


def _straight_channels(comp, eh, eo, hints):
    axis, hc, hlo, hhi, hs = eh
    _, oc, olo, ohi, os_ = eo
    if hc == oc or hs != (1 if oc > hc else -1) or os_ != (1 if hc > oc else -1):
        return
    lo, hi = max(hlo, olo), min(hhi, ohi)
    y0, y1 = min(hc, oc), max(hc, oc)
    count = (y1 - y0) // 2
    for a in _even_candidates(lo, hi - 2, hints):
        if axis == "h":
            rect = Rect(a, y0, a + 2, y1)
        else:
            rect = Rect(y0, a, y1, a + 2)
        if comp.contains_rect(rect):
            yield Channel((rect,), count)
            return  # all columns give the same count; first is canonical


def _l_channels(comp, eh, eo, hints_x, hints_y):
    """L-shaped channels leaving a horizontal hole edge vertically and
    arriving horizontally at a vertical outer edge (callers swap axes for
    the mirrored case)."""
    _, hy, hx0, hx1, hs = eh
    _, ox, oy0, oy1, os_ = eo
    best = None
    for a in _even_candidates(hx0, hx1 - 2, hints_x + [ox, ox - 2]):
        for b in _even_candidates(oy0, oy1 - 2, hints_y + [hy, hy - 2]):
            if hs > 0:
                if b < hy:
                    continue
                vrect = Rect(a, hy, a + 2, b + 2)
            else:
                if b + 2 > hy:
                    continue
                vrect = Rect(a, b, a + 2, hy)
            if os_ > 0:
                if a < ox:
                    continue
                hrect = Rect(ox, b, a + 2, b + 2)
            else:
                if a + 2 > ox:
                    continue
                hrect = Rect(a, b, ox, b + 2)
            v = vrect.height // 2
            h = hrect.width // 2
            count = v + h - 1
            if best is not None and count >= best.squares:
                continue
            if comp.contains_rect(vrect) and comp.contains_rect(hrect):
                rects = (vrect,) if hrect.width == 2 else (vrect, hrect)
                best = Channel(rects, count)
    if best is not None:
        yield best


def _transpose_edge(e):
    axis, c, lo, hi, s = e
    return ("v" if axis == "h" else "h", c, lo, hi, s)


def _transpose_channel(ch: Channel) -> Channel:
    return Channel(tuple(Rect(r.y0, r.x0, r.y1, r.x1) for r in ch.rects),
                   ch.squares)


def _min_channel(comp: Polyomino) -> Channel:
    """Smallest channel of even 2x2 squares connecting some hole edge of
    the component to its outer boundary, ties broken by anchor."""
    outer, holes = comp._comps[0]
    outer_edges = list(_cycle_edges(outer))
    hole_edges = [e for h in holes for e in _cycle_edges(h)]
    xs = sorted({x for c in comp.cycles for x, _ in c})
    ys = sorted({y for c in comp.cycles for _, y in c})
    transposed = None  # transposed component, built lazily

    def tcomp():
        nonlocal transposed
        if transposed is None:
            transposed = Polyomino(geometry._cycles_to_slabs(
                [tuple((y, x) for x, y in reversed(c)) for c in comp.cycles]))
        return transposed

    found: List[Tuple] = []

    def consider(ch: Channel):
        found.append((ch.squares, ch.anchor, len(ch.rects), ch))

    for eh in hole_edges:
        for eo in outer_edges:
            if eh[0] == eo[0]:
                hints = xs if eh[0] == "h" else ys
                for ch in _straight_channels(comp, eh, eo, hints):
                    consider(ch)
            elif eh[0] == "h":
                for ch in _l_channels(comp, eh, eo, xs, ys):
                    consider(ch)
            else:
                for ch in _l_channels(tcomp(), _transpose_edge(eh),
                                      _transpose_edge(eo), ys, xs):
                    consider(_transpose_channel(ch))
    if not found:
        raise PipelineError("no straight or L channel connects any hole "
                            "to the outer boundary")
    found.sort(key=lambda t: t[:3])
    return found[0][3]


def step2_carve_channels(p1: Polyomino) -> Tuple[Polyomino, List[Channel]]:
    """Carve minimal channels until no component has holes."""
    cur = p1
    channels: List[Channel] = []
    while True:
        holed = [c for c in geometry.components(cur) if c.hole_count > 0]
        if not holed:
            break
        ch = min((_min_channel(c) for c in holed),
                 key=lambda ch: (ch.squares, ch.anchor))
        cur = geometry.difference(cur, ch.region())
        channels.append(ch)
    assert geometry.has_consistent_parity(cur), "P2 must keep parity"
    return cur, channels


# ---------------------------------------------------------------------------
# step 3


def step3_remove_core(p: Polyomino, p2: Polyomino, n: int
                      ) -> Tuple[Polyomino, Polyomino]:
    """Q = B(P2, -floor(3n/2)) by repeated unit erosion; P3 = P minus Q."""
    q = geometry.offset(p2, -(3 * n // 2))
    assert geometry.has_consistent_parity(q)
    p3 = geometry.difference(p, q)
    return q, p3


# ---------------------------------------------------------------------------
# step 4: maximal long pipes


def _edge_groups(p: Polyomino):
    verts: Dict[Tuple[int, int], List] = {}
    horiz: Dict[Tuple[int, int], List] = {}
    for axis, c, lo, hi, s in p.boundary_edges():
        target = verts if axis == "v" else horiz
        target.setdefault((c, s), []).append((lo, hi))
    return verts, horiz


def _covering_runs_x(p: Polyomino, y0: int, y1: int, a: int, b: int):
    """Maximal x-subranges of [a, b] where the cross-section covers
    [y0, y1]."""
    pieces = []
    pos = a
    for x0, x1, ivs in p._slabs:
        if x1 <= a:
            continue
        if x0 >= b:
            break
        lo, hi = max(x0, a), min(x1, b)
        if lo > pos:
            pieces.append((pos, lo, False))
        pieces.append((lo, hi, geometry._iv_contains(ivs, ((y0, y1),))))
        pos = hi
    runs: List[List[int]] = []
    for lo, hi, cov in pieces:
        if cov:
            if runs and runs[-1][1] == lo:
                runs[-1][1] = hi
            else:
                runs.append([lo, hi])
    return [(lo, hi) for lo, hi in runs]


def _covering_runs_y(p: Polyomino, x0: int, x1: int, a: int, b: int):
    """Maximal y-subranges of [a, b] covered across the whole [x0, x1]."""
    ivs = None
    cover = x0
    for s0, s1, siv in p._slabs:
        if s1 <= x0 or s0 >= x1:
            continue
        if s0 > cover:
            return []
        cover = s1
        ivs = siv if ivs is None else geometry._iv_intersect(ivs, siv)
    if ivs is None or cover < x1:
        return []
    return [(max(lo, a), min(hi, b)) for lo, hi in ivs
            if min(hi, b) > max(lo, a)]


def step4_find_long_pipes(p3: Polyomino, debug: bool = False
                          ) -> Tuple[List[Pipe], bool]:
    """All maximal long pipes and a flag telling whether an overlapping
    pair was found (in which case a greedy disjoint subset is returned)."""
    verts, horiz = _edge_groups(p3)
    candidates: List[Pipe] = []
    for (y0, s0), parts0 in sorted(horiz.items()):
        if s0 != 1:
            continue
        for (y1, s1), parts1 in sorted(horiz.items()):
            if s1 != -1 or y1 <= y0:
                continue
            for alo, ahi in parts0:
                for blo, bhi in parts1:
                    a, b = max(alo, blo), min(ahi, bhi)
                    if b - a <= 0:
                        continue
                    for ra, rb in _covering_runs_x(p3, y0, y1, a, b):
                        candidates.append(Pipe(Rect(ra, y0, rb, y1), "h"))
    for (x0, s0), parts0 in sorted(verts.items()):
        if s0 != 1:
            continue
        for (x1, s1), parts1 in sorted(verts.items()):
            if s1 != -1 or x1 <= x0:
                continue
            for alo, ahi in parts0:
                for blo, bhi in parts1:
                    a, b = max(alo, blo), min(ahi, bhi)
                    if b - a <= 0:
                        continue
                    for ra, rb in _covering_runs_y(p3, x0, x1, a, b):
                        candidates.append(Pipe(Rect(x0, ra, x1, rb), "v"))
    # keep maximal candidates only, then the long ones
    maximal = []
    for p in candidates:
        r = p.rect
        if any(q is not p and q.rect.x0 <= r.x0 and q.rect.y0 <= r.y0
               and q.rect.x1 >= r.x1 and q.rect.y1 >= r.y1
               and q.rect != r for q in candidates):
            continue
        maximal.append(p)
    seen = set()
    long_pipes = []
    for p in sorted(maximal, key=lambda p: (p.rect, p.orientation)):
        if p.rect not in seen and p.is_long:
            seen.add(p.rect)
            long_pipes.append(p)

    def overlap(p, q):
        return (min(p.rect.x1, q.rect.x1) > max(p.rect.x0, q.rect.x0)
                and min(p.rect.y1, q.rect.y1) > max(p.rect.y0, q.rect.y0))

    clash = any(overlap(p, q) for i, p in enumerate(long_pipes)
                for q in long_pipes[i + 1:])
    if clash:
        if debug:
            raise PipesOverlap("maximal long pipes overlap")
        picked: List[Pipe] = []
        for p in sorted(long_pipes,
                        key=lambda p: (-p.rect.area, p.rect, p.orientation)):
            if all(not overlap(p, q) for q in picked):
                picked.append(p)
        long_pipes = sorted(picked, key=lambda p: (p.rect, p.orientation))
    return long_pipes, clash


# ---------------------------------------------------------------------------
# step 5: pipe contraction and G*


def _pipe_middle(pipe: Pipe) -> Optional[Tuple[Rect, List[Tuple[Cell, Cell]]]]:
    k, length = pipe.width, pipe.length
    if length <= 6:
        return None
    r = 2 * ((length + 1) // 2) - k - 2
    if r <= k + 2:
        return None
    rect = pipe.rect
    edges = []
    if pipe.orientation == "h":
        middle = Rect(rect.x0 + k + 2, rect.y0, rect.x0 + r, rect.y1)
        for j in range(k):
            edges.append(((rect.x0 + k + 1, rect.y0 + j),
                          (rect.x0 + r, rect.y0 + j)))
    else:
        middle = Rect(rect.x0, rect.y0 + k + 2, rect.x1, rect.y0 + r)
        for j in range(k):
            edges.append(((rect.x0 + j, rect.y0 + k + 1),
                          (rect.x0 + j, rect.y0 + r)))
    return middle, edges


def step5_contract(p3: Polyomino, pipes: Sequence[Pipe]) -> ReducedGraph:
    """Remove each long pipe's middle block and bridge every cell row with
    one contraction edge.  Each removed row has an even cell count, so the
    reduced graph stays bipartite."""
    middles: List[Tuple[Rect, str]] = []
    edges: List[Tuple[Cell, Cell]] = []
    region = p3
    for pipe in sorted(pipes, key=lambda p: (p.rect, p.orientation)):
        got = _pipe_middle(pipe)
        if got is None:
            continue
        middle, pipe_edges = got
        middles.append((middle, pipe.orientation))
        edges.extend(pipe_edges)
        region = geometry.difference(region, Polyomino.from_rect(*middle))
    return ReducedGraph(region, tuple(middles), tuple(edges))


# ---------------------------------------------------------------------------
# step 6


def step6_count(graph: ReducedGraph, n0: int,
                budget: int = DEFAULT_GSTAR_BUDGET,
                want_certificate: bool = False) -> PackingResult:
    """|M| + (N0 - N2)/2 for a maximum matching M of G*."""
    n2 = graph.vertex_count
    if (n0 - n2) % 2 != 0:
        raise ParityViolation(f"area {n0} minus |V(G*)| {n2} is odd")
    g = graph.build(budget)
    pairs = matching.max_matching(g)
    size = len(pairs) + (n0 - n2) // 2
    result = PackingResult(size, n0 - 2 * size)
    if want_certificate:
        matched = {tuple(sorted((a, b))) for a, b in pairs.items()}
        contr = {tuple(sorted(e)) for e in graph.contraction_edges}
        result.certificate = Certificate(
            gstar_matching=tuple(sorted(e for e in matched if e not in contr)),
            contraction_edges=tuple(sorted(
                (a, b, (a, b) in matched)
                for a, b in (tuple(sorted(e)) for e in graph.contraction_edges))),
            middles=graph.middles,
            q_region=Polyomino.empty(),
        )
    return result


# ---------------------------------------------------------------------------
# driver


def _component_result(comp: Polyomino, budget: int, want_certificate: bool,
                      debug: bool) -> Tuple[PackingResult, PipelineTrace]:
    n = comp.corner_count
    n0 = comp.area
    p1 = step1_even_subpolyomino(comp)
    assert p1.corner_count <= n, "corner bound n(P1) <= n violated"
    p2, channels = step2_carve_channels(p1)
    assert p2.hole_count == 0
    assert p2.corner_count < 3 * n or p2.is_empty, "n(P2) < 3n violated"
    q, p3 = step3_remove_core(comp, p2, n)
    assert q.corner_count <= 3 * n, "n(Q) <= 3n violated"
    assert p3.corner_count <= 4 * n, "n(P3) <= 4n violated"
    pipes, clash = step4_find_long_pipes(p3, debug=debug)
    graph = step5_contract(p3, pipes)
    result = step6_count(graph, n0, budget, want_certificate)
    if want_certificate and result.certificate is not None:
        result.certificate = Certificate(
            gstar_matching=result.certificate.gstar_matching,
            contraction_edges=result.certificate.contraction_edges,
            middles=result.certificate.middles,
            q_region=q,
        )
    trace = PipelineTrace(p1, p2, q, p3, list(pipes), graph, n0,
                          graph.vertex_count, channels, clash)
    return result, trace


def pack_dominoes(p: Polyomino, budget: int = DEFAULT_GSTAR_BUDGET,
                  want_certificate: bool = False, want_trace: bool = False,
                  debug: bool = False) -> PackingResult:
    """Maximum number of axis-parallel 1x2 dominoes packable into p."""
    total = 0
    traces: List[PipelineTrace] = []
    certs: List[Certificate] = []
    for comp in geometry.components(p):
        res, trace = _component_result(comp, budget, want_certificate, debug)
        total += res.max_dominoes
        traces.append(trace)
        if res.certificate is not None:
            certs.append(res.certificate)
    out = PackingResult(total, p.area - 2 * total)
    black, white = geometry.black_white_counts(p)
    assert out.uncovered >= abs(black - white), "chessboard bound violated"
    if want_trace:
        out.traces = traces
    if want_certificate:
        out.certificate = _merge_certificates(certs)
    return out


def _merge_certificates(certs: List[Certificate]) -> Certificate:
    q = Polyomino.empty()
    for c in certs:
        q = geometry.union(q, c.q_region)
    return Certificate(
        gstar_matching=tuple(sorted(e for c in certs for e in c.gstar_matching)),
        contraction_edges=tuple(sorted(
            e for c in certs for e in c.contraction_edges)),
        middles=tuple(m for c in certs for m in c.middles),
        q_region=q,
    )


def can_tile_dominoes(p: Polyomino, budget: int = DEFAULT_GSTAR_BUDGET) -> bool:
    """True iff p can be tiled (covered exactly) by dominoes."""
    return 2 * pack_dominoes(p, budget).max_dominoes == p.area


def gstar_size(p: Polyomino) -> Tuple[int, int]:
    """(vertices, edges) of G* computed arithmetically, without ever
    materializing the graph.  Used for size-bound measurements on
    instances whose G* is large."""
    vertices = 0
    edge_total = 0
    for comp in geometry.components(p):
        n = comp.corner_count
        p1 = step1_even_subpolyomino(comp)
        p2, _channels = step2_carve_channels(p1)
        q, p3 = step3_remove_core(comp, p2, n)
        pipes, _clash = step4_find_long_pipes(p3)
        graph = step5_contract(p3, pipes)
        vertices += graph.vertex_count
        edge_total += graph.edge_count
    return vertices, edge_total


def explicit_dominoes(p: Polyomino, budget: int = DEFAULT_GSTAR_BUDGET
                      ) -> List[Tuple[Cell, Cell]]:
    """A concrete maximum packing as cell pairs; area-sized, so guarded by
    the budget."""
    if p.area > budget:
        raise BudgetExceeded(f"explicit packing of area {p.area} refused")
    result = pack_dominoes(p, budget, want_certificate=True)
    cert = result.certificate
    assert cert is not None
    dominoes: List[Tuple[Cell, Cell]] = list(cert.gstar_matching)
    for a, b, matched in cert.contraction_edges:
        (ax, ay), (bx, by) = a, b
        if ax == bx:
            path = [a] + [(ax, y) for y in range(ay + 1, by)] + [b]
        else:
            path = [a] + [(x, ay) for x in range(ax + 1, bx)] + [b]
        inner = path[1:-1] if not matched else path
        for i in range(0, len(inner), 2):
            dominoes.append((inner[i], inner[i + 1]))
    for rect in geometry.rectangle_partition(cert.q_region):
        for j in range(rect.y0, rect.y1):
            for i in range(rect.x0, rect.x1, 2):
                dominoes.append(((i, j), (i + 1, j)))
    assert len(dominoes) == result.max_dominoes
    return dominoes
