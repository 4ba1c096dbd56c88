import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytile import errors, geometry, instances
from polytile.geometry import (
    Polyomino,
    Rect,
    components,
    difference,
    dilate_unit,
    erode_unit,
    even_snap,
    grid_touch_points,
    has_consistent_parity,
    intersection,
    is_connected,
    offset,
    rectangle_partition,
    union,
    validate,
    adjacency_counts,
    black_white_counts,
)

from conftest import (
    brute_components,
    brute_dilate,
    brute_erode,
    brute_even_snap,
    black_white,
    cells_of,
    shoelace_area,
)


class TestValidate:
    def test_square(self, square4):
        assert square4.area == 16
        assert square4.hole_count == 0
        assert square4.cycles == (((0, 0), (4, 0), (4, 4), (0, 4)),)

    def test_annulus(self, annulus6):
        assert annulus6.area == 32
        assert annulus6.hole_count == 1

    def test_non_rectilinear(self):
        with pytest.raises(errors.NonRectilinear):
            validate([[(0, 0), (3, 1), (3, 3), (0, 3)]])

    def test_non_integer(self):
        with pytest.raises(errors.NonRectilinear):
            validate([[(0, 0), (3.5, 0), (3.5, 3), (0, 3)]])

    def test_too_few_corners(self):
        with pytest.raises(errors.NonRectilinear):
            validate([[(0, 0), (1, 0)]])

    def test_overflow(self):
        big = 1 << 61
        with pytest.raises(errors.Overflow):
            validate([[(0, 0), (big, 0), (big, 2), (0, 2)]])

    def test_self_intersecting(self):
        # figure touching itself along a segment
        with pytest.raises(errors.SelfIntersecting):
            validate([[(0, 0), (4, 0), (4, 2), (2, 2), (2, 1), (2, 3),
                       (0, 3)]])

    def test_repeated_corner(self):
        with pytest.raises(errors.SelfIntersecting):
            validate([[(0, 0), (2, 0), (2, 2), (1, 2), (1, 1), (3, 1),
                       (3, 3), (0, 3), (0, 0), (0, 0)]])

    def test_hole_escaping_outer(self):
        with pytest.raises(errors.HoleOutsideOuter):
            validate([[(0, 0), (4, 0), (4, 4), (0, 4)],
                      [(2, 2), (2, 6), (3, 6), (3, 2)]])

    def test_overlapping_interiors(self):
        with pytest.raises(errors.OverlappingHoles):
            validate([[(0, 0), (4, 0), (4, 4), (0, 4)],
                      [(2, -1), (3, -1), (3, 5), (2, 5)]])

    def test_partially_escaping_cycle(self):
        with pytest.raises((errors.OverlappingHoles, errors.HoleOutsideOuter)):
            validate([[(0, 0), (4, 0), (4, 4), (0, 4)],
                      [(2, 2), (6, 2), (6, 6), (2, 6)]])

    def test_orientation_normalized(self):
        cw = validate([[(0, 4), (4, 4), (4, 0), (0, 0)]])
        ccw = validate([[(0, 0), (4, 0), (4, 4), (0, 4)]])
        assert cw == ccw

    def test_cycle_order_ignored(self, annulus6):
        swapped = validate([[(2, 2), (2, 4), (4, 4), (4, 2)],
                            [(0, 0), (6, 0), (6, 6), (0, 6)]])
        assert swapped == annulus6

    def test_collinear_corners_merged(self):
        p = validate([[(0, 0), (2, 0), (4, 0), (4, 4), (0, 4)]])
        assert p.corner_count == 4

    def test_two_disjoint_squares(self):
        p = validate([[(0, 0), (2, 0), (2, 2), (0, 2)],
                      [(4, 4), (6, 4), (6, 6), (4, 6)]])
        assert len(components(p)) == 2
        with pytest.raises(errors.Disconnected):
            validate([[(0, 0), (2, 0), (2, 2), (0, 2)],
                      [(4, 4), (6, 4), (6, 6), (4, 6)]],
                     require_connected=True)

    def test_touching_cycles_kept_and_flagged(self):
        p = validate([[(0, 0), (1, 0), (1, 1), (0, 1)],
                      [(1, 1), (2, 1), (2, 2), (1, 2)]])
        assert p.area == 2
        assert len(components(p)) == 2
        assert grid_touch_points(p) == [(1, 1)]

    def test_round_trip_on_corpus(self, corpus_small):
        for p in corpus_small:
            assert instances.loads(instances.dumps(p)) == p


class TestArea:
    def test_examples(self, square4, annulus6, chessboard):
        assert square4.area == 16
        assert annulus6.area == 32
        assert chessboard.area == 62

    def test_matches_shoelace_and_cells(self, corpus_small):
        for p in corpus_small:
            assert p.area == shoelace_area(p) == len(cells_of(p))


class TestOffset:
    def test_erode_square(self):
        p = validate([[(0, 0), (6, 0), (6, 6), (0, 6)]])
        assert offset(p, -1) == validate([[(1, 1), (5, 1), (5, 5), (1, 5)]])

    def test_thin_annulus_erodes_away(self):
        p = validate([[(0, 0), (6, 0), (6, 6), (0, 6)],
                      [(2, 2), (2, 4), (4, 4), (4, 2)]])
        assert offset(p, -1).is_empty

    def test_dilate_square(self, square4):
        assert offset(square4, 1) == \
            validate([[(-1, -1), (5, -1), (5, 5), (-1, 5)]])

    def test_erode_strip_empty(self):
        strip = validate([[(0, 0), (9, 0), (9, 2), (0, 2)]])
        assert erode_unit(strip).is_empty

    def test_erode_h_shape_splits(self):
        h = validate([[(0, 0), (3, 0), (3, 2), (5, 2), (5, 0), (8, 0),
                       (8, 6), (5, 6), (5, 4), (3, 4), (3, 6), (0, 6)]])
        out = erode_unit(h)
        assert len(components(out)) == 2

    def test_dilate_cell(self):
        cell = Polyomino.from_rect(0, 0, 1, 1)
        assert dilate_unit(cell) == Polyomino.from_rect(-1, -1, 2, 2)

    def test_unit_composition(self, corpus_small):
        for p in corpus_small[:40]:
            assert offset(offset(p, -1), -1) == offset(p, -2)

    def test_erode_dilate_containment(self, corpus_small):
        for p in corpus_small[:40]:
            e = erode_unit(p)
            d = dilate_unit(p)
            assert d.area > p.area >= e.area
            assert p.contains(dilate_unit(e))

    def test_against_cellwise_morphology(self, corpus_tiny_box):
        for p in corpus_tiny_box:
            cells = cells_of(p)
            assert cells_of(erode_unit(p)) == brute_erode(cells)
            assert cells_of(dilate_unit(p)) == brute_dilate(cells)

    def test_parity_preserved_by_unit_offsets(self, corpus_tiny_box):
        for p in corpus_tiny_box[:30]:
            scaled = Polyomino.from_cells(
                (i + di, j + dj)
                for i, j in ((2 * a, 2 * b) for a, b in cells_of(p))
                for di in (0, 1) for dj in (0, 1))
            assert has_consistent_parity(scaled)
            assert has_consistent_parity(erode_unit(scaled))
            assert has_consistent_parity(dilate_unit(scaled))


class TestDifference:
    def test_annulus_from_difference(self):
        p = Polyomino.from_rect(0, 0, 8, 8)
        q = Polyomino.from_rect(2, 2, 6, 6)
        d = difference(p, q)
        assert d.hole_count == 1
        assert d.area == 64 - 16

    def test_full_difference_empty(self, square4):
        assert difference(square4, square4).is_empty

    def test_empty_identity(self, square4):
        assert difference(square4, Polyomino.empty()) == square4

    def test_not_contained(self, square4):
        with pytest.raises(errors.NotContained):
            difference(square4, Polyomino.from_rect(2, 2, 6, 6))

    def test_union_difference_inverse(self, corpus_small):
        for p in corpus_small[:30]:
            inner = erode_unit(p)
            rest = difference(p, inner)
            assert union(rest, inner) == p


class TestRectanglePartition:
    def test_square_single(self, square4):
        assert rectangle_partition(square4) == [Rect(0, 0, 4, 4)]

    def test_l_shape_two_pieces(self):
        p = validate([[(0, 0), (4, 0), (4, 2), (2, 2), (2, 6), (0, 6)]])
        parts = rectangle_partition(p)
        assert len(parts) == 2  # == n/2 + h - 1 for n=6, h=0

    def test_annulus_at_most_four(self, annulus6):
        assert len(rectangle_partition(annulus6)) <= 4

    def test_bounds_and_coverage(self, corpus_small):
        for p in corpus_small:
            parts = rectangle_partition(p)
            n, h = p.corner_count, p.hole_count
            assert len(parts) <= n // 2 + h - 1 or n == 4
            assert 4 * len(parts) <= 3 * n - 8
            assert sum(r.area for r in parts) == p.area
            seen = set()
            for r in parts:
                cur = set(r.cells())
                assert not (cur & seen)
                seen |= cur
            assert seen == cells_of(p)


class TestComponents:
    def test_annulus_connected(self, annulus6):
        assert is_connected(annulus6)

    def test_h_shape_connected(self):
        h = validate([[(0, 0), (3, 0), (3, 2), (5, 2), (5, 0), (8, 0),
                       (8, 6), (5, 6), (5, 4), (3, 4), (3, 6), (0, 6)]])
        assert is_connected(h)

    def test_matches_cell_bfs(self, corpus_tiny_box):
        for p in corpus_tiny_box:
            mine = sorted(frozenset(cells_of(c)) for c in components(p))
            ref = sorted(frozenset(c) for c in brute_components(cells_of(p)))
            assert mine == ref


class TestParityAndCounts:
    def test_consistent_parity_examples(self):
        assert has_consistent_parity(Polyomino.from_rect(0, 0, 2, 2))
        assert not has_consistent_parity(Polyomino.from_rect(0, 0, 1, 1))
        assert has_consistent_parity(
            validate([[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]]))
        assert has_consistent_parity(Polyomino.empty())

    def test_black_white_counts(self, corpus_tiny_box):
        for p in corpus_tiny_box:
            assert black_white_counts(p) == black_white(cells_of(p))

    def test_adjacency_counts(self, corpus_tiny_box):
        for p in corpus_tiny_box:
            cells = cells_of(p)
            horiz = sum(1 for i, j in cells if (i + 1, j) in cells)
            vert = sum(1 for i, j in cells if (i, j + 1) in cells)
            assert adjacency_counts(p) == (horiz, vert)


class TestEvenSnap:
    def test_shifted_rect(self):
        p = validate([[(1, 0), (5, 0), (5, 4), (1, 4)]])
        assert even_snap(p) == Polyomino.from_rect(2, 0, 4, 4)

    def test_even_square_fixed(self):
        p = Polyomino.from_rect(0, 0, 2, 2)
        assert even_snap(p) == p

    def test_thin_strip_vanishes(self):
        p = Polyomino.from_rect(0, 0, 9, 1)
        assert even_snap(p).is_empty

    def test_matches_cellwise_definition(self, corpus_tiny_box, corpus_small):
        for p in (*corpus_tiny_box, *corpus_small[:40]):
            assert cells_of(even_snap(p)) == brute_even_snap(cells_of(p))


class TestTransforms:
    def test_symmetry_roundtrips(self, corpus_small):
        for p in corpus_small[:25]:
            assert p.rotate90().rotate90().rotate90().rotate90() == p
            assert p.reflect_x().reflect_x() == p
            assert p.translate(3, -7).translate(-3, 7) == p
            assert p.rotate90().area == p.area


cell_sets = st.sets(
    st.tuples(st.integers(0, 7), st.integers(0, 7)), min_size=1, max_size=28)


@settings(max_examples=80, derandomize=True, deadline=None)
@given(cell_sets)
def test_from_cells_roundtrip_properties(cells):
    p = Polyomino.from_cells(cells)
    assert p.area == len(cells)
    assert cells_of(p) == set(cells)
    assert instances.loads(instances.dumps(p)) == p
    parts = rectangle_partition(p)
    assert sum(r.area for r in parts) == len(cells)
    assert sorted(len(c) for c in brute_components(cells)) == \
        sorted(c.area for c in components(p))


@settings(max_examples=60, derandomize=True, deadline=None)
@given(cell_sets)
def test_morphology_properties(cells):
    p = Polyomino.from_cells(cells)
    assert cells_of(erode_unit(p)) == brute_erode(cells)
    assert cells_of(dilate_unit(p)) == brute_dilate(set(cells))
    assert cells_of(even_snap(p)) == brute_even_snap(cells)
    assert intersection(p, p) == p
