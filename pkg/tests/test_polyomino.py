"""Convex polyomino model: validation errors, flags, boundary round trips,
and rendering."""
import pytest

from polyogen import counting, oracle
from polyogen.counting import CountClass
from polyogen.lattice import Point
from polyogen.polyomino import (
    BoxNotTight,
    ConvexPolyomino,
    NotConnected,
    NotConvex,
    PolyominoError,
    boundary_walk,
    flags,
    from_boundary,
    render_ascii,
    render_svg,
    validate,
)


def test_rectangle_valid_with_all_flags():
    p = ConvexPolyomino.rectangle(3, 2)
    f = flags(p)
    assert f.directed and f.antidirected and f.parallelogram
    assert p.cell_count() == 6
    assert p.semiperimeter == 5


def test_row_convexity_violation():
    with pytest.raises(NotConvex):
        validate([(0, 2), (1, 3), (0, 2)], 3, 3)


def test_connectivity_violation():
    with pytest.raises(NotConnected):
        validate([(0, 1), (1, 2)], 2, 2)


def test_box_tightness_violation():
    with pytest.raises(BoxNotTight):
        validate([(1, 2), (1, 3)], 2, 3)
    with pytest.raises(BoxNotTight):
        validate([(0, 2), (0, 2)], 2, 3)


def test_malformed_intervals():
    with pytest.raises(PolyominoError):
        validate([(0, 0), (0, 2)], 2, 2)
    with pytest.raises(PolyominoError):
        validate([(0, 2)], 2, 2)
    with pytest.raises(PolyominoError):
        validate([(0, 3), (0, 3)], 2, 2)


def test_big_staircase_validates():
    # 10 x 8 staircase with the boundary start three columns in
    columns = [(5, 7), (4, 8), (2, 8), (0, 6), (0, 5), (0, 5),
               (1, 5), (2, 4), (2, 4), (3, 4)]
    p = validate(columns, 10, 8)
    assert (p.width, p.height) == (10, 8)
    assert p.start_column == 3
    walk = boundary_walk(p)
    assert len(walk) == 2 * 18 + 1
    assert walk[0] == Point(3, 0) and walk[1] == Point(3, 1)
    f = flags(p)
    assert not f.directed and not f.parallelogram


def test_unit_square_boundary():
    p = ConvexPolyomino.rectangle(1, 1)
    assert boundary_walk(p) == (Point(0, 0), Point(0, 1), Point(1, 1),
                                Point(1, 0), Point(0, 0))


@pytest.mark.parametrize("w", [1, 2, 3, 5])
def test_bar_boundary(w):
    p = ConvexPolyomino.rectangle(w, 1)
    walk = boundary_walk(p)
    assert len(walk) - 1 == 2 * (w + 1)
    assert walk[0] == Point(0, 0)


def test_boundary_round_trip_exhaustive():
    for s in range(2, 9):
        for w in range(1, s):
            for p in oracle.enumerate_convex(w, s - w).objects:
                assert from_boundary(boundary_walk(p)) == p


def test_from_boundary_accepts_rotation_and_rejects_garbage():
    p = validate([(0, 2), (0, 1)], 2, 2)
    walk = list(boundary_walk(p))[:-1]
    rotated = walk[3:] + walk[:3]
    assert from_boundary(rotated + rotated[:1]) == p
    with pytest.raises(PolyominoError):
        from_boundary([(0, 0), (1, 0), (0, 0)])
    with pytest.raises(PolyominoError):
        from_boundary([(0, 0), (2, 0), (2, 1), (0, 1), (0, 0)])


def test_flag_counts_match_formulas():
    for s in range(2, 10):
        for w in range(1, s):
            h = s - w
            polys = oracle.enumerate_convex(w, h).objects
            directed = sum(1 for p in polys if flags(p).directed)
            anti = sum(1 for p in polys if flags(p).antidirected)
            para = sum(1 for p in polys if flags(p).parallelogram)
            assert directed == anti == counting.count(CountClass.DIRECTED, w, h)
            assert para == counting.count(CountClass.PARALLELOGRAM, w, h)
            for p in polys:
                f = flags(p)
                assert not f.parallelogram or (f.directed and f.antidirected)


def test_directed_share_at_2x2():
    polys = oracle.enumerate_convex(2, 2).objects
    assert len(polys) == 5
    assert sum(1 for p in polys if flags(p).directed) == 4
    assert sum(1 for p in polys if flags(p).parallelogram) == 3


def test_render_ascii():
    assert render_ascii(ConvexPolyomino.rectangle(1, 1)) == "#"
    L = validate([(0, 2), (0, 1)], 2, 2)
    assert render_ascii(L) == "#.\n##"


def test_render_svg_deterministic():
    p = validate([(0, 2), (0, 1)], 2, 2)
    one, two = render_svg(p), render_svg(p)
    assert one == two
    assert one.count("<rect") == 1 + p.cell_count()
    assert one.startswith("<svg ") and one.endswith("</svg>\n")


def test_json_round_trip():
    p = validate([(1, 3), (0, 3), (0, 2)], 3, 3)
    d = p.to_json_dict()
    assert d == {"width": 3, "height": 3, "columns": [[1, 3], [0, 3], [0, 2]]}
    assert ConvexPolyomino.from_json_dict(d) == p


def test_transpose_involution():
    for p in oracle.enumerate_convex(3, 4).objects:
        q = p.transpose()
        assert (q.width, q.height) == (4, 3)
        assert q.transpose() == p
