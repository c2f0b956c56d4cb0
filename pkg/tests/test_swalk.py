"""S-walk coding: decode/encode round trips, classification, and the count
identities that pin down the tracing rules."""
import pytest

from polyogen import counting, oracle
from polyogen.counting import CountClass
from polyogen.lattice import Point
from polyogen.polyomino import ConvexPolyomino, boundary_walk, validate
from polyogen.swalk import (
    ClosedWalk,
    MalformedCode,
    NotAnSWalk,
    SelfIntersecting,
    SideOrder,
    SWalkCode,
    boundary_code,
    classify,
    decode,
    encode,
    self_intersects,
    to_polyomino,
)


def test_unit_square_code_decodes_to_unit_square():
    walk = decode(SWalkCode(1, 1, 0, ""))
    assert walk.vertices == (Point(0, 0), Point(0, 1), Point(1, 1),
                             Point(1, 0), Point(0, 0))
    assert not self_intersects(walk)
    assert encode(walk) == SWalkCode(1, 1, 0, "")


def test_code_invariants_enforced():
    with pytest.raises(MalformedCode):
        SWalkCode(2, 2, 0, "HHV")  # a=0 needs length 4
    with pytest.raises(MalformedCode):
        SWalkCode(2, 2, 1, "HHVV")  # a=1 needs length 3
    with pytest.raises(MalformedCode):
        SWalkCode(2, 2, 1, "HVV")  # wrong V count
    with pytest.raises(MalformedCode):
        SWalkCode(2, 2, 2, "HHV")  # offset out of range
    with pytest.raises(MalformedCode):
        SWalkCode(2, 2, 1, "HHX")


def test_2x2_code_space():
    codes = list(oracle.swalk_codes(2, 2))
    assert len(codes) == 9
    walks = [decode(c) for c in codes]
    assert len({w.vertices for w in walks}) == 9
    simple = [w for w in walks if not self_intersects(w)]
    assert len(simple) == 5
    assert all(classify(w) is SideOrder.SWNE for w in simple)


def test_offset_one_walk_with_early_top_contact():
    # V before any H forces the top contact step to run west and the left
    # contact step to run south
    walk = decode(SWalkCode(2, 2, 1, "VHH"))
    assert walk.vertices == (Point(1, 0), Point(1, 1), Point(1, 2), Point(0, 2),
                             Point(0, 1), Point(1, 1), Point(2, 1), Point(2, 0),
                             Point(1, 0))
    assert self_intersects(walk)
    assert classify(walk) is SideOrder.SNWE


def test_round_trip_all_codes():
    for s in range(2, 8):
        for w in range(1, s):
            for code in oracle.swalk_codes(w, s - w):
                walk = decode(code)
                assert len(walk.vertices) == 2 * s + 1
                assert encode(walk) == code


def test_decoded_step_budget():
    for code in oracle.swalk_codes(3, 2):
        verts = decode(code).vertices
        steps = [(b.x - a.x, b.y - a.y) for a, b in zip(verts, verts[1:])]
        assert steps.count((1, 0)) == steps.count((-1, 0)) == 3
        assert steps.count((0, 1)) == steps.count((0, -1)) == 2


def test_boundary_codes_round_trip_through_polyominoes():
    for s in range(2, 8):
        for w in range(1, s):
            for p in oracle.enumerate_convex(w, s - w).objects:
                code = boundary_code(p)
                walk = decode(code)
                assert walk.vertices == boundary_walk(p)
                assert to_polyomino(walk) == p


def test_simple_walk_counts_match_formulas():
    for s in range(2, 9):
        for w in range(1, s):
            h = s - w
            tallies = oracle.enumerate_swalks(w, h).tallies
            assert tallies["total"] == counting.count(CountClass.SWALK, w, h)
            assert tallies["simple"] == counting.count(CountClass.CONVEX, w, h)


def test_forced_intersection_orders():
    for w, h in [(2, 2), (3, 2), (3, 3), (2, 4)]:
        for code in oracle.swalk_codes(w, h):
            walk = decode(code)
            if classify(walk) in (SideOrder.SNWE, SideOrder.SWEN):
                assert self_intersects(walk)


def test_4x4_self_intersection_split():
    tallies = oracle.enumerate_swalks(4, 4).tallies
    assert tallies["total"] == 2310
    assert tallies["simple"] == 1110
    assert tallies["self_intersecting"] == 1200
    assert tallies["rising_intersecting"] == tallies["falling_intersecting"] == 600


def test_to_polyomino_rejects_self_intersecting():
    walk = decode(SWalkCode(2, 2, 1, "VHH"))
    with pytest.raises(SelfIntersecting):
        to_polyomino(walk)


def test_encode_rejects_non_walks():
    with pytest.raises(NotAnSWalk):
        encode(ClosedWalk(((0, 0), (0, 1), (1, 1), (1, 0))))  # not closed
    with pytest.raises(NotAnSWalk):
        encode(ClosedWalk(((0, 0), (0, 2), (0, 0))))  # non-unit steps
    with pytest.raises(NotAnSWalk):
        # counter-clockwise unit square: the S-side edge runs east
        encode(ClosedWalk(((0, 0), (1, 0), (1, 1), (0, 1), (0, 0))))
    with pytest.raises(NotAnSWalk):
        # shifted box: never touches x = 0
        encode(ClosedWalk(((1, 0), (1, 1), (2, 1), (2, 0), (1, 0))))


def test_code_text_round_trip():
    code = SWalkCode(4, 4, 2, "VHHVHVVHHVH")
    assert code.to_text() == "w=4 h=4 a=2 VHHVHVVHHVH"
    assert SWalkCode.from_text(code.to_text()) == code
    empty = SWalkCode(1, 1, 0, "")
    assert SWalkCode.from_text(empty.to_text()) == empty
    with pytest.raises(MalformedCode):
        SWalkCode.from_text("w=4 a=2 VH")


def test_walk_box_dimensions():
    p = validate([(0, 3), (0, 2), (1, 2)], 3, 3)
    walk = ClosedWalk(boundary_walk(p))
    assert walk.w == 3 and walk.h == 3
    assert walk.start == Point(0, 0)
    assert boundary_code(ConvexPolyomino.rectangle(5, 1)).a == 0
