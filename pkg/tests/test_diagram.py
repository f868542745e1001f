"""Combinatorial map construction, face tracing, and bigon sweeps."""

from fractions import Fraction as F

import pytest

from tangle3.diagram import (CROSSING, JUNCTION, PUNCTURE, Diagram, Wire,
                             build_diagram, twin)
from tangle3.geom import DegenerateGeometry
from tangle3.reduce import reduce_all, tauten


def P(x, y):
    return (F(x), F(y))


def _square_with_diagonal():
    pts = {"A": P(0, 0), "B": P(4, 0), "C": P(4, 4), "D": P(0, 4)}
    junctions = {p: (JUNCTION, name) for name, p in pts.items()}
    wires = [
        Wire(("side", "ab"), [pts["A"], pts["B"]]),
        Wire(("side", "bc"), [pts["B"], pts["C"]]),
        Wire(("side", "cd"), [pts["C"], pts["D"]]),
        Wire(("side", "da"), [pts["D"], pts["A"]]),
        Wire(("diag", 0), [pts["A"], pts["C"]]),
    ]
    ends = {w.key: (w.points[0], w.points[-1]) for w in wires}
    ends = {("side", "ab"): ("A", "B"), ("side", "bc"): ("B", "C"),
            ("side", "cd"): ("C", "D"), ("side", "da"): ("D", "A"),
            ("diag", 0): ("A", "C")}
    return build_diagram(wires, junctions, ends)


def test_faces_have_interior_on_the_left():
    dg = _square_with_diagonal()
    assert len(dg.faces()) == 3
    dab = next(d for d in dg.dart_tail
               if dg.fam(d) == ("side", "ab")
               and dg.vname[dg.dart_tail[d]] == "A")
    # walking A->B with interior on the left must continue along B->C,
    # tracing the lower-right triangle counterclockwise
    nxt = dg.face_next(dab)
    assert dg.fam(nxt) == ("side", "bc")
    assert dg.vname[dg.dart_tail[nxt]] == "B"
    face = dg.faces()[dg.face_of(dab)]
    assert len(face) == 3


def test_plus_sign_crossing():
    junctions = {P(-2, 0): (JUNCTION, "L"), P(2, 0): (JUNCTION, "R"),
                 P(0, -2): (JUNCTION, "B"), P(0, 2): (JUNCTION, "T")}
    wires = [Wire(("h", 0), [P(-2, 0), P(2, 0)]),
             Wire(("v", 0), [P(0, -2), P(0, 2)])]
    ends = {("h", 0): ("L", "R"), ("v", 0): ("B", "T")}
    dg = build_diagram(wires, junctions, ends)
    crossings = [v for v, k in dg.vkind.items() if k == CROSSING]
    assert len(crossings) == 1
    x = crossings[0]
    fams = [dg.fam(d)[0] for d in dg.rot[x]]
    assert fams == ["h", "v", "h", "v"] or fams == ["v", "h", "v", "h"]
    assert len(dg.faces()) == 1


def test_joint_on_wire_counts_as_crossing():
    junctions = {P(-3, 0): (JUNCTION, "L"), P(3, 0): (JUNCTION, "R"),
                 P(0, 3): (JUNCTION, "T"), P(0, -3): (JUNCTION, "B")}
    wires = [Wire(("h", 0), [P(-3, 0), P(3, 0)]),
             Wire(("v", 0), [P(0, 3), P(1, 0), P(0, -3)])]
    ends = {("h", 0): ("L", "R"), ("v", 0): ("T", "B")}
    dg = build_diagram(wires, junctions, ends)
    assert sum(1 for k in dg.vkind.values() if k == CROSSING) == 1


def test_tangential_joint_is_degenerate():
    junctions = {P(-3, 0): (JUNCTION, "L"), P(3, 0): (JUNCTION, "R"),
                 P(0, 3): (JUNCTION, "T"), P(2, 3): (JUNCTION, "U")}
    wires = [Wire(("h", 0), [P(-3, 0), P(3, 0)]),
             Wire(("v", 0), [P(0, 3), P(1, 0), P(2, 3)])]
    ends = {("h", 0): ("L", "R"), ("v", 0): ("T", "U")}
    with pytest.raises(DegenerateGeometry):
        build_diagram(wires, junctions, ends)


def _zigzag_arc_diagram():
    """An arc crossing a vertical wire three times, twice removably."""
    junctions = {P(0, -4): (JUNCTION, "W1"), P(0, 6): (JUNCTION, "W2"),
                 P(-4, 0): (PUNCTURE, ("p", 1)), P(4, 0): (PUNCTURE, ("p", 2))}
    wires = [
        Wire(("window", 1), [P(0, -4), P(0, 6)]),
        Wire(("arc", 1), [P(-4, 0), P(1, 1), P(-1, 2), P(1, 3), P(4, 0)]),
    ]
    ends = {("window", 1): ("W1", "W2"), ("arc", 1): (("p", 1), ("p", 2))}
    return build_diagram(wires, junctions, ends)


def test_bigon_sweep_reduces_three_crossings_to_one():
    dg = _zigzag_arc_diagram()
    assert dg.crossing_count("arc", "window") == 3
    n = reduce_all(dg, {"arc"}, {"window"}, validate=True)
    assert n == 1
    assert dg.crossing_count("arc", "window") == 1
    dg.validate()


def test_end_slide_removes_crossing_at_shared_puncture():
    junctions = {P(-4, 0): (PUNCTURE, ("p", 1)), P(4, 0): (PUNCTURE, ("p", 2))}
    wires = [
        Wire(("t", 1), [P(-4, 0), P(4, 0)]),
        Wire(("arc", 1), [P(-4, 0), P(1, -1), P(2, 1), P(4, 0)]),
    ]
    ends = {("t", 1): (("p", 1), ("p", 2)), ("arc", 1): (("p", 1), ("p", 2))}
    dg = build_diagram(wires, junctions, ends)
    assert dg.crossing_count("arc", "t") == 1
    n = reduce_all(dg, {"arc"}, {"t"}, validate=True)
    assert n == 1
    assert dg.crossing_count("arc", "t") == 0
    dg.validate()


def _loop_around_crossing():
    """A closed curve encircling the crossing of two wires."""
    junctions = {P(0, -4): (JUNCTION, "W1"), P(0, 6): (JUNCTION, "W2"),
                 P(-5, 1): (JUNCTION, "T1"), P(5, 1): (JUNCTION, "T2")}
    wires = [
        Wire(("window", 1), [P(0, -4), P(0, 6)]),
        Wire(("t", 1), [P(-5, 1), P(5, 1)]),
        Wire(("gamma", 1), [P(2, F(5, 2)), P(0, F(9, 2)), P(-2, F(5, 2)),
                            P(0, F(1, 2)), P(2, F(5, 2))]),
    ]
    ends = {("window", 1): ("W1", "W2"), ("t", 1): ("T1", "T2")}
    return build_diagram(wires, junctions, ends)


def test_sweep_carries_curve_past_a_crossing():
    dg = _loop_around_crossing()
    assert dg.crossing_count("gamma", "window") == 2
    assert dg.crossing_count("gamma", "t") == 2
    reduce_all(dg, {"gamma"}, {"window"}, validate=True)
    assert dg.crossing_count("gamma", "window") == 0
    assert dg.crossing_count("gamma", "t") == 2
    dg.validate()


def test_loop_around_crossing_frees_completely():
    dg = _loop_around_crossing()
    while True:
        n = reduce_all(dg, {"gamma"}, {"window"}, validate=True)
        n += reduce_all(dg, {"gamma"}, {"t"}, validate=True)
        if n == 0:
            break
    assert dg.freed.get("gamma") == 1
    assert dg.crossing_count("gamma", "window") == 0
    assert dg.crossing_count("gamma", "t") == 0
    dg.validate()


def _window_bigon_with_pocket(enclosed):
    """An arc bigon over a vertical wire; a third puncture sits inside the
    bigon (with its wire escaping across the arc) or outside it entirely."""
    junctions = {P(0, -4): (JUNCTION, "W1"), P(0, 6): (JUNCTION, "W2"),
                 P(-4, 0): (PUNCTURE, ("p", 1)), P(-4, 2): (PUNCTURE, ("p", 2))}
    if enclosed:
        junctions[P(2, 1)] = (PUNCTURE, ("p", 3))
        junctions[P(6, 1)] = (JUNCTION, "T2")
        t_wire = Wire(("t", 1), [P(2, 1), P(6, 1)])
        t_ends = (("p", 3), "T2")
    else:
        junctions[P(1, 4)] = (PUNCTURE, ("p", 3))
        t_wire = Wire(("t", 1), [P(1, 4), P(0, 6)])
        t_ends = (("p", 3), "W2")
    wires = [
        Wire(("window", 1), [P(0, -4), P(0, 6)]),
        t_wire,
        Wire(("t", 2), [P(-4, 0), P(0, -4)]),
        Wire(("arc", 1), [P(-4, 0), P(4, -2), P(4, 4), P(-4, 2)]),
    ]
    ends = {("window", 1): ("W1", "W2"), ("t", 1): t_ends,
            ("t", 2): (("p", 1), "W1"),
            ("arc", 1): (("p", 1), ("p", 2))}
    return build_diagram(wires, junctions, ends)


def test_bigon_enclosing_a_puncture_is_not_swept():
    dg = _window_bigon_with_pocket(enclosed=True)
    assert dg.crossing_count("arc", "window") == 2
    n = reduce_all(dg, {"arc"}, {"window"}, validate=True)
    assert n == 0
    assert dg.crossing_count("arc", "window") == 2
    dg.validate()


def test_empty_bigon_of_same_shape_is_swept():
    dg = _window_bigon_with_pocket(enclosed=False)
    assert dg.crossing_count("arc", "window") == 2
    reduce_all(dg, {"arc"}, {"window"}, validate=True)
    assert dg.crossing_count("arc", "window") == 0
    dg.validate()


def test_split_and_splice_roundtrip():
    dg = _zigzag_arc_diagram()
    before = len(dg.efam)
    d = next(d for d in dg.dart_tail if dg.fam(d) == ("arc", 1))
    w = dg.split_edge(d, kind=JUNCTION)
    assert len(dg.efam) == before + 1
    dg.splice_away(w)
    assert len(dg.efam) == before
    dg.validate()


def test_tauten_guards_against_curves():
    dg = _loop_around_crossing()
    with pytest.raises(AssertionError):
        tauten(dg)
