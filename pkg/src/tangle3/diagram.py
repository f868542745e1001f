"""Planar diagrams of arcs and curves over the fixed six-punctured sphere.

A Diagram is a connected combinatorial map: vertices with counterclockwise
rotation lists of outgoing darts, edges as dart pairs (2e, 2e+1).  The
scaffolding ("frame") consists of named wires: the three disk boundaries
(window = bottom side, west/east sides, top), the two internal wires of each
disk (`t` joining the disk's punctures, `c` joining the second puncture to
the top midpoint), and the two seams joining neighboring disk boundaries
across the outer region.  Arcs and closed curves cross the frame
transversally; arcs never cross arcs, and all geometry is discarded once
crossings and rotations are known.

Faces are traced with their interior on the left of each dart, so the face
next-dart function is: rotation predecessor of the twin at the dart's head.
(The successor would trace interiors on the right; a 4-valent vertex makes
the difference visible, a triangle does not.)
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Set, Tuple

from .geom import (DegenerateGeometry, Pt, SegmentIndex, ccw_sorted, orient,
                   seg_intersection, sub)

PUNCTURE = "puncture"
JUNCTION = "junction"
CROSSING = "crossing"

FRAME_KINDS = frozenset({"window", "side_w", "side_e", "top", "t", "c", "A", "ring"})
BOUNDARY_KINDS = frozenset({"window", "side_w", "side_e", "top"})


def twin(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


class Diagram:
    def __init__(self) -> None:
        self.vkind: Dict[int, str] = {}
        self.vname: Dict[int, object] = {}
        self.rot: Dict[int, List[int]] = {}
        self.dart_tail: Dict[int, int] = {}
        self.efam: Dict[int, Tuple] = {}
        self._nv = 0
        self._ne = 0
        self._faces: Optional[List[Tuple[int, ...]]] = None
        self._face_of: Optional[Dict[int, int]] = None
        self.wire_start: Dict[Tuple, object] = {}
        self.wire_end: Dict[Tuple, object] = {}
        # closed curves that were reduced to zero crossings and removed,
        # counted by family kind
        self.freed: Dict[str, int] = {}

    # ----- low level -------------------------------------------------

    def new_vertex(self, kind: str, name: object = None) -> int:
        v = self._nv
        self._nv += 1
        self.vkind[v] = kind
        self.vname[v] = name
        self.rot[v] = []
        return v

    def new_edge(self, fam: Tuple) -> Tuple[int, int]:
        e = self._ne
        self._ne += 1
        self.efam[e] = fam
        return 2 * e, 2 * e + 1

    def dirty(self) -> None:
        self._faces = None
        self._face_of = None

    def head(self, d: int) -> int:
        return self.dart_tail[twin(d)]

    def fam(self, d: int) -> Tuple:
        return self.efam[edge_of(d)]

    def attach(self, d: int, v: int, pos: Optional[int] = None) -> None:
        """Attach dart d to vertex v at rotation position pos (append if None)."""
        self.dart_tail[d] = v
        if pos is None:
            self.rot[v].append(d)
        else:
            self.rot[v].insert(pos, d)

    def detach(self, d: int) -> None:
        v = self.dart_tail.pop(d)
        self.rot[v].remove(d)

    def delete_edge(self, e: int) -> None:
        for d in (2 * e, 2 * e + 1):
            if d in self.dart_tail:
                self.detach(d)
        del self.efam[e]
        self.dirty()

    def delete_vertex(self, v: int) -> None:
        assert not self.rot[v], "vertex still has darts"
        del self.rot[v], self.vkind[v], self.vname[v]

    def connect(self, u: int, v: int, fam: Tuple,
                upos: Optional[int] = None, vpos: Optional[int] = None) -> Tuple[int, int]:
        du, dv = self.new_edge(fam)
        self.attach(du, u, upos)
        self.attach(dv, v, vpos)
        self.dirty()
        return du, dv

    def endpoint_slot(self, d: int) -> Tuple[int, int]:
        v = self.dart_tail[d]
        return v, self.rot[v].index(d)

    def splice_away(self, v: int) -> Dict[int, int]:
        """Remove a degree-2 vertex, merging its two same-family edges.
        Returns the dart renames at the merged edge's endpoints."""
        da, db = self.rot[v]
        fa, fb = self.fam(da), self.fam(db)
        assert fa == fb, (fa, fb)
        x, xpos = self.endpoint_slot(twin(da))
        y, ypos = self.endpoint_slot(twin(db))
        dn, dm = self.new_edge(fa)
        renames = {twin(da): dn, twin(db): dm}
        for d in (da, db, twin(da), twin(db)):
            self.detach(d)
        del self.efam[edge_of(da)], self.efam[edge_of(db)]
        self.attach(dn, x, xpos)
        self.attach(dm, y, ypos)
        self.delete_vertex(v)
        self.dirty()
        return renames

    def split_edge(self, d: int, kind: str = CROSSING, name: object = None) -> int:
        """Insert a new vertex in the middle of dart d's edge.  The piece on
        d's tail side keeps d; a fresh edge takes the other side.  Returns
        the new vertex."""
        fam = self.fam(d)
        dt = twin(d)
        y, ypos = self.endpoint_slot(dt)
        w = self.new_vertex(kind, name)
        self.detach(dt)
        self.attach(dt, w)
        db, dy = self.new_edge(fam)
        self.attach(db, w)
        self.attach(dy, y, ypos)
        self.dirty()
        return w

    # ----- tracing ---------------------------------------------------

    def face_next(self, d: int) -> int:
        v = self.head(d)
        r = self.rot[v]
        i = r.index(twin(d))
        return r[(i - 1) % len(r)]

    def faces(self) -> List[Tuple[int, ...]]:
        if self._faces is None:
            seen: Set[int] = set()
            out: List[Tuple[int, ...]] = []
            fo: Dict[int, int] = {}
            for d0 in sorted(self.dart_tail):
                if d0 in seen:
                    continue
                cyc = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    cyc.append(d)
                    fo[d] = len(out)
                    d = self.face_next(d)
                assert d == d0, "face walk did not close"
                out.append(tuple(cyc))
            self._faces = out
            self._face_of = fo
        return self._faces

    def face_of(self, d: int) -> int:
        self.faces()
        return self._face_of[d]

    def validate(self) -> None:
        for v, r in self.rot.items():
            for d in r:
                assert self.dart_tail[d] == v
            if self.vkind[v] == CROSSING:
                assert len(r) == 4, f"crossing {v} has degree {len(r)}"
        for d in self.dart_tail:
            assert twin(d) in self.dart_tail, d
        active = [v for v in self.rot if self.rot[v]]
        if active:
            seen: Set[int] = set()
            stack = [active[0]]
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                for d in self.rot[v]:
                    stack.append(self.head(d))
            assert set(active) <= seen, "diagram is disconnected"
        nv = len(active)
        ne = len(self.efam)
        nf = len(self.faces())
        assert nv - ne + nf == 2, f"Euler check failed: V={nv} E={ne} F={nf}"

    def copy(self) -> "Diagram":
        d = Diagram.__new__(Diagram)
        d.vkind = dict(self.vkind)
        d.vname = dict(self.vname)
        d.rot = {v: list(r) for v, r in self.rot.items()}
        d.dart_tail = dict(self.dart_tail)
        d.efam = dict(self.efam)
        d._nv = self._nv
        d._ne = self._ne
        d._faces = None
        d._face_of = None
        d.wire_start = dict(self.wire_start)
        d.wire_end = dict(self.wire_end)
        d.freed = dict(self.freed)
        return d

    # ----- walks -----------------------------------------------------

    def vertex_named(self, name: object) -> int:
        for v, n in self.vname.items():
            if n == name:
                return v
        raise KeyError(name)

    def continue_straight(self, d: int) -> int:
        """Across a 4-valent crossing, the opposite dart."""
        v = self.head(d)
        r = self.rot[v]
        assert len(r) == 4
        return r[(r.index(twin(d)) + 2) % 4]

    def walk_wire(self, key: Tuple) -> List[int]:
        """Darts of a frame wire from its start junction to its end.  The
        wire may pass through interior junctions (the top side runs through
        the anchor where `c` and the seams attach)."""
        v0 = self.vertex_named(self.wire_start[key])
        d = None
        for cand in self.rot[v0]:
            if self.fam(cand) == key:
                d = cand
                break
        assert d is not None, key
        out = [d]
        while True:
            v = self.head(d)
            if self.vkind[v] == CROSSING:
                d = self.continue_straight(d)
            elif self.vname[v] == self.wire_end[key]:
                return out
            else:
                nxt = [x for x in self.rot[v] if self.fam(x) == key and x != twin(d)]
                assert len(nxt) == 1, (key, v, nxt)
                d = nxt[0]
            out.append(d)

    def arc_endpoints(self, label: int) -> List[int]:
        ends = []
        for v in self.rot:
            if self.vkind[v] == PUNCTURE:
                for d in self.rot[v]:
                    if self.fam(d) == ("arc", label):
                        ends.append(v)
        return sorted(ends, key=lambda v: self.vname[v][1])

    def walk_strand(self, d: int) -> List[int]:
        """Follow a strand dart across crossings until a non-crossing vertex,
        or until it closes up."""
        out = [d]
        while True:
            v = self.head(d)
            if self.vkind[v] != CROSSING:
                return out
            d = self.continue_straight(d)
            if d == out[0]:
                return out
            out.append(d)

    def walk_arc(self, label: int) -> List[int]:
        u = self.arc_endpoints(label)[0]
        for d in self.rot[u]:
            if self.fam(d) == ("arc", label):
                return self.walk_strand(d)
        raise KeyError(label)

    def loop_darts(self, fam: Tuple) -> List[int]:
        start = None
        for d in sorted(self.dart_tail):
            if self.fam(d) == fam:
                start = d
                break
        assert start is not None, fam
        out = [start]
        d = start
        while True:
            assert self.vkind[self.head(d)] == CROSSING, "closed curve hit a non-crossing"
            d = self.continue_straight(d)
            if d == start:
                return out
            out.append(d)

    def crossing_count(self, kind_a: str, kind_b: str) -> int:
        n = 0
        for v, r in self.rot.items():
            if self.vkind[v] != CROSSING:
                continue
            kinds = {self.fam(d)[0] for d in r}
            if kind_a in kinds and kind_b in kinds:
                n += 1
        return n

    def window_crossings(self, i: int) -> List[int]:
        """Crossing vertices along window i, west to east."""
        out = []
        for d in self.walk_wire(("window", i)):
            v = self.head(d)
            if self.vkind[v] == CROSSING:
                out.append(v)
        return out

    def strand_fam_at(self, v: int) -> Tuple:
        """At a crossing of a frame wire with a strand, the strand family."""
        fams = [self.fam(d) for d in self.rot[v] if self.fam(d)[0] not in FRAME_KINDS]
        assert len(fams) == 2 and fams[0] == fams[1], fams
        return fams[0]

    def window_stations(self, i: int) -> List[Tuple[int, int]]:
        """(crossing vertex, forward window dart) pairs, west to east."""
        walk = self.walk_wire(("window", i))
        return [(self.dart_tail[d], d) for d in walk[1:]
                if self.vkind[self.dart_tail[d]] == CROSSING]

    def disk_side_dart(self, v: int, fwd: int) -> int:
        """At a window crossing with forward dart fwd, the strand dart into
        the disk.  Windows run west to east with the disk to the north, which
        is the left of the forward dart, so the rotation successor of fwd."""
        r = self.rot[v]
        return r[(r.index(fwd) + 1) % 4]


# ---------------------------------------------------------------------------
# geometric construction


class Wire:
    def __init__(self, key: Tuple, points: Sequence[Pt]):
        self.key = key
        self.points = list(points)
        self.closed = len(self.points) >= 3 and self.points[0] == self.points[-1]
        assert len(self.points) >= 2, key
        for a, b in zip(self.points, self.points[1:]):
            assert a != b, (key, "zero-length piece")


def build_diagram(wires: Sequence[Wire], junctions: Dict[Pt, Tuple[str, object]],
                  wire_ends: Dict[Tuple, Tuple[object, object]]) -> Diagram:
    """Assemble a Diagram from exact polylines.

    `junctions` maps designed meeting points to (vertex kind, name); every
    wire endpoint must be one, and wires may pass through junctions at
    interior polyline joints.  Transversal interior crossings are computed
    exactly; a polyline joint lying on another wire counts as a crossing when
    the bend passes through it.  Anything else raises DegenerateGeometry and
    the caller may retry with nudged sample points.
    """
    dg = Diagram()
    vert_at: Dict[Pt, int] = {}
    for p, (kind, name) in junctions.items():
        vert_at[p] = dg.new_vertex(kind, name)

    index = SegmentIndex()
    for wi, w in enumerate(wires):
        for si in range(len(w.points) - 1):
            index.add(w.points[si], w.points[si + 1], (wi, si))

    events: Dict[int, List[Tuple[int, object, Pt]]] = {wi: [] for wi in range(len(wires))}
    cross_pts: Dict[Pt, List[Tuple[int, int, object]]] = {}

    def note(pt_: Pt, wi: int, seg: int, t) -> None:
        cross_pts.setdefault(pt_, []).append((wi, seg, t))

    segs = index.segments
    for ia, ib in index.candidate_pairs():
        a1, a2, (wa, sa) = segs[ia]
        b1, b2, (wb, sb) = segs[ib]
        if wa == wb:
            nseg = len(wires[wa].points) - 1
            if abs(sa - sb) <= 1 or (wires[wa].closed and {sa, sb} == {0, nseg - 1}):
                continue
            if seg_intersection(a1, a2, b1, b2) is not None:
                raise DegenerateGeometry(f"wire {wires[wa].key} crosses itself")
            continue
        try:
            r = seg_intersection(a1, a2, b1, b2)
        except DegenerateGeometry:
            touch = _classify_touch(wires, wa, sa, wb, sb, junctions)
            if touch == "junction":
                continue
            _, p, pa, pb = touch
            note(p, *pa)
            note(p, *pb)
            continue
        if r is not None:
            _, p, ta, tb = r
            note(p, wa, sa, ta)
            note(p, wb, sb, tb)

    for p, incs in cross_pts.items():
        if p in junctions:
            raise DegenerateGeometry("crossing at a junction")
        bywire: Dict[int, Set[Tuple[int, object]]] = {}
        for wi, seg, t in incs:
            bywire.setdefault(wi, set()).add((seg, t))
        tidy = {}
        for wi, sts in bywire.items():
            canon = _canon_params(sts)
            if canon is None:
                raise DegenerateGeometry("wire meets a point twice")
            tidy[wi] = canon
        if len(tidy) != 2:
            raise DegenerateGeometry(f"{len(tidy)} wires meet at one point")
        v = dg.new_vertex(CROSSING)
        vert_at[p] = v
        for wi, (seg, t) in tidy.items():
            events[wi].append((seg, t, p))

    dart_dirs: Dict[int, Pt] = {}
    for wi, w in enumerate(wires):
        pts = w.points
        stations: List[Tuple[Pt, int, object]] = [(p, seg, t) for seg, t, p in events[wi]]
        if w.closed:
            stations.sort(key=lambda s: (s[1], s[2]))
            if not stations:
                raise DegenerateGeometry(f"closed wire {w.key} crosses nothing")
            if stations[0][1] == 0 and stations[0][2] == 0:
                raise DegenerateGeometry("crossing at a closed wire's seam point")
            pairs = list(zip(stations, stations[1:] + stations[:1]))
        else:
            if pts[0] not in junctions or pts[-1] not in junctions:
                raise DegenerateGeometry(f"wire {w.key} does not end at junctions")
            for ji in range(1, len(pts) - 1):
                if pts[ji] in junctions:
                    stations.append((pts[ji], ji, "joint"))
            stations.sort(key=lambda s: (s[1], 0 if s[2] == "joint" else s[2]))
            stations = ([(pts[0], 0, "start")] + stations
                        + [(pts[-1], len(pts) - 2, "end")])
            pairs = list(zip(stations, stations[1:]))
        for (pa, sega, ta), (pb, segb, tb) in pairs:
            va, vb = vert_at[pa], vert_at[pb]
            da, db = dg.new_edge(w.key)
            dg.dart_tail[da] = va
            dg.rot[va].append(da)
            dg.dart_tail[db] = vb
            dg.rot[vb].append(db)
            dart_dirs[da] = _dir_at(pts, sega, ta, forward=True)
            dart_dirs[db] = _dir_at(pts, segb, tb, forward=False)

    for v in dg.rot:
        if len(dg.rot[v]) > 1:
            dg.rot[v] = ccw_sorted([(dart_dirs[d], d) for d in dg.rot[v]])

    dg.wire_start = {key: se[0] for key, se in wire_ends.items()}
    dg.wire_end = {key: se[1] for key, se in wire_ends.items()}
    dg.dirty()
    dg.validate()
    return dg


def _canon_params(sts: Set[Tuple[int, object]]):
    """Merge (segment, t) descriptions of one point on one wire.  A station
    at a polyline joint can be reported as (k, 1) or (k+1, 0); both mean
    (k+1, 0).  Two distinct canonical parameters mean the wire truly passes
    the point twice."""
    canon = set()
    for seg, t in sts:
        if t == 1:
            canon.add((seg + 1, 0))
        else:
            canon.add((seg, t))
    if len(canon) != 1:
        return None
    return canon.pop()


def _dir_at(pts: Sequence[Pt], seg: int, t, forward: bool) -> Pt:
    """Exact direction of the wire at a station, leaving it forward or
    backward along the wire."""
    if t == "start":
        assert forward
        return sub(pts[1], pts[0])
    if t == "end":
        assert not forward
        return sub(pts[-2], pts[-1])
    if t == "joint" or t == 0:
        return sub(pts[seg + 1], pts[seg]) if forward else sub(pts[seg - 1], pts[seg])
    return sub(pts[seg + 1], pts[seg]) if forward else sub(pts[seg], pts[seg + 1])


def _classify_touch(wires: Sequence[Wire], wa: int, sa: int, wb: int, sb: int,
                    junctions: Dict[Pt, Tuple[str, object]]):
    """Decide what a touching segment pair from different wires means.

    Returns "junction" for segments meeting at a designed junction point, or
    ("joint", point, (wire, seg, t), (wire, seg, t)) when a polyline bend of
    one wire passes transversally through the other.  Everything else is
    degenerate.
    """
    A, B = wires[wa].points, wires[wb].points
    a1, a2 = A[sa], A[sa + 1]
    b1, b2 = B[sb], B[sb + 1]
    shared = {a1, a2} & {b1, b2}
    if shared:
        if all(p in junctions for p in shared):
            return "junction"
        raise DegenerateGeometry("wires meet at a point that is not a junction")
    for w_of_joint, s_of_joint, pts, (o1, o2), other_tag in (
            (wa, sa, A, (b1, b2), (wb, sb)),
            (wb, sb, B, (a1, a2), (wa, sa))):
        for end_ix in (0, 1):
            p = pts[s_of_joint + end_ix]
            if orient(o1, o2, p) != 0 or not _strictly_between(o1, o2, p):
                continue
            ji = s_of_joint + end_ix
            if ji == 0 or ji == len(pts) - 1:
                raise DegenerateGeometry("wire endpoint rests on another wire")
            prev_pt, next_pt = pts[ji - 1], pts[ji + 1]
            s1, s2 = orient(o1, o2, prev_pt), orient(o1, o2, next_pt)
            if s1 * s2 < 0:
                t_other = _param_on(o1, o2, p)
                return ("joint", p, (w_of_joint, ji, 0), (*other_tag, t_other))
            raise DegenerateGeometry("wire joint touches another wire tangentially")
    raise DegenerateGeometry("unclassified touching wires")


def _strictly_between(a: Pt, b: Pt, p: Pt) -> bool:
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
            and p != a and p != b)


def _param_on(a: Pt, b: Pt, p: Pt):
    if a[0] != b[0]:
        return (p[0] - a[0]) / (b[0] - a[0])
    return (p[1] - a[1]) / (b[1] - a[1])
