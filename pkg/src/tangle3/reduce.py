"""Crossing reduction by sweeping innermost bigons.

One pass fixes a movable strand kind (arcs, or an inserted curve family) and
a barrier wire kind, treats every other edge family as transparent, and glues
faces across transparent edges into regions.  A region qualifies for a sweep
when its glued boundary is a single cycle with exactly two corners, one run
of movable darts and one run of barrier darts between them.  Two crossing
corners give a bigon (the movable run is redrawn along the far side of the
barrier run, two crossings vanish); one crossing corner plus a corner at a
puncture where both the movable strand and the barrier wire end gives an
end slide (one crossing vanishes).

Transparent edges dangling into a region do not block it, but any crossing
of the barrier run with another movable strand puts extra movable darts on
the boundary and disqualifies the region, so sweeps are automatically
innermost and never pass a strand through a puncture.  Redrawing the movable
run along the barrier's far side crosses, at each interior vertex of the
barrier run, every edge attached on the far side exactly once; this is what
carries a strand past a junction or past the barrier's own crossings with
transparent wires.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Set, Tuple

from .diagram import CROSSING, PUNCTURE, Diagram, twin, edge_of


class _Region:
    def __init__(self, faces: Set[int], cycle: List[int], corners: List[Tuple[int, str]]):
        self.faces = faces
        self.cycle = cycle
        # corner gap positions: corner k sits between cycle[pos-1] and
        # cycle[pos]; paired with the corner vertex and its kind tag
        self.corners = corners


def _boundary_successor(dg: Diagram, d: int, transparent: Set[str]) -> int:
    e = dg.face_next(d)
    while dg.fam(e)[0] in transparent:
        e = dg.face_next(twin(e))
    return e


def _glued_faces(dg: Diagram, transparent: Set[str]) -> Dict[int, int]:
    """Union faces across transparent edges; returns face index -> region id."""
    faces = dg.faces()
    parent = list(range(len(faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in dg.dart_tail:
        if dg.fam(d)[0] in transparent:
            a, b = find(dg.face_of(d)), find(dg.face_of(twin(d)))
            if a != b:
                parent[a] = b
    return {i: find(i) for i in range(len(faces))}


def find_sweep(dg: Diagram, movable: Set[str], barrier: Set[str]) -> Optional[dict]:
    """Locate one qualifying region.  Returns a description or None."""
    transparent = {fam[0] for fam in dg.efam.values()} - movable - barrier
    region_of = _glued_faces(dg, transparent)
    # group boundary darts per region
    by_region: Dict[int, List[int]] = {}
    for d in dg.dart_tail:
        if dg.fam(d)[0] in transparent:
            continue
        by_region.setdefault(region_of[dg.face_of(d)], []).append(d)

    for rid, bdarts in sorted(by_region.items()):
        info = _qualify(dg, rid, bdarts, movable, barrier, transparent, region_of)
        if info is not None:
            return info
    return None


def _qualify(dg: Diagram, rid: int, bdarts: List[int], movable: Set[str],
             barrier: Set[str], transparent: Set[str],
             region_of: Dict[int, int]) -> Optional[dict]:
    first = min(bdarts)
    cycle = [first]
    d = first
    while True:
        d = _boundary_successor(dg, d, transparent)
        if d == first:
            break
        cycle.append(d)
        if len(cycle) > len(bdarts):
            raise AssertionError("boundary walk does not close")
    if len(cycle) != len(bdarts):
        return None  # more than one boundary cycle
    if len({edge_of(d) for d in cycle}) != len(cycle):
        return None  # an edge contributes both darts: region wraps around it

    corners = []
    n = len(cycle)
    for k in range(n):
        d_prev = cycle[k - 1]
        d_cur = cycle[k]
        mv_prev = dg.fam(d_prev)[0] in movable
        mv_cur = dg.fam(d_cur)[0] in movable
        v = dg.dart_tail[d_cur]
        if d_cur == twin(d_prev):
            corners.append((k, v, "uturn"))
        elif mv_prev != mv_cur:
            kind = dg.vkind[v]
            if kind == CROSSING:
                corners.append((k, v, "x"))
            elif kind == PUNCTURE:
                corners.append((k, v, "p"))
            else:
                raise AssertionError("strand meets a junction")
    if len(corners) != 2:
        return None
    (k1, v1, t1), (k2, v2, t2) = corners
    if "uturn" in (t1, t2) or v1 == v2:
        return None
    if t1 == "p" and t2 == "p":
        return None  # parallel strands sharing both endpoints: stable
    run_a = cycle[k1:k2]
    run_b = cycle[k2:] + cycle[:k1]
    runs = {True: None, False: None}
    for run in (run_a, run_b):
        kinds = {dg.fam(d)[0] in movable for d in run}
        if len(kinds) != 1:
            return None
        runs[kinds.pop()] = run
    if runs[True] is None or runs[False] is None:
        return None
    if len({dg.fam(d) for d in runs[True]}) != 1:
        return None  # movable run glued from two strands: not a single-strand slide
    faces = {f for f, r in region_of.items() if r == rid}
    # a puncture swallowed whole by the region blocks the sweep: dragging
    # the strand across a marked point is not an isotopy
    on_cycle = {dg.dart_tail[d] for d in cycle}
    for v, kind in dg.vkind.items():
        if (kind == PUNCTURE and v not in on_cycle and dg.rot[v]
                and dg.face_of(dg.rot[v][0]) in faces):
            return None
    return {"movable_run": runs[True], "barrier_run": runs[False],
            "faces": faces, "shape": frozenset((t1, t2))}


def _outside_darts(dg: Diagram, w: int, r_in: int, r_cont: int,
                   faces: Set[int]) -> List[int]:
    """Out-darts at a barrier-run interior vertex attached on the far side,
    ordered as the redrawn strand meets them.  The region lies on the left of
    run darts, so the far side is the rotation interval from twin(r_in)
    counterclockwise to r_cont; the redrawn strand travels against the run
    and meets them in reverse."""
    rot = dg.rot[w]
    i = rot.index(twin(r_in))
    out: List[int] = []
    k = (i + 1) % len(rot)
    while rot[k] != r_cont:
        g = rot[k]
        inside = dg.face_of(g) in faces
        inside_tw = dg.face_of(twin(g)) in faces
        assert not inside and not inside_tw, "inside dart on the far side"
        out.append(g)
        k = (k + 1) % len(rot)
    # sanity: everything between r_cont and twin(r_in) is glued into the region
    k = (rot.index(r_cont) + 1) % len(rot)
    while rot[k] != twin(r_in):
        assert dg.face_of(rot[k]) in faces, "far-side dart inside region"
        k = (k + 1) % len(rot)
    return list(reversed(out))


def sweep(dg: Diagram, info: dict) -> None:
    """Redraw the movable run of a qualifying region along the far side of
    its barrier run."""
    mrun: List[int] = info["movable_run"]
    brun: List[int] = info["barrier_run"]
    faces: Set[int] = info["faces"]
    fam = dg.fam(mrun[0])
    c_start = dg.dart_tail[mrun[0]]
    c_end = dg.head(mrun[-1])
    # the barrier run walks c_end -> c_start
    assert dg.dart_tail[brun[0]] == c_end and dg.head(brun[-1]) == c_start

    start_is_p = dg.vkind[c_start] == PUNCTURE
    end_is_p = dg.vkind[c_end] == PUNCTURE

    m_start = m_end = None
    if not start_is_p:
        cands = [g for g in dg.rot[c_start]
                 if dg.fam(g) == fam and g != mrun[0]]
        assert len(cands) == 1
        m_start = cands[0]
    if not end_is_p:
        cands = [g for g in dg.rot[c_end]
                 if dg.fam(g) == fam and g != twin(mrun[-1])]
        assert len(cands) == 1
        m_end = cands[0]

    # capture the far-side attachments while the face structure still
    # matches the region; every mutation below renumbers faces.  Stations
    # run from the c_start end because the redrawn strand travels
    # c_start -> c_end, against the barrier run.
    interior_b = [dg.head(d) for d in brun[:-1]]
    stations = [(w, brun[j], brun[j + 1]) for j, w in enumerate(interior_b)]
    stations.reverse()
    station_out = [_outside_darts(dg, w, r_in, r_cont, faces)
                   for (w, r_in, r_cont) in stations]

    # remove the movable run; its crossings with transparent wires dissolve,
    # renaming the merged edges' far darts
    renames: Dict[int, int] = {}

    def current(d: int) -> int:
        while d in renames:
            d = renames[d]
        return d

    interior_m = [dg.head(d) for d in mrun[:-1]]
    for d in mrun:
        dg.delete_edge(edge_of(d))
    for v in interior_m:
        assert len(dg.rot[v]) == 2
        renames.update(dg.splice_away(v))

    single_outside = (m_start is not None and m_end is not None
                      and edge_of(m_start) == edge_of(m_end))

    # build the new path
    prev_attach: Optional[Tuple[int, Optional[int]]] = None
    new_crossings = 0
    path_vertices: List[int] = []
    for outs in station_out:
        for g0 in outs:
            g = current(g0)
            p = dg.split_edge(g)
            new_crossings += 1
            # twin(g) moved onto p; its old role at the far end is now
            # played by the far dart of the fresh edge
            renames[twin(g)] = twin(dg.rot[p][1])
            # rot[p] so far: [toward w, away from w]
            if prev_attach is None:
                path_vertices.append(p)
            else:
                u, upos = prev_attach
                du, dv = dg.new_edge(fam)
                dg.attach(du, u, upos)
                dg.attach(dv, p)  # append: becomes the backward dart
                path_vertices.append(p)
            prev_attach = (p, 1)  # forward dart goes between toward/away

    if single_outside:
        far_edge = edge_of(m_start)
        if new_crossings == 0:
            # the whole closed strand became crossing-free: drop it
            dg.delete_edge(far_edge)
            dg.freed[fam[0]] = dg.freed.get(fam[0], 0) + 1
        else:
            # reattach both darts of the lone outside edge to the path ends;
            # the appended twin becomes the first vertex's backward dart and
            # the other lands in the forward slot of the last
            dg.detach(m_start)
            dg.detach(twin(m_start))
            dg.attach(m_start, prev_attach[0], prev_attach[1])
            dg.attach(twin(m_start), path_vertices[0])
    else:
        if start_is_p:
            start_anchor = (c_start, _puncture_slot(dg, c_start, brun[-1]))
        else:
            dg.detach(m_start)
            start_anchor = None  # m_start dart itself is reused
        if end_is_p:
            end_anchor = (c_end, _puncture_slot(dg, c_end, brun[0]))
        else:
            dg.detach(m_end)
            end_anchor = None

        if new_crossings == 0:
            _join_direct(dg, fam, start_is_p, m_start, start_anchor,
                         end_is_p, m_end, end_anchor)
        else:
            first_p = path_vertices[0]
            if start_is_p:
                du, dv = dg.new_edge(fam)
                v, pos = start_anchor
                dg.attach(du, v, pos)
                dg.attach(dv, first_p)
            else:
                dg.attach(m_start, first_p)
            u, upos = prev_attach
            if end_is_p:
                du, dv = dg.new_edge(fam)
                dg.attach(du, u, upos)
                v, pos = end_anchor
                dg.attach(dv, v, pos)
            else:
                dg.attach(m_end, u, upos)

    # dissolve the old corners
    for v, was_p in ((c_start, start_is_p), (c_end, end_is_p)):
        if not was_p:
            assert len(dg.rot[v]) == 2
            dg.splice_away(v)
    dg.dirty()


def _puncture_slot(dg: Diagram, v: int, run_dart: int) -> int:
    """Rotation slot at an end-slide puncture for the redrawn strand's dart:
    on the barrier run's right flank (the region is on its left).  When the
    run leaves v that is just clockwise of its out-dart; when it arrives,
    just counterclockwise of the reversed dart."""
    if dg.dart_tail[run_dart] == v:
        return dg.rot[v].index(run_dart)
    b = twin(run_dart)
    assert dg.dart_tail[b] == v
    return dg.rot[v].index(b) + 1


def _join_direct(dg: Diagram, fam, start_is_p, m_start, start_anchor,
                 end_is_p, m_end, end_anchor) -> None:
    """Connect the two loose sides when the redrawn run crosses nothing."""
    if start_is_p and end_is_p:
        # both ends are punctures: the strand becomes a single edge
        du, dv = dg.new_edge(fam)
        va, pa = start_anchor
        vb, pb = end_anchor
        dg.attach(du, va, pa)
        dg.attach(dv, vb, pb)
        return
    if start_is_p:
        v, pos = start_anchor
        dg.attach(m_end, v, pos)
        return
    if end_is_p:
        v, pos = end_anchor
        dg.attach(m_start, v, pos)
        return
    # merge the two outer movable edges into one (m_start and m_end are
    # already loose; a simple strand cannot end both outer edges at one
    # vertex, so the captured slots stay valid)
    x, xpos = dg.endpoint_slot(twin(m_start))
    y, ypos = dg.endpoint_slot(twin(m_end))
    assert x != y
    dn, dm = dg.new_edge(fam)
    dg.detach(twin(m_start))
    dg.detach(twin(m_end))
    del dg.efam[edge_of(m_start)], dg.efam[edge_of(m_end)]
    dg.attach(dn, x, xpos)
    dg.attach(dm, y, ypos)


def reduce_all(dg: Diagram, movable: Set[str], barrier: Set[str],
               validate: bool = False) -> int:
    """Sweep until no region qualifies; returns the number of sweeps."""
    n = 0
    while True:
        info = find_sweep(dg, movable, barrier)
        if info is None:
            return n
        sweep(dg, info)
        if validate:
            dg.validate()
        n += 1


def tauten(dg: Diagram, validate: bool = False) -> int:
    """Reduce a diagram's arcs against every frame wire kind until no bigon
    or end slide remains anywhere.  Each sweep only removes crossings (the
    qualifying runs never pass junctions), so this terminates."""
    kinds = {fam[0] for fam in dg.efam.values()}
    assert not (kinds & {"gamma", "loop"}), "tauten arcs before inserting curves"
    total = 0
    while True:
        round_n = 0
        for barrier in ({"window", "side_w", "side_e", "top"},
                        {"t"}, {"c"}, {"A"}, {"ring"}):
            round_n += reduce_all(dg, {"arc"}, set(barrier), validate=validate)
        total += round_n
        if round_n == 0:
            return total
