"""Exact planar primitives used while assembling crossing diagrams.

Points are pairs of fractions.Fraction.  Everything here is exact; any
configuration the diagram builder cannot classify cleanly (overlapping
segments, crossings at shared sample points, triple points) is reported via
DegenerateGeometry so the caller can retry with a perturbed sampling grid.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Pt = Tuple[Fraction, Fraction]


class DegenerateGeometry(Exception):
    """A segment configuration the builder refuses to guess about."""


def pt(x, y) -> Pt:
    return (Fraction(x), Fraction(y))


def sub(a: Pt, b: Pt) -> Pt:
    return (a[0] - b[0], a[1] - b[1])


def cross(a: Pt, b: Pt) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def orient(a: Pt, b: Pt, c: Pt) -> int:
    """Sign of the signed area of triangle abc (+1 = c left of ab)."""
    v = cross(sub(b, a), sub(c, a))
    return (v > 0) - (v < 0)


def on_segment(p: Pt, a: Pt, b: Pt) -> bool:
    """True if p lies on the closed segment ab (collinearity assumed checked
    by the caller via orient)."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def seg_intersection(a1: Pt, a2: Pt, b1: Pt, b2: Pt):
    """Classify the intersection of segments a1a2 and b1b2.

    Returns None when disjoint, or ('proper', point, ta, tb) for a single
    transversal crossing interior to both segments, where ta, tb are the
    exact parameters along each segment.  Any touching, collinear overlap or
    endpoint incidence raises DegenerateGeometry; the diagram builder treats
    designed junctions separately before calling this.
    """
    d1 = sub(a2, a1)
    d2 = sub(b2, b1)
    denom = cross(d1, d2)
    if denom == 0:
        # Parallel.  Overlap is degenerate; clean disjointness is fine.
        if orient(a1, a2, b1) == 0 and (
                on_segment(b1, a1, a2) or on_segment(b2, a1, a2)
                or on_segment(a1, b1, b2) or on_segment(a2, b1, b2)):
            raise DegenerateGeometry("collinear overlap")
        return None
    w = sub(b1, a1)
    ta = cross(w, d2) / denom
    tb = cross(w, d1) / denom
    if ta < 0 or ta > 1 or tb < 0 or tb > 1:
        return None
    if ta == 0 or ta == 1 or tb == 0 or tb == 1:
        raise DegenerateGeometry("segment endpoint touches another segment")
    point = (a1[0] + ta * d1[0], a1[1] + ta * d1[1])
    return ("proper", point, ta, tb)


def _half(v: Pt) -> int:
    """0 for directions in [0, pi), 1 for [pi, 2*pi), measured ccw from +x."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero direction")
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def ccw_sorted(vectors: Sequence[Tuple[Pt, object]]) -> List[object]:
    """Sort (direction, tag) pairs counterclockwise starting at +x.

    Within one half turn the cross product is a transitive comparator, so
    (half, cross-based order) is exact.  Two equal directions at a vertex
    mean the layout is ambiguous; that is degenerate.
    """
    def cmp(a, b):
        va, vb = a[0], b[0]
        ha, hb = _half(va), _half(vb)
        if ha != hb:
            return -1 if ha < hb else 1
        c = cross(va, vb)
        if c == 0:
            raise DegenerateGeometry("two edges leave a vertex in the same direction")
        return -1 if c > 0 else 1

    ordered = sorted(vectors, key=functools.cmp_to_key(cmp))
    return [tag for _, tag in ordered]


class SegmentIndex:
    """Spatial hash over segments for intersection candidate pruning."""

    def __init__(self, cell: Fraction = Fraction(2)) -> None:
        self.cell = cell
        self.buckets: Dict[Tuple[int, int], List[int]] = {}
        self.segments: List[Tuple[Pt, Pt, object]] = []

    def _cells(self, a: Pt, b: Pt) -> Iterable[Tuple[int, int]]:
        c = self.cell
        x0 = int(min(a[0], b[0]) / c)
        x1 = int(max(a[0], b[0]) / c)
        y0 = int(min(a[1], b[1]) / c)
        y1 = int(max(a[1], b[1]) / c)
        for gx in range(x0 - 1, x1 + 2):
            for gy in range(y0 - 1, y1 + 2):
                yield (gx, gy)

    def add(self, a: Pt, b: Pt, tag: object) -> int:
        idx = len(self.segments)
        self.segments.append((a, b, tag))
        for cell in self._cells(a, b):
            self.buckets.setdefault(cell, []).append(idx)
        return idx

    def candidate_pairs(self) -> Iterable[Tuple[int, int]]:
        seen = set()
        for members in self.buckets.values():
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    a, b = members[i], members[j]
                    if a > b:
                        a, b = b, a
                    if (a, b) not in seen:
                        seen.add((a, b))
                        yield (a, b)
