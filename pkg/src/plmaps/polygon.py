"""Fundamental polygons and their trace sequences.

A fundamental polygon is a CCW cycle of lattice vectors ``e_0..e_{n-1}``
with ``cross(e_i, e_{i+1}) == 1`` throughout.  Its trace sequence is given
by ``e_{i-1} + e_{i+1} == m_i * e_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .conemap import ConeFanMap, inverse_mod, make_map, power, rotation_number
from .geometry import (
    Matrix,
    Vec,
    cross,
    is_ccw_fan,
    lattice_points_in_triangle,
    strictly_inside_arc,
)


class PolygonError(ValueError):
    def __init__(self, message, index=None):
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index


class TraceSequence(tuple):
    """Integers ``m_0..m_{n-1}``; compares equal to a plain tuple."""

    def __new__(cls, values: Iterable[int] = ()):
        return super().__new__(cls, (int(v) for v in values))

    def __repr__(self):
        return f"TraceSequence({list(self)})"


@dataclass(frozen=True)
class FundamentalPolygon:
    vertices: tuple[Vec, ...]

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]

    def __iter__(self):
        return iter(self.vertices)


def validate_polygon(vertices: Sequence, pick_check: bool = True) -> FundamentalPolygon:
    verts = tuple(Vec(*v) for v in vertices)
    n = len(verts)
    if n < 3:
        raise PolygonError(f"a fundamental polygon needs at least 3 vertices, got {n}")
    seen = {}
    for i, v in enumerate(verts):
        if v == (0, 0):
            raise PolygonError("zero vertex", i)
        if v in seen:
            raise PolygonError(f"duplicate vertex {v}", i)
        seen[v] = i
    for i in range(n):
        c = cross(verts[i], verts[(i + 1) % n])
        if c != 1:
            raise PolygonError(f"cross(e_i, e_i+1) = {c}, expected 1", i)
    if not is_ccw_fan(verts):
        raise PolygonError("vertices wind more than once around the origin")
    if pick_check:
        for i in range(n):
            pts = lattice_points_in_triangle((0, 0), verts[i], verts[(i + 1) % n])
            if len(pts) != 3:
                raise PolygonError("triangle contains extra lattice points", i)
    return FundamentalPolygon(verts)


def sequence_of(p: FundamentalPolygon) -> TraceSequence:
    n = len(p)
    out = []
    for i in range(n):
        e = p[i]
        s = p[i - 1] + p[i + 1]
        if cross(e, s) != 0:
            raise PolygonError("neighbour sum is not parallel to vertex", i)
        m, rem = divmod(s.x, e.x) if e.x else divmod(s.y, e.y)
        if rem or m * e != s:
            raise PolygonError("neighbour sum is not an integer multiple of vertex", i)
        out.append(m)
    return TraceSequence(out)


def polygon_from_sequence(seq: Sequence[int]) -> FundamentalPolygon:
    """Rebuild the polygon from e_0=(1,0), e_1=(0,1) and the recurrence
    ``e_{i+1} = m_i e_i - e_{i-1}``."""
    m = list(seq)
    n = len(m)
    if n < 3:
        raise PolygonError(f"sequence too short: length {n}")
    e = [Vec(1, 0), Vec(0, 1)]
    for i in range(1, n + 1):
        e.append(m[i % n] * e[i] - e[i - 1])
    if e[n] != e[0] or e[n + 1] != e[1]:
        raise PolygonError(f"sequence {tuple(m)} does not close up")
    return validate_polygon(e[:n])


def piece_matrices(p: FundamentalPolygon) -> list[Matrix]:
    """Matrix on the cone from e_i to e_{i+1}: sends e_i, e_{i+1} to e_{i+1}, e_{i+2}."""
    n = len(p)
    out = []
    for i in range(n):
        src = Matrix.from_columns(p[i], p[i + 1])
        dst = Matrix.from_columns(p[i + 1], p[i + 2])
        out.append(dst @ src.inverse())
    return out


def map_from_polygon(p: FundamentalPolygon) -> ConeFanMap:
    return make_map(list(p.vertices), piece_matrices(p))


def _orbit_polygon(g: ConeFanMap, start, n: int) -> Optional[FundamentalPolygon]:
    pts = [Vec(*start)]
    for _ in range(n - 1):
        pts.append(g(pts[-1]))
    if g(pts[-1]) != pts[0]:
        return None
    # g must be linear between consecutive orbit points
    for i in range(n):
        lo, hi = pts[i], pts[(i + 1) % n]
        if any(strictly_inside_arc(r, lo, hi) for r in g.rays):
            return None
    try:
        return validate_polygon(pts)
    except PolygonError:
        return None


def _start_candidates(g: ConeFanMap):
    yield Vec(1, 0)
    yield from g.rays
    if g.is_linear:
        # short vectors first; a linear map of finite order has one with cross(v, gv) == 1
        for r in itertools.count(1):
            for x in range(-r, r + 1):
                for y in (-r, r):
                    yield Vec(x, y)
            for y in range(-r + 1, r):
                for x in (-r, r):
                    yield Vec(x, y)
            if r > 64:
                return


def polygon_of_map(f: ConeFanMap, max_n: int = 120) -> FundamentalPolygon:
    """Fundamental polygon of ``f**j`` where ``j*k == 1 (mod n)``.

    The orbit of (1,0) is used when it forms a fundamental polygon;
    otherwise the orbit of the first fan ray that does.
    """
    rot = rotation_number(f, max_n)
    n, k = rot.denominator, rot.numerator
    if n < 3:
        raise PolygonError(f"period {n} maps have no fundamental polygon")
    g = power(f, inverse_mod(k, n))
    for start in _start_candidates(g):
        poly = _orbit_polygon(g, start, n)
        if poly is not None:
            return poly
    raise PolygonError("no orbit of the map forms a fundamental polygon")


def vertex_insert(p: FundamentalPolygon, i: int) -> FundamentalPolygon:
    n = len(p)
    if not 0 <= i < n:
        raise IndexError(f"insertion index {i} out of range for {n} vertices")
    verts = list(p.vertices)
    verts.insert(i + 1, p[i] + p[i + 1])
    return validate_polygon(verts, pick_check=False)


def is_removable(p: FundamentalPolygon, i: int) -> bool:
    return len(p) > 3 and p[i] == p[i - 1] + p[i + 1]


def vertex_remove(p: FundamentalPolygon, i: int) -> FundamentalPolygon:
    n = len(p)
    if not 0 <= i < n:
        raise IndexError(f"removal index {i} out of range for {n} vertices")
    if not is_removable(p, i):
        raise PolygonError("not removable", i)
    verts = list(p.vertices)
    del verts[i]
    return validate_polygon(verts, pick_check=False)


def canonical_sequence(seq: Sequence[int]) -> TraceSequence:
    """Lexicographically least cyclic rotation."""
    s = tuple(seq)
    if not s:
        return TraceSequence()
    return TraceSequence(min(s[i:] + s[:i] for i in range(len(s))))


def reduce_polygon(p: FundamentalPolygon) -> FundamentalPolygon:
    """Remove the first removable vertex (ascending index) until none is left."""
    while True:
        for i in range(len(p)):
            if is_removable(p, i):
                p = vertex_remove(p, i)
                break
        else:
            return p


def base_kind(p: FundamentalPolygon) -> Optional[str]:
    """Name the reduced polygon: ``"alpha"``, ``"beta"``, ``"phi(m)"`` or None."""
    seq = canonical_sequence(sequence_of(p))
    if seq == (-1, -1, -1):
        return "alpha"
    if seq == (0, 0, 0, 0):
        return "beta"
    if len(seq) == 4:
        m = max(seq)
        if m > 1 and seq == canonical_sequence((0, -m, 0, m)):
            return f"phi({m})"
    return None


ALPHA_POLYGON = FundamentalPolygon((Vec(1, 0), Vec(0, 1), Vec(-1, -1)))
SQUARE = FundamentalPolygon((Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(0, -1)))


def phi_polygon(m: int) -> FundamentalPolygon:
    return validate_polygon([(1, 0), (0, 1), (-1, 0), (m, -1)])
