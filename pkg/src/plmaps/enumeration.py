"""Admissible trace sequences and the binary-tree code for fundamental
polygons.

Every vertex inserted between two unimodular neighbours is their sum (a
mediant), so the vertices of a polygon strictly inside the second quadrant
form a binary tree rooted at (-1,1).  A node's left child sits between the
node and the slot's CCW boundary, its right child between the CW boundary
and the node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .geometry import Matrix, Vec, strictly_inside_arc
from .polygon import (
    FundamentalPolygon,
    PolygonError,
    TraceSequence,
    canonical_sequence,
    polygon_from_sequence,
    validate_polygon,
)

UP = Vec(0, 1)
WEST = Vec(-1, 0)
EAST = Vec(1, 0)


def insert_into_sequence(seq: Sequence[int], i: int) -> TraceSequence:
    """Sequence after inserting a vertex between e_i and e_{i+1}."""
    m = list(seq)
    n = len(m)
    if not 0 <= i < n:
        raise IndexError(f"insertion index {i} out of range for length {n}")
    m[i] += 1
    m[(i + 1) % n] += 1
    m.insert(i + 1, 1)
    return TraceSequence(m)


def base_sequences(max_entry: int) -> list[TraceSequence]:
    bases = [TraceSequence((-1, -1, -1))]
    bases += [canonical_sequence((0, -m, 0, m)) for m in range(max_entry + 1)]
    return bases


def enumerate_admissible(n: int, max_entry: int) -> list[TraceSequence]:
    """All admissible sequences of length ``n`` with entries in [-M, M],
    as sorted canonical rotations.

    Insertion never decreases an entry and every base entry is >= -M, so
    pruning entries above M during the search loses nothing.
    """
    if n < 3:
        raise ValueError("length must be at least 3")
    if max_entry < 0:
        raise ValueError("entry bound must be nonnegative")

    def ok(s):
        return max(abs(v) for v in s) <= max_entry

    bases = [s for s in base_sequences(max_entry) if ok(s)]
    layer = {s for s in bases if len(s) == 3}
    for length in range(3, n):
        layer = {
            canonical_sequence(t)
            for s in layer
            for t in (insert_into_sequence(s, i) for i in range(length))
            if ok(t)
        }
        if length == 3:
            layer |= {s for s in bases if len(s) == 4}
    return sorted(layer)


@dataclass(frozen=True)
class InsertionTree:
    label: Vec
    left: Optional["InsertionTree"] = None
    right: Optional["InsertionTree"] = None

    def size(self) -> int:
        return 1 + tree_size(self.left) + tree_size(self.right)


def tree_size(t: Optional[InsertionTree]) -> int:
    return 0 if t is None else t.size()


@dataclass(frozen=True)
class PolygonCode:
    upper: Optional[InsertionTree]
    lower: Optional[InsertionTree]
    shear: int


def tree_vertices(t: Optional[InsertionTree]) -> list[Vec]:
    """Labels in CCW order: right subtree, node, left subtree."""
    if t is None:
        return []
    return tree_vertices(t.right) + [t.label] + tree_vertices(t.left)


def build_tree(vertices: Sequence, cw: Vec = UP, ccw: Vec = WEST) -> Optional[InsertionTree]:
    """Decode the vertices strictly inside the slot ``(cw, ccw)`` into a tree.

    Raises PolygonError if they are not a nested set of mediants.
    """
    inside = [Vec(*v) for v in vertices]
    if not inside:
        return None
    label = cw + ccw
    if label not in inside:
        raise PolygonError(f"mediant {label} of {cw} and {ccw} missing")
    right = [v for v in inside if strictly_inside_arc(v, cw, label)]
    left = [v for v in inside if strictly_inside_arc(v, label, ccw)]
    if len(left) + len(right) + 1 != len(inside):
        raise PolygonError(f"vertices outside slot ({cw}, {ccw})")
    return InsertionTree(label, build_tree(left, label, ccw), build_tree(right, cw, label))


def shape_tree(shape, cw: Vec = UP, ccw: Vec = WEST) -> Optional[InsertionTree]:
    """Label an unlabelled shape ``None | (left_shape, right_shape)``."""
    if shape is None:
        return None
    label = cw + ccw
    left, right = shape
    return InsertionTree(label, shape_tree(left, label, ccw), shape_tree(right, cw, label))


@lru_cache(maxsize=None)
def tree_shapes(h: int) -> tuple:
    """Every binary tree shape with ``h`` nodes."""
    if h == 0:
        return (None,)
    out = []
    for k in range(h):
        for left in tree_shapes(k):
            for right in tree_shapes(h - 1 - k):
                out.append((left, right))
    return tuple(out)


def all_trees(h: int) -> Iterator[InsertionTree]:
    for shape in tree_shapes(h):
        yield shape_tree(shape)


def count_upper_configs(h: int) -> int:
    """Distinct second-quadrant vertex sets coming from trees with h nodes."""
    if h < 0:
        raise ValueError("node count must be nonnegative")
    return len({frozenset(tree_vertices(t)) for t in all_trees(h)})


def catalan(h: int) -> int:
    return math.comb(2 * h, h) // (h + 1)


def _shear(m: int) -> Matrix:
    return Matrix(1, m, 0, 1)


def polygon_from_trees(code: PolygonCode) -> FundamentalPolygon:
    """Upper half from ``code.upper`` between (0,1) and (-1,0); lower half is
    the negated tree configuration sheared by ``(1 m; 0 1)``."""
    upper = tree_vertices(code.upper)
    s = _shear(code.shear)
    lower = [s @ (-v) for v in [UP] + tree_vertices(code.lower)]
    return validate_polygon([EAST, UP] + upper + [WEST] + lower, pick_check=False)


def _in_frame(p: FundamentalPolygon) -> bool:
    return p[0] == EAST and p[1] == UP and WEST in p.vertices


def _to_frame(p: FundamentalPolygon, j: int) -> FundamentalPolygon:
    n = len(p)
    basis = Matrix.from_columns(p[j], p[j + 1]).inverse()
    return FundamentalPolygon(tuple(basis @ p[j + t] for t in range(n)))


def _code_in_frame(p: FundamentalPolygon) -> PolygonCode:
    verts = list(p.vertices)
    k = verts.index(WEST)
    upper = verts[2:k]
    lower = verts[k + 1 :]
    first = lower[0]
    # lower[0] = shear @ (0,-1) = (-m, -1)
    m = -first.x
    unshear = _shear(-m)
    lower_std = [-(unshear @ v) for v in lower[1:]]
    return PolygonCode(build_tree(upper), build_tree(lower_std), m)


def collinear_bases(p: FundamentalPolygon) -> list[int]:
    """Indices j with -e_j also a vertex."""
    verts = set(p.vertices)
    return [j for j, v in enumerate(p.vertices) if -v in verts]


def tree_from_polygon(p: FundamentalPolygon) -> PolygonCode:
    """Encode a polygon with at least 4 vertices.

    A polygon already in the frame e_0=(1,0), e_1=(0,1) containing (-1,0) is
    encoded as is.  Otherwise the first vertex whose negative is also a
    vertex becomes e_0 after an SL(2,Z) change of basis.
    """
    if len(p) < 4:
        raise PolygonError("polygons with 3 vertices have no collinear pair")
    if _in_frame(p):
        return _code_in_frame(p)
    bases = collinear_bases(p)
    if not bases:
        raise PolygonError("no collinear pair of vertices")
    return _code_in_frame(_to_frame(p, bases[0]))


def code_key(c: Optional[object]):
    if c is None:
        return ()
    if isinstance(c, PolygonCode):
        return (code_key(c.upper), code_key(c.lower), c.shear)
    return (tuple(c.label), code_key(c.left), code_key(c.right))


def canonical_code(p: FundamentalPolygon) -> PolygonCode:
    """Least code over every collinear base choice.

    Taking -e_j instead of e_j as base is the negation (x,y) -> (-x,-y), so
    both representatives of a negation pair are compared.
    """
    if len(p) < 4:
        raise PolygonError("polygons with 3 vertices have no collinear pair")
    codes = [_code_in_frame(_to_frame(p, j)) for j in collinear_bases(p)]
    if not codes:
        raise PolygonError("no collinear pair of vertices")
    return min(codes, key=code_key)


def iter_codes(max_nodes: int, max_shear: int) -> Iterator[PolygonCode]:
    uppers = [t for h in range(max_nodes + 1) for t in all_trees(h)]
    for up in uppers:
        for low in uppers:
            for m in range(-max_shear, max_shear + 1):
                yield PolygonCode(up, low, m)


def sequences_by_insertion(seq: Sequence[int], depth: int) -> set:
    """Canonical sequences reachable from ``seq`` by exactly ``depth`` insertions."""
    layer = {canonical_sequence(seq)}
    for _ in range(depth):
        layer = {
            canonical_sequence(insert_into_sequence(s, i)) for s in layer for i in range(len(s))
        }
    return layer
