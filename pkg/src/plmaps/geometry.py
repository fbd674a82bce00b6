"""Exact integer primitives for lattice vectors and 2x2 integer matrices.

Nothing in this module touches floating point.  Python integers are
unbounded, so products of long compositions never wrap around.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, NamedTuple, Optional, Sequence


class Vec(NamedTuple):
    """An integer lattice point, or a direction when nonzero."""

    x: int
    y: int

    def __add__(self, other):
        return Vec(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Vec(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Vec(-self.x, -self.y)

    def __mul__(self, k):
        if isinstance(k, tuple):
            return NotImplemented
        return Vec(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __repr__(self):
        return f"({self.x},{self.y})"


class Matrix(NamedTuple):
    """Row-major 2x2 integer matrix ``(a b; c d)``.

    ``M @ v`` applies the matrix to a vector, ``M @ N`` multiplies.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_columns(cls, u, v) -> "Matrix":
        return cls(u[0], v[0], u[1], v[1])

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return Matrix(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        x, y = other
        return Vec(self.a * x + self.b * y, self.c * x + self.d * y)

    def __neg__(self):
        return Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "Matrix":
        """Integer inverse; only defined for determinant +-1."""
        det = self.det
        if det not in (1, -1):
            raise ValueError(f"matrix {self} has determinant {det}, not invertible over Z")
        return Matrix(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def is_identity(self) -> bool:
        return self == IDENTITY

    def max_abs(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            return self.inverse() ** -n
        result, base = IDENTITY, self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __repr__(self):
        return f"({self.a} {self.b}; {self.c} {self.d})"


IDENTITY = Matrix(1, 0, 0, 1)

ALPHA = Matrix(-1, -1, 1, 0)
BETA = Matrix(0, -1, 1, 0)
GAMMA = Matrix(1, -1, 1, 0)
MU = Matrix(-2, -1, 1, 0)
NU = Matrix(-3, -1, 1, 0)


def cross(u, v) -> int:
    """``u.x*v.y - u.y*v.x``; positive iff v lies CCW of u within a half turn."""
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1]


def primitive(u) -> Vec:
    """Shortest lattice vector pointing in the direction of ``u``."""
    x, y = u
    if x == 0 and y == 0:
        raise ValueError("zero direction")
    g = math.gcd(x, y)
    return Vec(x // g, y // g)


def is_primitive(u) -> bool:
    return tuple(u) != (0, 0) and math.gcd(u[0], u[1]) == 1


def _half(u) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    x, y = u
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def angle_cmp(u, v) -> int:
    """Compare the polar angles of two nonzero vectors, measured in [0, 2pi)."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = functools.cmp_to_key(angle_cmp)


def same_direction(u, v) -> bool:
    return cross(u, v) == 0 and dot(u, v) > 0


def in_ccw_arc(p, start, end) -> bool:
    """True if direction ``p`` lies in the half-open CCW arc ``[start, end)``.

    An arc whose endpoints share a direction is taken to be empty.
    """
    if same_direction(start, end):
        return False
    s_p = angle_cmp(start, p)
    s_e = angle_cmp(start, end)
    p_e = angle_cmp(p, end)
    if s_e < 0:
        # arc does not pass the reference direction
        return s_p <= 0 and p_e < 0
    return s_p <= 0 or p_e < 0


def strictly_inside_arc(p, start, end) -> bool:
    """Open version of :func:`in_ccw_arc`."""
    return in_ccw_arc(p, start, end) and not same_direction(p, start)


def arc_witness(start, end) -> Vec:
    """A lattice vector strictly inside the CCW arc from ``start`` to ``end``.

    Both endpoints are nonzero and point in different directions.
    """
    c = cross(start, end)
    if c > 0:
        return Vec(start[0] + end[0], start[1] + end[1])
    if c < 0:
        return Vec(-start[0] - end[0], -start[1] - end[1])
    return Vec(-start[1], start[0])


def winding_count(rays: Sequence) -> int:
    """Number of times the closed CCW chain of directions passes angle 0."""
    k = len(rays)
    return sum(1 for i in range(k) if angle_cmp(rays[(i + 1) % k], rays[i]) <= 0)


def is_ccw_fan(rays: Sequence) -> bool:
    """True iff the rays go once around the origin counter-clockwise with
    every consecutive gap strictly less than a half turn."""
    k = len(rays)
    if k < 2:
        return False
    if any(tuple(r) == (0, 0) for r in rays):
        return False
    if any(cross(rays[i], rays[(i + 1) % k]) <= 0 for i in range(k)):
        return False
    return winding_count(rays) == 1


def lattice_points_in_triangle(a, b, c) -> list[Vec]:
    """All integer points of the closed triangle ``abc``, ordered by (x, y)."""
    area2 = cross(Vec(*b) - a, Vec(*c) - a)
    if area2 == 0:
        raise ValueError(f"degenerate triangle {tuple(a)}, {tuple(b)}, {tuple(c)}")
    if area2 < 0:
        b, c = c, b
    corners = (Vec(*a), Vec(*b), Vec(*c))
    xs = [p.x for p in corners]
    ys = [p.y for p in corners]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = Vec(x, y)
            if all(
                cross(corners[(i + 1) % 3] - corners[i], p - corners[i]) >= 0
                for i in range(3)
            ):
                out.append(p)
    return out


def matrix_order(m: Matrix, max_n: int) -> Optional[int]:
    """Smallest ``n <= max_n`` with ``m**n`` the identity, or None."""
    power = IDENTITY
    for n in range(1, max_n + 1):
        power = power @ m
        if power.is_identity():
            return n
    return None


def all_matrices(entries: Iterable[int]):
    """Every 2x2 matrix with entries drawn from ``entries``."""
    values = list(entries)
    return (Matrix(*t) for t in itertools.product(values, repeat=4))
