"""Piecewise-linear plane maps given by a fan of cones and one integer
matrix per cone.

A map with rays ``r_0, ..., r_{k-1}`` (CCW) applies ``matrices[i]`` on the
closed cone swept counter-clockwise from ``r_i`` to ``r_{i+1}``.  A map with
no rays is globally linear and carries exactly one matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .geometry import (
    IDENTITY,
    Matrix,
    Vec,
    angle_key,
    arc_witness,
    in_ccw_arc,
    primitive,
    same_direction,
    strictly_inside_arc,
    winding_count,
)

GROWTH_BOUND = 10**9


class MapError(ValueError):
    """A cone map violates one of its invariants."""

    def __init__(self, message, index=None):
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index


class FanError(MapError):
    pass


class ContinuityError(MapError):
    pass


class DeterminantError(MapError):
    pass


class MixedOrientationError(MapError):
    pass


class NotPeriodicError(ValueError):
    pass


class RotationNumber(NamedTuple):
    """Reduced fraction k/n with 0 <= k < n."""

    numerator: int
    denominator: int

    @classmethod
    def reduced(cls, k: int, n: int) -> "RotationNumber":
        k %= n
        g = math.gcd(k, n)
        return cls(k // g, n // g)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class ConeFanMap:
    rays: tuple[Vec, ...]
    matrices: tuple[Matrix, ...]

    @property
    def pieces(self) -> int:
        return len(self.matrices)

    @property
    def is_linear(self) -> bool:
        return not self.rays

    def is_identity(self) -> bool:
        return self.is_linear and self.matrices[0].is_identity()

    @property
    def det(self) -> int:
        return self.matrices[0].det

    def cone_index(self, p) -> int:
        """Index of the cone holding ``p``; a point on ray i belongs to cone i."""
        k = len(self.rays)
        if k == 0 or tuple(p) == (0, 0):
            return 0
        for i in range(k):
            if in_ccw_arc(p, self.rays[i], self.rays[(i + 1) % k]):
                return i
        raise AssertionError(f"no cone contains {p}")  # unreachable for a valid fan

    def matrix_at(self, p) -> Matrix:
        return self.matrices[self.cone_index(p)]

    def __call__(self, p) -> Vec:
        return self.matrix_at(p) @ p

    def max_entry(self) -> int:
        return max(m.max_abs() for m in self.matrices)

    def __repr__(self):
        if self.is_linear:
            return f"ConeFanMap(linear {self.matrices[0]})"
        parts = ", ".join(f"{r}:{m}" for r, m in zip(self.rays, self.matrices))
        return f"ConeFanMap({parts})"


def _merge(rays: list, matrices: list):
    # drop every ray whose two neighbouring cones use the same matrix
    changed = True
    while changed and rays:
        changed = False
        k = len(rays)
        for i in range(k):
            if matrices[i - 1] == matrices[i]:
                del rays[i]
                # cone i-1 now extends through cone i
                del matrices[i]
                changed = True
                break
        if len(rays) == 1:
            return [], [matrices[0]]
    if rays:
        # start at the ray of least angle so equal maps compare equal
        s = min(range(len(rays)), key=lambda i: angle_key(rays[i]))
        rays, matrices = rays[s:] + rays[:s], matrices[s:] + matrices[:s]
    return rays, matrices


def make_map(rays: Sequence, matrices: Sequence) -> ConeFanMap:
    """Validate a fan and its matrices, merging redundant rays.

    Rays are normalised to primitive vectors.  Raises a :class:`MapError`
    subclass naming the offending index.
    """
    rays = [primitive(r) for r in rays]
    matrices = [m if isinstance(m, Matrix) else Matrix(*m) for m in matrices]
    k = len(rays)
    if k == 0:
        if len(matrices) != 1:
            raise FanError(f"a linear map needs exactly one matrix, got {len(matrices)}")
    elif len(matrices) != k:
        raise FanError(f"{k} rays but {len(matrices)} matrices")
    if k == 1:
        raise FanError("a single ray does not bound a cone; use a linear map")
    for i, m in enumerate(matrices):
        if m.det not in (1, -1):
            raise DeterminantError(f"matrix {m} has determinant {m.det}", i)
    for i, m in enumerate(matrices):
        if m.det != matrices[0].det:
            raise MixedOrientationError("pieces mix determinants +1 and -1", i)
    if k:
        for i in range(k):
            if same_direction(rays[i], rays[(i + 1) % k]):
                raise FanError("repeated ray", (i + 1) % k)
        if winding_count(rays) != 1:
            raise FanError("rays are not in counter-clockwise order around the origin")
        for i in range(k):
            if matrices[i - 1] @ rays[i] != matrices[i] @ rays[i]:
                raise ContinuityError("adjacent matrices disagree on their shared ray", i)
    rays, matrices = _merge(rays, matrices)
    return ConeFanMap(tuple(rays), tuple(matrices))


def linear(m: Matrix) -> ConeFanMap:
    return make_map([], [m])


IDENTITY_MAP = ConeFanMap((), (IDENTITY,))


def compose(f: ConeFanMap, g: ConeFanMap) -> ConeFanMap:
    """The map ``f o g`` on the common refinement of both fans."""
    if g.is_linear:
        b = g.matrices[0]
        if f.is_linear:
            return linear(f.matrices[0] @ b)
        b_inv = b.inverse()
        refined = sorted({primitive(b_inv @ r) for r in f.rays}, key=angle_key)
    else:
        refined = set(g.rays)
        k = len(g.rays)
        for i, b in enumerate(g.matrices):
            b_inv = b.inverse()
            lo, hi = g.rays[i], g.rays[(i + 1) % k]
            for r in f.rays:
                pre = primitive(b_inv @ r)
                if strictly_inside_arc(pre, lo, hi):
                    refined.add(pre)
        refined = sorted(refined, key=angle_key)
    k = len(refined)
    matrices = []
    for i in range(k):
        p = arc_witness(refined[i], refined[(i + 1) % k])
        b = g.matrix_at(p)
        matrices.append(f.matrix_at(b @ p) @ b)
    return make_map(refined, matrices)


def power(f: ConeFanMap, j: int) -> ConeFanMap:
    if j < 0:
        raise ValueError("negative exponent")
    result = IDENTITY_MAP
    for _ in range(j):
        result = compose(f, result)
    return result


class PeriodSearch(NamedTuple):
    """Outcome of :func:`period_search`.

    ``reason`` is ``"period"``, ``"growth"`` or ``"bound"``.
    """

    period: Optional[int]
    reason: str
    steps: int


def period_search(f: ConeFanMap, max_n: int, growth_bound: int = GROWTH_BOUND) -> PeriodSearch:
    if max_n < 1:
        raise ValueError("max_n must be positive")
    g = f
    for n in range(1, max_n + 1):
        if g.is_identity():
            return PeriodSearch(n, "period", n)
        if g.max_entry() > growth_bound:
            return PeriodSearch(None, "growth", n)
        if n < max_n:
            g = compose(f, g)
    return PeriodSearch(None, "bound", max_n)


def period(f: ConeFanMap, max_n: int = 120, growth_bound: int = GROWTH_BOUND) -> Optional[int]:
    """Least n <= max_n with ``power(f, n)`` exactly the identity, else None."""
    return period_search(f, max_n, growth_bound).period


def orientation(f: ConeFanMap) -> str:
    return "preserving" if f.det == 1 else "reversing"


def rotation_number(f: ConeFanMap, max_n: int = 120) -> RotationNumber:
    """Reduced k/n for an orientation-preserving map of period n.

    k counts how many orbit arcs of the direction (1,0) contain (1,0) itself.
    """
    if f.det != 1:
        raise ValueError("rotation number undefined for orientation-reversing maps")
    n = period(f, max_n)
    if n is None:
        raise NotPeriodicError("not periodic within bound")
    ref = Vec(1, 0)
    orbit = [ref]
    for _ in range(n):
        orbit.append(f(orbit[-1]))
    assert orbit[-1] == ref
    k = sum(1 for j in range(n) if in_ccw_arc(ref, orbit[j], orbit[j + 1]))
    return RotationNumber.reduced(k, n)


def orbit(f: ConeFanMap, p, steps: int) -> list[Vec]:
    pts = [Vec(*p)]
    for _ in range(steps):
        pts.append(f(pts[-1]))
    return pts


def inverse_mod(k: int, n: int) -> int:
    if n == 1:
        return 0
    return pow(k, -1, n)


def invariant_fan(f: ConeFanMap, max_n: int = 120) -> list[Vec]:
    """Sorted union of the orbits of every break ray of a periodic map.

    Each power of ``f`` is linear between consecutive rays of this fan, so
    its length counts the pieces of the finest common decomposition.
    """
    n = period(f, max_n)
    if n is None:
        raise NotPeriodicError("not periodic within bound")
    rays = set()
    for r in f.rays:
        for p in orbit(f, r, n - 1):
            rays.add(primitive(p))
    return sorted(rays, key=angle_key)
