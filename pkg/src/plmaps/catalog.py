"""Named maps, the two-half-plane family and its classification, and the
second-order recurrences behind H, G and F.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .conemap import GROWTH_BOUND, ConeFanMap, linear, make_map, period_search
from .geometry import ALPHA, BETA, GAMMA, MU, NU, Matrix, Vec
from .polygon import map_from_polygon, phi_polygon, polygon_from_sequence

# split on the y-axis: cone (0,-1)->(0,1) is x >= 0, cone (0,1)->(0,-1) is x < 0
SPLIT_RAYS = (Vec(0, -1), Vec(0, 1))

LINEAR = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA, "mu": MU, "nu": NU}

# right-half matrix, left-half matrix
TWO_PIECE = {
    "H": (GAMMA, ALPHA),
    "G": (GAMMA, BETA),
    "F": (BETA, ALPHA),
    "E": (ALPHA, MU),
    "D": (ALPHA, NU),
}

C_SEQUENCE = (1, 2, 1, 2, 1, 2, 1, 2)


class HalfPlaneParams(NamedTuple):
    """Traces of the right and left matrices ``(a -1; 1 0)``, ``(b -1; 1 0)``."""

    a: int
    b: int


def split_map(right: Matrix, left: Matrix) -> ConeFanMap:
    """``right`` on x >= 0 and ``left`` on x < 0."""
    return make_map(SPLIT_RAYS, [right, left])


def half_plane_map(a: int, b: int) -> ConeFanMap:
    return split_map(Matrix(a, -1, 1, 0), Matrix(b, -1, 1, 0))


def reflect2(n: int) -> ConeFanMap:
    """Orientation-reversing map of period two: (1 0; 0 -1) right, (1 0; n -1) left."""
    return split_map(Matrix(1, 0, 0, -1), Matrix(1, 0, n, -1))


def phi(m: int) -> ConeFanMap:
    return map_from_polygon(phi_polygon(m))


_PARAM_RE = re.compile(r"^(phi|reflect2)\((-?\d+)\)$")


def named_map(name: str, param: Optional[int] = None) -> ConeFanMap:
    """Look up a named construction.

    Linear: alpha, beta, gamma, mu, nu.  Two-piece: H, G, F, E, D.  Also
    ``C`` (the order-8 map with sequence 1,2,1,2,...), ``phi(m)`` and
    ``reflect2(n)``; the parameter may be given inline or as ``param``.
    """
    match = _PARAM_RE.match(name)
    if match:
        name, param = match.group(1), int(match.group(2))
    if name in LINEAR:
        return linear(LINEAR[name])
    if name in TWO_PIECE:
        return split_map(*TWO_PIECE[name])
    if name == "C":
        return map_from_polygon(polygon_from_sequence(C_SEQUENCE))
    if name == "phi":
        if param is None or param < 0:
            raise KeyError("phi needs a parameter m >= 0")
        return phi(param)
    if name == "reflect2":
        if param is None:
            raise KeyError("reflect2 needs an integer parameter")
        return reflect2(param)
    raise KeyError(f"unknown map {name!r}")


NAMES = ("alpha", "beta", "gamma", "mu", "nu", "H", "G", "F", "E", "D", "C")


@dataclass(frozen=True)
class ClassificationRow:
    """One grid cell of the half-plane classification.

    ``verdict`` is ``"period"``, ``"aperiodic-by-growth"`` or
    ``"no-period-within-bound"``.  For the last two, ``witness`` is a start
    point whose orbit did not close within the bound.
    """

    params: HalfPlaneParams
    verdict: str
    period: Optional[int] = None
    witness: Optional[Vec] = None


WITNESS_STARTS = (Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(0, -1), Vec(1, 1), Vec(-1, 1))


def _witness(f: ConeFanMap, max_steps: int, growth_bound: int) -> Optional[Vec]:
    for start in WITNESS_STARTS:
        p = f(start)
        for _ in range(max_steps - 1):
            if p == start or max(abs(p.x), abs(p.y)) > growth_bound:
                break
            p = f(p)
        if p != start:
            return start
    return None


def classify_one(a: int, b: int, max_period: int, growth_bound: int = GROWTH_BOUND) -> ClassificationRow:
    f = half_plane_map(a, b)
    res = period_search(f, max_period, growth_bound)
    params = HalfPlaneParams(a, b)
    if res.period is not None:
        return ClassificationRow(params, "period", res.period)
    verdict = "aperiodic-by-growth" if res.reason == "growth" else "no-period-within-bound"
    return ClassificationRow(params, verdict, None, _witness(f, max_period, growth_bound))


def classify_half_plane(a_min, a_max, b_min, b_max, max_period, growth_bound=GROWTH_BOUND):
    """Period verdict for every (a, b) in the closed grid, sorted by (a, b)."""
    if a_min > a_max or b_min > b_max:
        raise ValueError("empty parameter range")
    return [
        classify_one(a, b, max_period, growth_bound)
        for a in range(a_min, a_max + 1)
        for b in range(b_min, b_max + 1)
    ]


def _step_h(x):
    return abs(x)


def _step_g(x):
    return (abs(x) + x) // 2


def _step_f(x):
    return (abs(x) - x) // 2


RECURRENCES = {"H": _step_h, "G": _step_g, "F": _step_f}


class RecurrenceOrbit(NamedTuple):
    values: list
    period: Optional[int]


def recurrence_orbit(kind: str, x0: int, x1: int, steps: int) -> RecurrenceOrbit:
    """Iterate ``x_{n+1} = s(x_n) - x_{n-1}`` for the named step ``s``.

    ``period`` is the least p with ``(x_{p+1}, x_p) == (x_1, x_0)`` seen
    within ``steps`` terms, else None.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    step = RECURRENCES[kind]
    xs = [x0, x1]
    found = None
    while len(xs) < steps:
        xs.append(step(xs[-1]) - xs[-2])
        p = len(xs) - 2
        if found is None and xs[p] == x0 and xs[p + 1] == x1:
            found = p
    return RecurrenceOrbit(xs, found)
