import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_points, points
from plmaps.geometry import (
    ALPHA,
    BETA,
    GAMMA,
    IDENTITY,
    MU,
    Matrix,
    Vec,
    all_matrices,
    angle_key,
    cross,
    dot,
    in_ccw_arc,
    is_ccw_fan,
    lattice_points_in_triangle,
    matrix_order,
    primitive,
)


@pytest.mark.parametrize(
    "u, v, expected",
    [((1, 0), (0, 1), 1), ((0, 1), (-1, -1), 1), ((2, 1), (2, 1), 0)],
)
def test_cross(u, v, expected):
    assert cross(u, v) == expected


@given(points, points)
def test_cross_antisymmetric(u, v):
    assert cross(u, v) == -cross(v, u)


@pytest.mark.parametrize("u, expected", [((4, -2), (2, -1)), ((0, 5), (0, 1)), ((-3, -3), (-1, -1))])
def test_primitive(u, expected):
    assert primitive(u) == expected


def test_primitive_zero():
    with pytest.raises(ValueError, match="zero direction"):
        primitive((0, 0))


@given(nonzero_points)
def test_primitive_idempotent_and_same_direction(u):
    p = primitive(u)
    assert primitive(p) == p
    assert cross(u, p) == 0 and dot(u, p) > 0
    assert math.gcd(*p) == 1


@pytest.mark.parametrize(
    "rays, expected",
    [
        ([(1, 0), (0, 1), (-1, 0), (0, -1)], True),
        ([(1, 0), (-1, 0)], False),
        ([(1, 0), (0, 1), (-1, -1)], True),
        ([(1, 0), (-1, -1), (0, 1)], False),  # clockwise
        ([(1, 0), (0, 1), (-1, 0), (0, -1)] * 2, False),  # two turns
        ([(1, 0)], False),
    ],
)
def test_is_ccw_fan(rays, expected):
    assert is_ccw_fan(rays) is expected


def test_angle_order_matches_atan2():
    pts = [Vec(x, y) for x in range(-4, 5) for y in range(-4, 5) if (x, y) != (0, 0)]
    by_key = sorted(pts, key=angle_key)
    by_float = sorted(pts, key=lambda p: (math.atan2(p.y, p.x) % (2 * math.pi), p.x, p.y))
    # equal angles may order differently; compare directions only
    assert [primitive(p) for p in by_key] == [primitive(p) for p in by_float]


def test_in_ccw_arc_half_open():
    assert in_ccw_arc((1, 0), (1, 0), (0, 1))
    assert not in_ccw_arc((0, 1), (1, 0), (0, 1))
    assert in_ccw_arc((1, -1), (0, -1), (0, 1))  # arc through angle 0
    assert not in_ccw_arc((-1, 0), (0, -1), (0, 1))
    assert in_ccw_arc((-1, 0), (0, 1), (0, -1))


def test_lattice_points_examples():
    assert lattice_points_in_triangle((0, 0), (1, 0), (0, 1)) == [(0, 0), (0, 1), (1, 0)]
    pts = lattice_points_in_triangle((0, 0), (2, 0), (0, 1))
    assert (1, 0) in pts and len(pts) == 4
    assert sorted(lattice_points_in_triangle((0, 0), (3, -1), (1, 0))) == [(0, 0), (1, 0), (3, -1)]


def test_lattice_points_lexicographic():
    pts = lattice_points_in_triangle((0, 0), (4, 1), (1, 3))
    assert pts == sorted(pts)


def test_lattice_points_degenerate():
    with pytest.raises(ValueError):
        lattice_points_in_triangle((0, 0), (1, 1), (2, 2))


def _pick_total(a, b, c):
    # Pick: 2A = 2I + B - 2, boundary count from gcds of edge vectors
    area2 = abs(cross(Vec(*b) - a, Vec(*c) - a))
    boundary = sum(
        math.gcd(q[0] - p[0], q[1] - p[1]) for p, q in ((a, b), (b, c), (c, a))
    )
    interior = (area2 - boundary + 2) // 2
    return interior + boundary


small = st.tuples(st.integers(-8, 8), st.integers(-8, 8))


@given(small, small, small)
def test_lattice_points_agree_with_pick(a, b, c):
    if cross(Vec(*b) - a, Vec(*c) - a) == 0:
        return
    assert len(lattice_points_in_triangle(a, b, c)) == _pick_total(a, b, c)


def test_matrix_orders():
    assert matrix_order(ALPHA, 24) == 3
    assert matrix_order(BETA, 24) == 4
    assert matrix_order(GAMMA, 24) == 6
    assert matrix_order(IDENTITY, 24) == 1
    assert matrix_order(MU, 100) is None


def test_mu_powers_grow_linearly():
    # mu = -(I + N) with N = (1 1; -1 -1) nilpotent, so mu^n = (-1)^n (I + nN)
    for n in range(1, 20):
        m = MU**n
        s = (-1) ** n
        assert m == Matrix(s * (1 + n), s * n, -s * n, s * (1 - n))


def test_crystallographic_restriction_small():
    orders = {matrix_order(m, 24) for m in all_matrices(range(-2, 3))}
    assert orders - {None} == {1, 2, 3, 4, 6}


def test_matrix_inverse_and_power():
    m = Matrix(2, 1, 1, 1)
    assert m @ m.inverse() == IDENTITY
    assert m**-2 @ m**2 == IDENTITY
    with pytest.raises(ValueError):
        Matrix(2, 0, 0, 1).inverse()
