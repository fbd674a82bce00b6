import pytest
from hypothesis import strategies as st

from plmaps.polygon import ALPHA_POLYGON, SQUARE, phi_polygon, vertex_insert

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def _report(number, text, passed):
        line = f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {text}"
        ACCEPTANCE_LINES.append((number, line))
        print(line)
        assert passed, line

    return _report


def base_polygons(max_m=4):
    return [ALPHA_POLYGON, SQUARE] + [phi_polygon(m) for m in range(1, max_m + 1)]


@st.composite
def polygons(draw, max_inserts=8, max_m=4):
    """Random fundamental polygon: a base followed by random vertex insertions."""
    p = draw(st.sampled_from(base_polygons(max_m)))
    for _ in range(draw(st.integers(0, max_inserts))):
        p = vertex_insert(p, draw(st.integers(0, len(p) - 1)))
    return p


lattice = st.integers(-50, 50)
points = st.tuples(lattice, lattice)
nonzero_points = points.filter(lambda p: p != (0, 0))
