"""Periodic piecewise-linear maps of the plane with integer coefficients.

The pieces are integer matrices on the cones of a fan.  All arithmetic is
exact, so periods and rotation numbers come from matrix identities, never
from sampling points.
"""

from .catalog import (
    ClassificationRow,
    HalfPlaneParams,
    classify_half_plane,
    half_plane_map,
    named_map,
    recurrence_orbit,
    reflect2,
)
from .conemap import (
    ConeFanMap,
    RotationNumber,
    compose,
    invariant_fan,
    make_map,
    orbit,
    orientation,
    period,
    power,
    rotation_number,
)
from .documents import parse, serialize
from .enumeration import (
    InsertionTree,
    PolygonCode,
    canonical_code,
    catalan,
    count_upper_configs,
    enumerate_admissible,
    insert_into_sequence,
    polygon_from_trees,
    tree_from_polygon,
)
from .geometry import (
    ALPHA,
    BETA,
    GAMMA,
    MU,
    NU,
    Matrix,
    Vec,
    cross,
    is_ccw_fan,
    lattice_points_in_triangle,
    matrix_order,
    primitive,
)
from .polygon import (
    ALPHA_POLYGON,
    SQUARE,
    FundamentalPolygon,
    TraceSequence,
    canonical_sequence,
    map_from_polygon,
    polygon_from_sequence,
    polygon_of_map,
    reduce_polygon,
    sequence_of,
    validate_polygon,
    vertex_insert,
    vertex_remove,
)
from .render import RenderOptions, render_svg

__version__ = "0.1.0"
