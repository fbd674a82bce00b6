"""
Fundamental polygons and vertex insertion
=========================================

A periodic map with rotation number 1/n is fixed by the n lattice vectors
of its fundamental polygon.  Inserting the sum of two neighbours gives a
map of order n + 1.
"""

from plmaps import (
    ALPHA_POLYGON,
    canonical_sequence,
    map_from_polygon,
    named_map,
    period,
    polygon_of_map,
    reduce_polygon,
    sequence_of,
    vertex_insert,
)

p = polygon_of_map(named_map("H"))
print("polygon of H:", p.vertices)
print("sequence:", sequence_of(p), "sum", sum(sequence_of(p)))

# grow the triangle of the order-3 rotation one vertex at a time
q = ALPHA_POLYGON
for i in [0, 2, 1, 4]:
    q = vertex_insert(q, i)
    print(len(q), canonical_sequence(sequence_of(q)), "period", period(map_from_polygon(q)))

# and shrink it back down
print("reduced:", reduce_polygon(q).vertices)
