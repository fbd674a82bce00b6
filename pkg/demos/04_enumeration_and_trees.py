"""
Counting maps of a given order
==============================

Admissible sequences come from repeated insertion.  The inserted vertices
in one half plane form a binary tree.
"""

from plmaps import (
    canonical_code,
    catalan,
    count_upper_configs,
    enumerate_admissible,
    polygon_from_sequence,
    polygon_from_trees,
)

for n in range(3, 9):
    seqs = enumerate_admissible(n, 3)
    print(f"order {n}: {len(seqs)} sequences with entries in [-3, 3], sum {3 * n - 12}")

print(enumerate_admissible(5, 2))

for h in range(6):
    print(h, count_upper_configs(h), catalan(h))

# a polygon, its tree code, and back
p = polygon_from_sequence((1, 2, 1, 2, 1, 2, 1, 2))
code = canonical_code(p)
print(code)
print(polygon_from_trees(code).vertices)
