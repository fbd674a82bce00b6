"""
Which half-plane maps are periodic
==================================

Every map here uses (a -1; 1 0) on the right half plane and (b -1; 1 0)
on the left.  Scan a grid of traces and print the periodic cells.
"""

from plmaps import classify_half_plane

rows = classify_half_plane(-6, 1, -6, 1, max_period=120)

for row in rows:
    if row.period is not None:
        print(f"a={row.params.a:2d} b={row.params.b:2d} period {row.period}")

# the rest either blow up or never close within the bound
verdicts = {}
for row in rows:
    verdicts[row.verdict] = verdicts.get(row.verdict, 0) + 1
print(verdicts)
