"""
Drawing a polygon
=================

Writes the fundamental polygons of H and of the order-12 map D as SVG.
"""

import sys

from plmaps import RenderOptions, named_map, render_svg

out = sys.argv[1] if len(sys.argv) > 1 else "."

with open(f"{out}/H.svg", "w") as fh:
    fh.write(render_svg(named_map("H")))

with open(f"{out}/D.svg", "w") as fh:
    fh.write(render_svg(named_map("D"), RenderOptions(scale=60, label_vertices=True)))

print("wrote", f"{out}/H.svg", f"{out}/D.svg")
