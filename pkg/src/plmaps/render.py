"""Deterministic SVG drawings of fundamental polygons.

Layout follows the usual picture: filled origin triangles alternating two
colours, rays from the origin, the polygon boundary, a dot per vertex and
optional region numbers.  The y axis points up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .conemap import ConeFanMap, rotation_number
from .polygon import FundamentalPolygon, polygon_of_map

FILLS = ("#f4e27a", "#9fd89a")
STROKE = "#000000"
AXIS = "#888888"


@dataclass(frozen=True)
class RenderOptions:
    scale: int = 80
    margin: int = 20
    label_regions: bool = True
    label_vertices: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")


def region_labels(n: int, step: int) -> list[int]:
    """Label of cone i when the drawn map sends cone c to cone c + step."""
    labels = [0] * n
    for t in range(n):
        labels[(t * step) % n] = t
    return labels


def _num(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(obj: Union[FundamentalPolygon, ConeFanMap], opts: RenderOptions = RenderOptions(), max_n: int = 120) -> str:
    if isinstance(obj, ConeFanMap):
        poly = polygon_of_map(obj, max_n)
        # obj shifts cones by its rotation numerator, the polygon map by one
        step = rotation_number(obj, max_n).numerator if opts.label_regions else 1
    else:
        poly = obj
        step = 1
    verts = list(poly.vertices)
    n = len(verts)
    s = opts.scale

    def px(v):
        return v[0] * s, -v[1] * s

    xs = [0] + [v[0] for v in verts]
    ys = [0] + [v[1] for v in verts]
    x0 = min(xs) * s - opts.margin
    y0 = -max(ys) * s - opts.margin
    w = (max(xs) - min(xs)) * s + 2 * opts.margin
    h = (max(ys) - min(ys)) * s + 2 * opts.margin

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="{x0} {y0} {w} {h}">',
        f'<g id="axes" stroke="{AXIS}" stroke-width="1">',
        f'<line x1="{x0}" y1="0" x2="{x0 + w}" y2="0"/>',
        f'<line x1="0" y1="{y0}" x2="0" y2="{y0 + h}"/>',
        "</g>",
        '<g id="regions" stroke="none">',
    ]
    for i in range(n):
        (ax, ay), (bx, by) = px(verts[i]), px(verts[(i + 1) % n])
        out.append(f'<polygon class="region" points="0,0 {ax},{ay} {bx},{by}" fill="{FILLS[i % 2]}"/>')
    out.append("</g>")
    out.append(f'<g id="rays" stroke="{STROKE}" stroke-width="1.5">')
    for v in verts:
        x, y = px(v)
        out.append(f'<line class="ray" x1="0" y1="0" x2="{x}" y2="{y}"/>')
    out.append("</g>")
    boundary = " ".join(f"{x},{y}" for x, y in map(px, verts))
    out.append(f'<polygon id="boundary" points="{boundary}" fill="none" stroke="{STROKE}" stroke-width="1.5"/>')
    out.append(f'<g id="vertices" fill="{STROKE}">')
    for v in verts:
        x, y = px(v)
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="{max(2, s // 20)}"/>')
    out.append("</g>")
    font = max(8, s // 6)
    if opts.label_regions:
        labels = region_labels(n, step)
        out.append(f'<g id="region-labels" font-family="sans-serif" font-size="{font}" text-anchor="middle">')
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            cx, cy = (a[0] + b[0]) * s / 3, -(a[1] + b[1]) * s / 3
            out.append(f'<text class="region-label" x="{_num(cx)}" y="{_num(cy)}">{labels[i]}</text>')
        out.append("</g>")
    if opts.label_vertices:
        out.append(f'<g id="vertex-labels" font-family="sans-serif" font-size="{font}">')
        for v in verts:
            x, y = px(v)
            out.append(f'<text class="vertex-label" x="{x + font // 2}" y="{y - font // 2}">({v[0]},{v[1]})</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
