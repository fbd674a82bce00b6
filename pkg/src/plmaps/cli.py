"""Command-line interface.

Exit status is 0 on success, 1 when the input is mathematically invalid
(bad polygon, aperiodic map, ...) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import catalog, conemap, documents, enumeration, polygon, render
from .geometry import Vec

# lets values such as -1,-1,-1 or -6:1 through as arguments rather than flags
_NEGATIVE_ARG = re.compile(r"^-\d[-\d,:]*$")


class UsageError(Exception):
    pass


def _ints(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(t) for t in text.split(sep)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers separated by '{sep}', got {text!r}") from None


def _point(text: str) -> Vec:
    vals = _ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}")
    return Vec(*vals)


def _range(text: str) -> tuple[int, int]:
    vals = _ints(text, ":")
    if len(vals) != 2 or vals[0] > vals[1]:
        raise argparse.ArgumentTypeError(f"expected LO:HI with LO <= HI, got {text!r}")
    return vals[0], vals[1]


def load_object(source: str):
    """A named map, a JSON document path, or '-' for a document on stdin."""
    if source == "-":
        return documents.parse(sys.stdin.read())
    if os.path.exists(source):
        with open(source, "rb") as fh:
            return documents.parse(fh.read())
    try:
        return catalog.named_map(source)
    except KeyError:
        raise UsageError(f"{source!r} is neither a file nor a known map name ({', '.join(catalog.NAMES)}, phi(m), reflect2(n))") from None


def load_map(source: str) -> conemap.ConeFanMap:
    obj = load_object(source)
    if isinstance(obj, polygon.TraceSequence):
        obj = polygon.polygon_from_sequence(obj)
    if isinstance(obj, enumeration.PolygonCode):
        obj = enumeration.polygon_from_trees(obj)
    if isinstance(obj, polygon.FundamentalPolygon):
        obj = polygon.map_from_polygon(obj)
    if not isinstance(obj, conemap.ConeFanMap):
        raise UsageError("expected a map, polygon, sequence or code document")
    return obj


def load_polygon(source: str) -> polygon.FundamentalPolygon:
    obj = load_object(source)
    if isinstance(obj, polygon.TraceSequence):
        return polygon.polygon_from_sequence(obj)
    if isinstance(obj, enumeration.PolygonCode):
        return enumeration.polygon_from_trees(obj)
    if isinstance(obj, conemap.ConeFanMap):
        return polygon.polygon_of_map(obj)
    if isinstance(obj, polygon.FundamentalPolygon):
        return obj
    raise UsageError("expected a polygon, sequence, code or map")


def verify_line(f: conemap.ConeFanMap, max_n: int) -> str:
    search = conemap.period_search(f, max_n)
    orient = conemap.orientation(f)
    if search.period is None:
        per = "none" if search.reason == "bound" else "none(growth)"
        rot = "undefined"
    else:
        per = str(search.period)
        rot = str(conemap.rotation_number(f, max_n)) if orient == "preserving" else "undefined"
    return f"period={per} rotation={rot} orientation={orient} pieces={f.pieces}"


def cmd_verify(args, out):
    out.write(verify_line(load_map(args.target), args.max_period) + "\n")


def cmd_orbit(args, out):
    f = load_map(args.map)
    for p in conemap.orbit(f, args.point, args.steps):
        out.write(f"{p.x},{p.y}\n")


def cmd_classify(args, out):
    rows = catalog.classify_half_plane(*args.a, *args.b, args.max_period, args.growth_bound)
    if args.json:
        out.write(documents.dumps(rows) + "\n")
        return
    out.write("a\tb\tverdict\tperiod\twitness\n")
    for r in rows:
        per = "" if r.period is None else str(r.period)
        wit = "" if r.witness is None else f"{r.witness.x},{r.witness.y}"
        out.write(f"{r.params.a}\t{r.params.b}\t{r.verdict}\t{per}\t{wit}\n")


def cmd_enumerate(args, out):
    seqs = enumeration.enumerate_admissible(args.order, args.max_entry)
    if args.json:
        for s in seqs:
            out.write(documents.dumps(s) + "\n")
        return
    for s in seqs:
        out.write(",".join(map(str, s)) + "\n")


def cmd_polygon(args, out):
    if args.action == "from-sequence":
        p = polygon.polygon_from_sequence(_ints(args.source))
    elif args.action == "of-map":
        p = polygon.polygon_of_map(load_map(args.source), args.max_period)
    else:
        p = load_polygon(args.source)
        if args.index is None:
            raise UsageError(f"polygon {args.action} needs --index")
        if args.action == "insert":
            p = polygon.vertex_insert(p, args.index)
        elif args.action == "remove":
            p = polygon.vertex_remove(p, args.index)
    if args.sequence:
        out.write(documents.dumps(polygon.sequence_of(p)) + "\n")
    else:
        out.write(documents.dumps(p) + "\n")


def cmd_tree(args, out):
    if args.action == "encode":
        p = load_polygon(args.source)
        code = enumeration.canonical_code(p) if args.canonical else enumeration.tree_from_polygon(p)
        out.write(documents.dumps(code) + "\n")
    else:
        obj = load_object(args.source)
        if not isinstance(obj, enumeration.PolygonCode):
            raise UsageError("tree decode expects a code document")
        out.write(documents.dumps(enumeration.polygon_from_trees(obj)) + "\n")


def cmd_render(args, out):
    obj = load_object(args.target)
    if isinstance(obj, polygon.TraceSequence):
        obj = polygon.polygon_from_sequence(obj)
    elif isinstance(obj, enumeration.PolygonCode):
        obj = enumeration.polygon_from_trees(obj)
    opts = render.RenderOptions(
        scale=args.scale,
        margin=args.margin,
        label_regions=not args.no_labels,
        label_vertices=args.label_vertices,
    )
    svg = render.render_svg(obj, opts)
    if args.output == "-":
        out.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)


def cmd_recur(args, out):
    x0, x1 = args.seed
    res = catalog.recurrence_orbit(args.kind, x0, x1, args.steps)
    out.write(" ".join(map(str, res.values)) + "\n")
    out.write(f"period={'none' if res.period is None else res.period}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plmaps",
        description="Periodic piecewise-linear maps of the plane with integer coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="period, rotation number, orientation and piece count")
    p.add_argument("target", help="map name (H, G, F, E, D, alpha, ..., phi(m)) or document file")
    p.add_argument("--max-period", type=int, default=120)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="iterate a map from a lattice point")
    p.add_argument("--map", required=True)
    p.add_argument("--point", required=True, type=_point, help="X,Y")
    p.add_argument("--steps", required=True, type=int)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("classify", help="period table for the two-half-plane family")
    p.add_argument("--a", required=True, type=_range, help="LO:HI trace range of the right matrix")
    p.add_argument("--b", required=True, type=_range, help="LO:HI trace range of the left matrix")
    p.add_argument("--max-period", required=True, type=int)
    p.add_argument("--growth-bound", type=int, default=conemap.GROWTH_BOUND)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "enumerate",
        help="admissible sequences of a given length",
        description="Every admissible sequence of the given length whose entries lie in "
        "[-M, M], one canonical rotation each.  The list is complete only relative to M: "
        "each length has infinitely many admissible sequences.",
    )
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--max-entry", required=True, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("polygon", help="build or edit fundamental polygons")
    p.add_argument("action", choices=["from-sequence", "of-map", "insert", "remove"])
    p.add_argument("source", help="comma-separated sequence, map name or document file")
    p.add_argument("--index", type=int)
    p.add_argument("--max-period", type=int, default=120)
    p.add_argument("--sequence", action="store_true", help="print the trace sequence instead")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("tree", help="binary-tree code of a fundamental polygon")
    p.add_argument("action", choices=["encode", "decode"])
    p.add_argument("source")
    p.add_argument("--canonical", action="store_true", help="least code over all collinear base choices")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("render", help="SVG picture of a fundamental polygon")
    p.add_argument("target")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--scale", type=int, default=80)
    p.add_argument("--margin", type=int, default=20)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--label-vertices", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("recur", help="the recurrences x' = s(x) - x_prev behind H, G, F")
    p.add_argument("--kind", required=True, choices=sorted(catalog.RECURRENCES))
    p.add_argument("--seed", required=True, type=_point, help="X0,X1")
    p.add_argument("--steps", required=True, type=int)
    p.set_defaults(func=cmd_recur)

    parser.subcommands = sub.choices
    for q in [parser, *sub.choices.values()]:
        q._negative_number_matcher = _NEGATIVE_ARG
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except UsageError as exc:
        err.write(f"plmaps {args.command}: {exc}\n")
        err.write(parser.subcommands[args.command].format_help())
        return 2
    except (ValueError, IndexError) as exc:
        err.write(f"plmaps {args.command}: error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
