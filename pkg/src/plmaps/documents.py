"""JSON documents for maps, polygons, sequences, tree codes and
classification tables (format version 1).

Keys are written in a fixed order and integers are never quoted, so
``serialize(parse(text))`` reproduces ``text`` byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .catalog import ClassificationRow, HalfPlaneParams
from .conemap import ConeFanMap, make_map
from .enumeration import InsertionTree, PolygonCode
from .geometry import Matrix, Vec
from .polygon import FundamentalPolygon, TraceSequence, validate_polygon

FORMAT_VERSION = 1


class DocumentError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


_VEC = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
_MATRIX = {"type": "array", "items": _VEC, "minItems": 2, "maxItems": 2}
_TREE = {
    "oneOf": [
        {"type": "null"},
        {
            "type": "object",
            "properties": {"label": _VEC, "left": {"$ref": "#/$defs/tree"}, "right": {"$ref": "#/$defs/tree"}},
            "required": ["label", "left", "right"],
            "additionalProperties": False,
        },
    ]
}


def _schema(kind: str, properties: dict) -> dict:
    props = {"kind": {"const": kind}, "format_version": {"const": FORMAT_VERSION}}
    props.update(properties)
    return {
        "type": "object",
        "properties": props,
        "required": list(props),
        "additionalProperties": False,
        "$defs": {"tree": _TREE},
    }


SCHEMAS = {
    "map": _schema("map", {"rays": {"type": "array", "items": _VEC}, "matrices": {"type": "array", "items": _MATRIX, "minItems": 1}}),
    "polygon": _schema("polygon", {"vertices": {"type": "array", "items": _VEC}}),
    "sequence": _schema("sequence", {"m": {"type": "array", "items": {"type": "integer"}}}),
    "code": _schema("code", {"upper": {"$ref": "#/$defs/tree"}, "lower": {"$ref": "#/$defs/tree"}, "shear": {"type": "integer"}}),
    "classification": _schema(
        "classification",
        {
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "a": {"type": "integer"},
                        "b": {"type": "integer"},
                        "verdict": {"enum": ["period", "aperiodic-by-growth", "no-period-within-bound"]},
                        "period": {"type": ["integer", "null"]},
                        "witness": {"oneOf": [{"type": "null"}, _VEC]},
                    },
                    "required": ["a", "b", "verdict", "period", "witness"],
                    "additionalProperties": False,
                },
            }
        },
    ),
}


def _tree_to_json(t):
    if t is None:
        return None
    return {"label": list(t.label), "left": _tree_to_json(t.left), "right": _tree_to_json(t.right)}


def _tree_from_json(d):
    if d is None:
        return None
    return InsertionTree(Vec(*d["label"]), _tree_from_json(d["left"]), _tree_from_json(d["right"]))


def to_json(obj) -> dict:
    """Document dictionary for a domain object, keys in schema order."""
    head = lambda kind: {"kind": kind, "format_version": FORMAT_VERSION}  # noqa: E731
    if isinstance(obj, ConeFanMap):
        d = head("map")
        d["rays"] = [list(r) for r in obj.rays]
        d["matrices"] = [[list(row) for row in m.rows()] for m in obj.matrices]
    elif isinstance(obj, FundamentalPolygon):
        d = head("polygon")
        d["vertices"] = [list(v) for v in obj.vertices]
    elif isinstance(obj, TraceSequence):
        d = head("sequence")
        d["m"] = list(obj)
    elif isinstance(obj, PolygonCode):
        d = head("code")
        d["upper"] = _tree_to_json(obj.upper)
        d["lower"] = _tree_to_json(obj.lower)
        d["shear"] = obj.shear
    elif isinstance(obj, list) and all(isinstance(r, ClassificationRow) for r in obj):
        d = head("classification")
        d["rows"] = [
            {
                "a": r.params.a,
                "b": r.params.b,
                "verdict": r.verdict,
                "period": r.period,
                "witness": None if r.witness is None else list(r.witness),
            }
            for r in obj
        ]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return d


def from_json(d: Any):
    if not isinstance(d, dict) or d.get("kind") not in SCHEMAS:
        raise DocumentError("document needs a 'kind' of " + ", ".join(SCHEMAS))
    kind = d["kind"]
    try:
        jsonschema.validate(d, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise DocumentError(f"schema violation in {kind} document at '{path}': {exc.message}") from None
    if kind == "map":
        return make_map([Vec(*r) for r in d["rays"]], [Matrix.from_rows(m) for m in d["matrices"]])
    if kind == "polygon":
        return validate_polygon(d["vertices"])
    if kind == "sequence":
        return TraceSequence(d["m"])
    if kind == "code":
        return PolygonCode(_tree_from_json(d["upper"]), _tree_from_json(d["lower"]), d["shear"])
    return [
        ClassificationRow(
            HalfPlaneParams(r["a"], r["b"]),
            r["verdict"],
            r["period"],
            None if r["witness"] is None else Vec(*r["witness"]),
        )
        for r in d["rows"]
    ]


def dumps(obj) -> str:
    return json.dumps(to_json(obj), separators=(",", ":"))


def serialize(obj) -> bytes:
    return dumps(obj).encode("utf-8")


def loads(text: str):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return from_json(d)


def parse(data) -> Any:
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"not UTF-8: {exc}") from None
    return loads(data)
