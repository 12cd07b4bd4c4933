"""JSON wire format for clump graphs and rational values.

Graphs: {"k": int, "layers": [[{"color": int, "weight": int}, ...], ...]}.
Rationals travel as "p/q" strings so nothing is lost to binary floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import ClumpGraphError, WeightedClumpGraph, make_clump_graph


class SchemaError(ValueError):
    """Raised when input JSON does not match the documented schema."""


def format_rational(value: Fraction | int) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            p, q = text.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {text!r}: {exc}") from exc


def graph_to_dict(graph: WeightedClumpGraph) -> dict[str, Any]:
    return {
        "k": graph.k,
        "layers": [
            [{"color": c.color, "weight": c.weight} for c in layer]
            for layer in graph.layers
        ],
    }


def dump_clump_json(graph: WeightedClumpGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, sort_keys=True) + "\n"


def parse_clump_json(text: str | bytes, rooted: bool = True) -> WeightedClumpGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    for field in ("k", "layers"):
        if field not in data:
            raise SchemaError(f"missing field {field!r}")
    k = data["k"]
    if not isinstance(k, int) or k < 2:
        raise SchemaError(f'field "k" must be an integer >= 2, got {k!r}')
    layers = data["layers"]
    if not isinstance(layers, list):
        raise SchemaError('field "layers" must be a list')
    parsed: list[list[tuple[int, int]]] = []
    for i, layer in enumerate(layers):
        if not isinstance(layer, list):
            raise SchemaError(f"layers[{i}] must be a list")
        row: list[tuple[int, int]] = []
        for j, entry in enumerate(layer):
            if not isinstance(entry, dict):
                raise SchemaError(f"layers[{i}][{j}] must be an object")
            for field in ("color", "weight"):
                if field not in entry:
                    raise SchemaError(f"layers[{i}][{j}] missing field {field!r}")
                if not isinstance(entry[field], int):
                    raise SchemaError(
                        f"layers[{i}][{j}].{field} must be an integer, "
                        f"got {entry[field]!r}"
                    )
            row.append((entry["color"], entry["weight"]))
        parsed.append(row)
    try:
        return make_clump_graph(k, parsed, rooted=rooted)
    except ClumpGraphError as exc:
        raise SchemaError(str(exc)) from exc


def dual_weights_to_json(u: dict[tuple[int, int], Fraction]) -> str:
    entries = [
        {"layer": layer, "color": color, "value": format_rational(value)}
        for (layer, color), value in sorted(u.items())
    ]
    return json.dumps({"u": entries}, indent=2, sort_keys=True) + "\n"


def parse_dual_weights(text: str | bytes) -> dict[tuple[int, int], Fraction]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "u" not in data or not isinstance(data["u"], list):
        raise SchemaError('expected an object with a list field "u"')
    out: dict[tuple[int, int], Fraction] = {}
    for j, entry in enumerate(data["u"]):
        if not isinstance(entry, dict):
            raise SchemaError(f"u[{j}] must be an object")
        for field in ("layer", "color", "value"):
            if field not in entry:
                raise SchemaError(f"u[{j}] missing field {field!r}")
        key = (entry["layer"], entry["color"])
        if key in out:
            raise SchemaError(f"u[{j}] duplicates clump {key}")
        out[key] = parse_rational(str(entry["value"]))
    return out
