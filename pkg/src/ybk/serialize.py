"""Bit-exact JSON documents for solutions and commutation families.

Documents are strict: unknown keys are rejected, so a parsed document
re-serializes to exactly the canonical form of its source.  Canonical form is
sorted keys, compact separators, one trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError, SchemaError
from .kgraph import ThetaFamily, make_theta_family
from .solution import Solution, make_solution

FORMAT_VERSION = "1"
_SOLUTION_KEYS = {"format_version", "size", "table", "labels", "name", "metadata"}
_THETA_KEYS = {"format_version", "k", "sizes", "maps", "name", "metadata"}


@dataclass(frozen=True)
class SolutionDocument:
    solution: Solution
    name: str | None = None
    labels: tuple[str, ...] | None = None
    metadata: dict | None = None


@dataclass(frozen=True)
class ThetaDocument:
    family: ThetaFamily
    name: str | None = None
    metadata: dict | None = None


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load_object(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise SchemaError(f"document must be a JSON object, got {type(obj).__name__}")
    return obj


def _check_version(obj: dict) -> None:
    if obj.get("format_version") != FORMAT_VERSION:
        raise SchemaError(
            f"format_version must be {FORMAT_VERSION!r}, got {obj.get('format_version')!r}"
        )


def parse_solution_document(text: str) -> SolutionDocument:
    obj = _load_object(text)
    _check_version(obj)
    unknown = set(obj) - _SOLUTION_KEYS
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}")
    if "size" not in obj or "table" not in obj:
        raise SchemaError("solution document needs 'size' and 'table'")
    size = obj["size"]
    table = obj["table"]
    if not isinstance(size, int):
        raise SchemaError(f"size must be an integer, got {size!r}")
    if not isinstance(table, list):
        raise SchemaError("table must be an array of pairs")
    if len(table) != size * size:
        raise SchemaError(f"table must have {size * size} entries for size {size}, got {len(table)}")
    for entry in table:
        if not (isinstance(entry, list) and len(entry) == 2 and all(isinstance(v, int) for v in entry)):
            raise SchemaError(f"table entries must be two-element integer arrays, got {entry!r}")
    labels = obj.get("labels")
    if labels is not None:
        if not (isinstance(labels, list) and len(labels) == size and all(isinstance(s, str) for s in labels)):
            raise SchemaError(f"labels must be {size} strings")
        labels = tuple(labels)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError("name must be a string")
    metadata = obj.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        raise SchemaError("metadata must be an object")
    solution = make_solution(size, [tuple(entry) for entry in table])
    return SolutionDocument(solution, name=name, labels=labels, metadata=metadata)


def solution_document_dict(doc) -> dict:
    if isinstance(doc, Solution):
        doc = SolutionDocument(doc)
    out = {
        "format_version": FORMAT_VERSION,
        "size": doc.solution.size,
        "table": [list(pair) for pair in doc.solution.table],
    }
    if doc.name is not None:
        out["name"] = doc.name
    if doc.labels is not None:
        out["labels"] = list(doc.labels)
    if doc.metadata is not None:
        out["metadata"] = doc.metadata
    return out


def emit_solution_document(doc) -> str:
    return canonical_json(solution_document_dict(doc))


def parse_theta_document(text: str) -> ThetaDocument:
    obj = _load_object(text)
    _check_version(obj)
    unknown = set(obj) - _THETA_KEYS
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}")
    for key in ("k", "sizes", "maps"):
        if key not in obj:
            raise SchemaError(f"theta document needs {key!r}")
    k = obj["k"]
    sizes = obj["sizes"]
    maps_obj = obj["maps"]
    if not isinstance(k, int) or k < 2:
        raise SchemaError(f"k must be an integer >= 2, got {k!r}")
    if not (isinstance(sizes, list) and len(sizes) == k and all(isinstance(n, int) for n in sizes)):
        raise SchemaError(f"sizes must be {k} integers")
    if not isinstance(maps_obj, dict):
        raise SchemaError("maps must be an object keyed 'i,j'")
    expected = {f"{i},{j}" for i, j in combinations(range(1, k + 1), 2)}
    if set(maps_obj) != expected:
        raise SchemaError(f"maps must have exactly the keys {sorted(expected)}, got {sorted(maps_obj)}")
    maps = {}
    for key, entries in maps_obj.items():
        i, j = (int(part) for part in key.split(","))
        if not isinstance(entries, list):
            raise SchemaError(f"map {key!r} must be an array of pairs")
        for entry in entries:
            if not (isinstance(entry, list) and len(entry) == 2 and all(isinstance(v, int) for v in entry)):
                raise SchemaError(f"map {key!r} entries must be two-element integer arrays")
        maps[(i, j)] = [tuple(entry) for entry in entries]
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError("name must be a string")
    metadata = obj.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        raise SchemaError("metadata must be an object")
    family = make_theta_family(k, sizes, maps)
    return ThetaDocument(family, name=name, metadata=metadata)


def theta_document_dict(doc) -> dict:
    if isinstance(doc, ThetaFamily):
        doc = ThetaDocument(doc)
    family = doc.family
    maps = {}
    for i, j in combinations(range(1, family.k + 1), 2):
        table = family.maps[family.pair_index(i, j)]
        maps[f"{i},{j}"] = [list(pair) for pair in table]
    out = {
        "format_version": FORMAT_VERSION,
        "k": family.k,
        "sizes": list(family.sizes),
        "maps": maps,
    }
    if doc.name is not None:
        out["name"] = doc.name
    if doc.metadata is not None:
        out["metadata"] = doc.metadata
    return out


def emit_theta_document(doc) -> str:
    return canonical_json(theta_document_dict(doc))


def sniff_kind(text: str) -> str:
    """'solution' or 'theta', judged by the discriminating keys."""
    obj = _load_object(text)
    if "table" in obj:
        return "solution"
    if "maps" in obj:
        return "theta"
    raise SchemaError("document has neither 'table' nor 'maps'")
