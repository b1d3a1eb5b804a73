"""Canonical JSON instance documents.

One textual format covers all five instance kinds. Serialization is
canonical: sorted keys, no whitespace, explicit integer residues, sparse
structure constants sorted by index triple. Hashes and golden tests rely on
this being byte-stable.

Shapes, shared keys at top level beside "kind" and "meta":
    semigroup       {"semigroup": {"n", "table", "zero"}}
    group           {"group": {"n", "table"}}
    algebra         {"p", "dim", "mul": [[i, j, k, c], ...]}
    graded_algebra  algebra keys plus {"semigroup": ..., "deg": [...]}
    partial_action  algebra keys (the base algebra) plus {"group": ...,
                     "domains": [rows per element], "maps": [matrix per
                     element], "units": [vectors] or null}

Domain bases are serialized in reduced row-echelon form and map matrices act
on that basis, so parse(serialize(x)) rebuilds x exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .algebras import Algebra, validate_algebra
from .errors import ValidationError
from .fflinalg import FieldSpec, Subspace
from .gradings import GradedAlgebra, validate_grading
from .groups import GroupTable, validate_group
from .partial import PartialAction, validate_partial_action
from .semigroups import SemigroupTable, validate_semigroup

KINDS = ("semigroup", "group", "algebra", "graded_algebra", "partial_action")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class InstanceDocument:
    """A parsed and validated instance with its canonical raw form."""

    kind: str
    payload: object
    meta: dict
    raw: dict

    @property
    def sha256(self) -> str:
        return hashlib.sha256(canonical_json(self.raw).encode()).hexdigest()

    def serialize(self) -> str:
        return canonical_json(self.raw)


def _int_rows(rows) -> list[list[int]]:
    return [[int(x) for x in row] for row in rows]


def _semigroup_block(sg: SemigroupTable) -> dict:
    return {
        "n": int(sg.n),
        "table": _int_rows(sg.table),
        "zero": None if sg.zero is None else int(sg.zero),
    }


def _group_block(group: GroupTable) -> dict:
    return {"n": int(group.n), "table": _int_rows(group.table)}


def _algebra_fields(algebra: Algebra) -> dict:
    entries = []
    for (i, j, k) in zip(*np.nonzero(algebra.mul)):
        entries.append([int(i), int(j), int(k), int(algebra.mul[i, j, k])])
    return {"p": int(algebra.field.p), "dim": int(algebra.dim), "mul": entries}


def _parse_semigroup_block(block) -> SemigroupTable:
    if not isinstance(block, dict) or "table" not in block:
        raise ValidationError("semigroup block must be an object with a table")
    table = block["table"]
    zero = block.get("zero")
    sg = validate_semigroup(table, zero=None if zero is None else int(zero))
    if "n" in block and int(block["n"]) != sg.n:
        raise ValidationError("semigroup block: declared n disagrees with the table")
    return sg


def _parse_group_block(block) -> GroupTable:
    if not isinstance(block, dict) or "table" not in block:
        raise ValidationError("group block must be an object with a table")
    group = validate_group(block["table"])
    if "n" in block and int(block["n"]) != group.n:
        raise ValidationError("group block: declared n disagrees with the table")
    return group


def _parse_algebra_fields(doc) -> Algebra:
    for key in ("p", "dim", "mul"):
        if key not in doc:
            raise ValidationError(f"algebra instance needs the key {key!r}")
    field = FieldSpec(int(doc["p"]))
    dim = int(doc["dim"])
    mul = doc["mul"]
    if not isinstance(mul, list):
        raise ValidationError("mul must be a list of [i, j, k, c] entries")
    quads = []
    for pos, entry in enumerate(mul):
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise ValidationError(f"mul entry {pos} must be [i, j, k, c]")
        quads.append(tuple(int(x) for x in entry))
    return validate_algebra(field, dim, quads)


def instance_from_object(kind: str, payload, meta: dict | None = None) -> InstanceDocument:
    """Wrap an already-validated object as a document with canonical raw form."""
    meta = dict(meta or {})
    if kind == "semigroup":
        raw = {"kind": kind, "semigroup": _semigroup_block(payload), "meta": meta}
    elif kind == "group":
        raw = {"kind": kind, "group": _group_block(payload), "meta": meta}
    elif kind == "algebra":
        raw = {"kind": kind, "meta": meta, **_algebra_fields(payload)}
    elif kind == "graded_algebra":
        raw = {
            "kind": kind,
            "meta": meta,
            **_algebra_fields(payload.algebra),
            "semigroup": _semigroup_block(payload.grading),
            "deg": [int(x) for x in payload.deg],
        }
    elif kind == "partial_action":
        pa: PartialAction = payload
        raw = {
            "kind": kind,
            "meta": meta,
            **_algebra_fields(pa.algebra),
            "group": _group_block(pa.group),
            "domains": [_int_rows(d.basis) for d in pa.domains],
            "maps": [_int_rows(m) for m in pa.maps],
            "units": [ [int(x) for x in u] for u in pa.units],
        }
    else:
        raise ValidationError(f"unknown instance kind: {kind!r}")
    return InstanceDocument(kind, payload, meta, raw)


def _parse_one(doc) -> InstanceDocument:
    if not isinstance(doc, dict):
        raise ValidationError("instance must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"instance kind must be one of {KINDS}, got {kind!r}")
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise ValidationError("meta must be an object")

    if kind == "semigroup":
        payload = _parse_semigroup_block(doc.get("semigroup"))
    elif kind == "group":
        payload = _parse_group_block(doc.get("group"))
    elif kind == "algebra":
        payload = _parse_algebra_fields(doc)
    elif kind == "graded_algebra":
        algebra = _parse_algebra_fields(doc)
        grading = _parse_semigroup_block(doc.get("semigroup"))
        if "deg" not in doc:
            raise ValidationError("graded instance needs a deg list")
        payload = validate_grading(algebra, grading, [int(x) for x in doc["deg"]])
    else:
        algebra = _parse_algebra_fields(doc)
        group = _parse_group_block(doc.get("group"))
        domains = doc.get("domains")
        maps = doc.get("maps")
        if not isinstance(domains, list) or not isinstance(maps, list):
            raise ValidationError("partial action needs domains and maps lists")
        field = algebra.field
        spaces = []
        for g, rows in enumerate(domains):
            rows = np.asarray(rows, dtype=np.int64).reshape(len(rows), algebra.dim) \
                if rows else np.zeros((0, algebra.dim), dtype=np.int64)
            spaces.append(Subspace.span(field, rows, algebra.dim))
        mats = [np.asarray(m, dtype=np.int64).reshape(len(m), algebra.dim)
                if m else np.zeros((0, algebra.dim), dtype=np.int64) for m in maps]
        units = doc.get("units")
        payload = validate_partial_action(group, algebra, spaces, mats, units)

    return instance_from_object(kind, payload, meta)


def parse_instances(text: str) -> list[InstanceDocument]:
    """Parse one instance object or a list of them from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ValidationError(f"not valid JSON: {ex}") from ex
    docs = data if isinstance(data, list) else [data]
    out = []
    for pos, doc in enumerate(docs):
        try:
            out.append(_parse_one(doc))
        except ValidationError as ex:
            raise ValidationError(f"instance {pos}: {ex}", witness=ex.witness) from ex
        except (ValueError, TypeError) as ex:
            raise ValidationError(f"instance {pos}: malformed data: {ex}") from ex
    return out


def serialize_instances(docs: list[InstanceDocument]) -> str:
    """Canonical JSON for a list of documents (single object stays a list)."""
    return canonical_json([doc.raw for doc in docs])
