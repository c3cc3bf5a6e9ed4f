"""Canonical JSON algebra documents.

Format: {"dim": n, "labels": [...], "brackets": [{"i": i, "j": j, "v": {...}}],
"meta": {...}} with 0 <= i < j < dim, v keyed by stringified basis indices and
valued by rationals rendered "p/q" (or "p" for integers).  Unlisted pairs are
zero brackets.  Serialization is canonical: brackets sorted by (i, j), v keys
sorted numerically, UTF-8, no floats; parse ∘ serialize is the identity on
canonical documents.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .liealg import LieAlgebra


class DocumentError(ValueError):
    """Malformed algebra document."""


_RATIONAL = re.compile(r"-?\d+(/[1-9]\d*)?\Z")


def rational_str(x: Fraction) -> str:
    return str(x)


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise DocumentError(f"rational must look like 'p' or 'p/q', got {s!r}")
    return Fraction(s)


def algebra_to_document(a: LieAlgebra, meta: dict | None = None) -> dict:
    brackets = []
    for (i, j) in sorted(a.bracket):
        v = a.bracket[(i, j)]
        brackets.append(
            {"i": i, "j": j, "v": {str(k): rational_str(v[k]) for k in sorted(v)}}
        )
    doc = {"dim": a.dim, "labels": list(a.labels), "brackets": brackets}
    if meta is not None:
        doc["meta"] = meta
    return doc


def document_to_algebra(doc) -> tuple[LieAlgebra, dict]:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise DocumentError("dim must be a nonnegative integer")
    labels = doc.get("labels")
    if not isinstance(labels, list) or len(labels) != dim or not all(
        isinstance(s, str) for s in labels
    ):
        raise DocumentError("labels must be a list of dim strings")
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise DocumentError("brackets must be a list")
    table = {}
    for entry in brackets:
        if not isinstance(entry, dict) or not {"i", "j", "v"} <= set(entry):
            raise DocumentError("each bracket needs i, j and v")
        i, j, v = entry["i"], entry["j"], entry["v"]
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < dim):
            raise DocumentError(f"bracket pair ({i},{j}) violates 0 <= i < j < dim")
        if (i, j) in table:
            raise DocumentError(f"duplicate bracket pair ({i},{j})")
        if not isinstance(v, dict):
            raise DocumentError("bracket value must be an object")
        vec = {}
        for k_str, x_str in v.items():
            try:
                k = int(k_str)
            except (TypeError, ValueError) as e:
                raise DocumentError(f"bad coordinate key {k_str!r}") from e
            if not 0 <= k < dim:
                raise DocumentError(f"coordinate {k} outside dimension {dim}")
            x = parse_rational(x_str)
            if x:
                vec[k] = x
        if vec:
            table[(i, j)] = vec
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise DocumentError("meta must be an object")
    return LieAlgebra(dim, labels, table), meta


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return doc


def read_document(path: str) -> tuple[LieAlgebra, dict]:
    with open(path, encoding="utf-8") as f:
        return document_to_algebra(loads(f.read()))


def write_document(path: str, a: LieAlgebra, meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(algebra_to_document(a, meta)))
