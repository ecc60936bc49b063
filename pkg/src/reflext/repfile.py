"""Representation files: JSON documents with exact scalar strings.

    {
      "field": "Q"                      (or {"quadratic": 5}),
      "dim": 2,
      "generators": [
        {"label": "s1", "matrix": [["-1", "1"], ["0", "1"]]},
        {"label": "s2", "matrix": [["1", "0"], ["1", "-1"]]}
      ]
    }
"""

from __future__ import annotations

import json
from typing import Any

from .errors import (
    EmptyGeneratorList,
    FieldMismatch,
    LengthMismatch,
    ParseError,
    SingularMatrix,
)
from .linalg import Matrix
from .repkit import Representation
from .reports import field_doc, matrix_doc
from .scalars import field_tag, parse_scalar, validate_radicand


def parse_field(spec: Any) -> int | None:
    if spec == "Q":
        return None
    if isinstance(spec, dict) and set(spec) == {"quadratic"}:
        try:
            return validate_radicand(spec["quadratic"])
        except ParseError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"field must be \"Q\" or {{\"quadratic\": m}}, got {spec!r}")


def representation_from_document(doc: Any) -> Representation:
    if not isinstance(doc, dict):
        raise ParseError("representation document must be a JSON object")
    missing = {"field", "dim", "generators"} - set(doc)
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    m = parse_field(doc["field"])
    n = doc["dim"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"dim must be a positive integer, got {n!r}")
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise ParseError("generators must be a nonempty list")
    matrices = []
    labels = []
    for idx, g in enumerate(gens, start=1):
        if not isinstance(g, dict) or "matrix" not in g:
            raise ParseError(f"generator {idx} must be an object with a 'matrix'")
        labels.append(str(g.get("label", f"s{idx}")))
        rows = g["matrix"]
        if (
            not isinstance(rows, list)
            or len(rows) != n
            or any(not isinstance(r, list) or len(r) != n for r in rows)
        ):
            raise ParseError(f"generator {idx}: matrix must be {n}x{n}")
        entries = []
        for r in rows:
            for e in r:
                if not isinstance(e, str):
                    raise ParseError(
                        f"generator {idx}: entries must be scalar strings, got {e!r}"
                    )
                value = parse_scalar(e)
                tag = field_tag(value)
                if tag is not None and tag != m:
                    raise ParseError(
                        f"generator {idx}: entry {e!r} lives outside the declared field"
                    )
                entries.append(value)
        matrices.append(Matrix(n, n, entries))
    try:
        return Representation(matrices, labels)
    except (SingularMatrix, LengthMismatch, EmptyGeneratorList, FieldMismatch) as exc:
        raise ParseError(f"invalid representation: {exc}") from None


def load_repfile(path: str) -> Representation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    return representation_from_document(doc)


def representation_to_document(rep: Representation) -> dict:
    return {
        "field": field_doc(rep.field()),
        "dim": rep.dim,
        "generators": [
            {"label": label, "matrix": matrix_doc(g)}
            for label, g in zip(rep.labels, rep.generators)
        ],
    }
