"""Structured documents for analysis and certification results.

The JSON documents and the human-readable text are generated from the same
report values; every emitted document is validated against the schemas below.
Scalars travel as exact strings, never as floats.
"""

from __future__ import annotations

from typing import Optional

import jsonschema

from .linalg import Matrix, Subspace
from .reflections import ReflectionData
from .repkit import Representation, SimplicityVerdict
from .scalars import render_scalar
from .theoremlab import ClaimFiveTrace, HypothesisReport, TheoremReport
from .graphs import Graph

SCALAR_PATTERN = r"^-?\d+(/\d+)?([+-]\d+(/\d+)?\*sqrt\(\d+\))?$"

_SCALAR = {"type": "string", "pattern": SCALAR_PATTERN}
_VECTOR = {"type": "array", "items": _SCALAR}
_MATRIX = {"type": "array", "items": _VECTOR}
_SUBSPACE = {
    "type": "object",
    "properties": {"ambient_dim": {"type": "integer"}, "basis": _MATRIX},
    "required": ["ambient_dim", "basis"],
    "additionalProperties": False,
}
_FIELD = {
    "oneOf": [
        {"const": "Q"},
        {
            "type": "object",
            "properties": {"quadratic": {"type": "integer", "minimum": 2}},
            "required": ["quadratic"],
            "additionalProperties": False,
        },
    ]
}
_PAIR = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
_REFLECTION = {
    "type": "object",
    "properties": {
        "label": {"type": "string"},
        "alpha": _VECTOR,
        "eigenvalue": _SCALAR,
        "hyperplane": _SUBSPACE,
        "functional": _VECTOR,
    },
    "required": ["label", "alpha", "eigenvalue", "hyperplane", "functional"],
    "additionalProperties": False,
}
_SIMPLICITY = {
    "type": "object",
    "properties": {
        "status": {"enum": ["Simple", "Reducible", "Inconclusive"]},
        "commutant_dim": {"type": "integer"},
        "witness": {"oneOf": [_SUBSPACE, {"type": "null"}]},
        "semisimplicity_premise": {"enum": ["Assumed", "FromSimpleBase", "None"]},
        "method": {"type": "string"},
    },
    "required": ["status", "commutant_dim", "witness", "semisimplicity_premise"],
    "additionalProperties": False,
}
_GRAPH = {
    "type": "object",
    "properties": {
        "vertices": {"type": "array", "items": {"type": "integer"}},
        "edges": {"type": "array", "items": _PAIR},
    },
    "required": ["vertices", "edges"],
    "additionalProperties": False,
}
_TRACE = {
    "type": "object",
    "properties": {
        "d": {"type": "integer"},
        "base": {"type": "array", "items": {"type": "integer"}},
        "sequences": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "target": {"type": "array", "items": {"type": "integer"}},
                    "steps": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {
                                "removed": {"type": "integer"},
                                "added": {"type": "integer"},
                                "edge": _PAIR,
                                "before": {"type": "array", "items": {"type": "integer"}},
                                "after": {"type": "array", "items": {"type": "integer"}},
                                "note": {"type": "string"},
                            },
                            "required": ["removed", "added", "edge", "before", "after"],
                            "additionalProperties": False,
                        },
                    },
                },
                "required": ["target", "steps"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["d", "base", "sequences"],
    "additionalProperties": False,
}

THEOREM_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "schema": {"const": "reflext.theorem-report/1"},
        "source": {"type": "string"},
        "field": _FIELD,
        "dim": {"type": "integer"},
        "generator_count": {"type": "integer"},
        "labels": {"type": "array", "items": {"type": "string"}},
        "classical_mode": {"type": "boolean"},
        "hypothesis": {
            "type": "object",
            "properties": {
                "condition1": {
                    "type": "object",
                    "properties": {
                        "ok": {"type": "boolean"},
                        "failures": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "properties": {
                                    "generator": {"type": "integer"},
                                    "reason": {"type": "string"},
                                },
                                "required": ["generator", "reason"],
                                "additionalProperties": False,
                            },
                        },
                    },
                    "required": ["ok", "failures"],
                    "additionalProperties": False,
                },
                "reflections": {
                    "type": "array",
                    "items": {"oneOf": [_REFLECTION, {"type": "null"}]},
                },
                "generation_assumed": {"type": "boolean"},
                "condition3": {"oneOf": [_SIMPLICITY, {"type": "null"}]},
                "condition4": {
                    "type": "object",
                    "properties": {
                        "evaluated": {"type": "boolean"},
                        "holds": {"type": "boolean"},
                        "violations": {"type": "array", "items": _PAIR},
                    },
                    "required": ["evaluated", "holds", "violations"],
                    "additionalProperties": False,
                },
                "graph": {"oneOf": [_GRAPH, {"type": "null"}]},
                "remarks": {"type": "array", "items": {"type": "string"}},
            },
            "required": [
                "condition1",
                "reflections",
                "generation_assumed",
                "condition3",
                "condition4",
                "graph",
                "remarks",
            ],
            "additionalProperties": False,
        },
        "claims": {
            "type": "object",
            "properties": {
                "claim1_connected": {"type": ["boolean", "null"]},
                "claim2_spanning": {"type": ["boolean", "null"]},
                "n_le_k": {"type": ["boolean", "null"]},
                "claim3_subset": {
                    "oneOf": [
                        {"type": "array", "items": {"type": "integer"}},
                        {"type": "null"},
                    ]
                },
            },
            "required": ["claim1_connected", "claim2_spanning", "n_le_k", "claim3_subset"],
            "additionalProperties": False,
        },
        "per_degree": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "d": {"type": "integer"},
                    "dim": {"type": "integer"},
                    "commutant_dim": {"type": "integer"},
                    "verdict": {"enum": ["Simple", "Reducible", "Inconclusive"]},
                    "claim4": {
                        "type": "object",
                        "properties": {
                            "checked": {"type": "integer"},
                            "exhaustive": {"type": "boolean"},
                            "ok": {"type": "boolean"},
                        },
                        "required": ["checked", "exhaustive", "ok"],
                        "additionalProperties": False,
                    },
                    "witness": {"oneOf": [_SUBSPACE, {"type": "null"}]},
                    "claim5_trace": {"oneOf": [_TRACE, {"type": "null"}]},
                },
                "required": ["d", "dim", "commutant_dim", "verdict", "claim4"],
                "additionalProperties": False,
            },
        },
        "pairwise_hom": {
            "oneOf": [
                {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                {"type": "null"},
            ]
        },
        "dim_filter_ok": {"type": ["boolean", "null"]},
        "conclusion": {
            "type": "object",
            "properties": {
                "status": {"enum": ["TheoremVerified", "HypothesisFailed", "CertificationFailed"]},
                "reason": {"type": ["string", "null"]},
                "witness_subspace": {"oneOf": [_SUBSPACE, {"type": "null"}]},
                "witness_pairs": {"type": "array", "items": _PAIR},
            },
            "required": ["status", "reason", "witness_subspace", "witness_pairs"],
            "additionalProperties": False,
        },
    },
    "required": [
        "schema",
        "source",
        "field",
        "dim",
        "generator_count",
        "labels",
        "classical_mode",
        "hypothesis",
        "claims",
        "per_degree",
        "pairwise_hom",
        "dim_filter_ok",
        "conclusion",
    ],
    "additionalProperties": False,
}

ANALYZE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "schema": {"const": "reflext.analyze-report/1"},
        "source": {"type": "string"},
        "field": _FIELD,
        "dim": {"type": "integer"},
        "generator_count": {"type": "integer"},
        "generators": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "label": {"type": "string"},
                    "reflection": {"oneOf": [_REFLECTION, {"type": "null"}]},
                    "error": {"type": ["string", "null"]},
                },
                "required": ["label", "reflection", "error"],
                "additionalProperties": False,
            },
        },
        "condition4": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {
                        "holds": {"type": "boolean"},
                        "violations": {"type": "array", "items": _PAIR},
                    },
                    "required": ["holds", "violations"],
                    "additionalProperties": False,
                },
                {"type": "null"},
            ]
        },
        "graph": {"oneOf": [_GRAPH, {"type": "null"}]},
        "remarks": {"type": "array", "items": {"type": "string"}},
        "ok": {"type": "boolean"},
    },
    "required": [
        "schema",
        "source",
        "field",
        "dim",
        "generator_count",
        "generators",
        "condition4",
        "graph",
        "remarks",
        "ok",
    ],
    "additionalProperties": False,
}


def validate_theorem_document(doc: dict) -> None:
    jsonschema.validate(doc, THEOREM_SCHEMA)


def validate_analyze_document(doc: dict) -> None:
    jsonschema.validate(doc, ANALYZE_SCHEMA)


def field_doc(m: Optional[int]):
    return "Q" if m is None else {"quadratic": m}


def vector_doc(v) -> list[str]:
    return [render_scalar(x) for x in v]


def matrix_doc(m: Matrix) -> list[list[str]]:
    return [vector_doc(m.row(i)) for i in range(m.rows)]


def subspace_doc(s: Optional[Subspace]):
    if s is None:
        return None
    return {"ambient_dim": s.ambient_dim, "basis": matrix_doc(s.basis)}


def reflection_doc(r: Optional[ReflectionData], label: str):
    if r is None:
        return None
    return {
        "label": label,
        "alpha": vector_doc(r.alpha),
        "eigenvalue": render_scalar(r.eigenvalue),
        "hyperplane": subspace_doc(r.hyperplane),
        "functional": vector_doc(r.functional),
    }


def simplicity_doc(v: Optional[SimplicityVerdict]):
    if v is None:
        return None
    return {
        "status": v.status,
        "commutant_dim": v.commutant_dim,
        "witness": subspace_doc(v.witness),
        "semisimplicity_premise": v.semisimplicity_premise,
        "method": v.method,
    }


def graph_doc(g: Optional[Graph]):
    if g is None:
        return None
    return {"vertices": list(g.vertices), "edges": sorted(list(e) for e in g.edges)}


def trace_doc(t: Optional[ClaimFiveTrace]):
    if t is None:
        return None
    return {
        "d": t.degree,
        "base": list(t.base),
        "sequences": [
            {
                "target": list(seq.target),
                "steps": [
                    {
                        "removed": st.removed,
                        "added": st.added,
                        "edge": list(st.edge),
                        "before": list(st.before),
                        "after": list(st.after),
                        "note": (
                            f"wedge coefficient of {set(st.before)} equals that of "
                            f"{set(st.after)} via edge {st.edge}"
                        ),
                    }
                    for st in seq.steps
                ],
            }
            for seq in t.sequences
        ],
    }


def hypothesis_doc(h: HypothesisReport, labels) -> dict:
    return {
        "condition1": {
            "ok": h.condition1_ok,
            "failures": [{"generator": i, "reason": why} for i, why in h.condition1_failures],
        },
        "reflections": [
            reflection_doc(r, labels[i]) for i, r in enumerate(h.reflections)
        ],
        "generation_assumed": h.generation_assumed,
        "condition3": simplicity_doc(h.v_simple),
        "condition4": {
            "evaluated": h.condition4_evaluated,
            "holds": h.condition4_holds,
            "violations": [list(p) for p in h.condition4_violations],
        },
        "graph": graph_doc(h.graph),
        "remarks": list(h.remarks),
    }


def theorem_document(report: TheoremReport, rep: Representation, source: str) -> dict:
    doc = {
        "schema": "reflext.theorem-report/1",
        "source": source,
        "field": field_doc(rep.field()),
        "dim": rep.dim,
        "generator_count": len(rep.generators),
        "labels": list(rep.labels),
        "classical_mode": report.classical_mode,
        "hypothesis": hypothesis_doc(report.hypothesis, rep.labels),
        "claims": {
            "claim1_connected": report.claim1_connected,
            "claim2_spanning": report.claim2_spanning,
            "n_le_k": report.n_le_k,
            "claim3_subset": list(report.claim3_subset) if report.claim3_subset else None,
        },
        "per_degree": [
            {
                "d": dr.degree,
                "dim": dr.space_dim,
                "commutant_dim": dr.commutant_dim,
                "verdict": dr.verdict,
                "claim4": {
                    "checked": dr.claim4_checked,
                    "exhaustive": dr.claim4_exhaustive,
                    "ok": dr.claim4_ok,
                },
                "witness": subspace_doc(dr.witness),
                "claim5_trace": trace_doc(dr.claim5_trace),
            }
            for dr in report.per_degree
        ],
        "pairwise_hom": [list(row) for row in report.pairwise_hom]
        if report.pairwise_hom is not None
        else None,
        "dim_filter_ok": report.dim_filter_ok,
        "conclusion": {
            "status": report.conclusion.status,
            "reason": report.conclusion.reason,
            "witness_subspace": subspace_doc(report.conclusion.witness_subspace),
            "witness_pairs": [list(p) for p in report.conclusion.witness_pairs],
        },
    }
    validate_theorem_document(doc)
    return doc


def analyze_document(rep: Representation, hyp: HypothesisReport, source: str) -> dict:
    gens = []
    failure_reasons = dict(hyp.condition1_failures)
    for i, r in enumerate(hyp.reflections):
        gens.append(
            {
                "label": rep.labels[i],
                "reflection": reflection_doc(r, rep.labels[i]),
                "error": failure_reasons.get(i + 1),
            }
        )
    doc = {
        "schema": "reflext.analyze-report/1",
        "source": source,
        "field": field_doc(rep.field()),
        "dim": rep.dim,
        "generator_count": len(rep.generators),
        "generators": gens,
        "condition4": {
            "holds": hyp.condition4_holds,
            "violations": [list(p) for p in hyp.condition4_violations],
        }
        if hyp.condition4_evaluated
        else None,
        "graph": graph_doc(hyp.graph),
        "remarks": list(hyp.remarks),
        "ok": hyp.condition1_ok and hyp.condition4_holds,
    }
    validate_analyze_document(doc)
    return doc


def _matrix_lines(rows: list[list[str]], indent: str = "    ") -> list[str]:
    if not rows:
        return [indent + "(zero subspace)"]
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    return [
        indent + "[ " + "  ".join(e.rjust(w) for e, w in zip(r, widths)) + " ]"
        for r in rows
    ]


def render_analyze_text(doc: dict) -> str:
    lines = [f"analysis of {doc['source']}  (dim {doc['dim']}, field {doc['field']})"]
    for g in doc["generators"]:
        if g["error"]:
            lines.append(f"  {g['label']}: NOT a reflection -- {g['error']}")
            continue
        r = g["reflection"]
        lines.append(
            f"  {g['label']}: reflection, alpha = ({', '.join(r['alpha'])}), "
            f"eigenvalue = {r['eigenvalue']}"
        )
        lines.append("    hyperplane basis:")
        lines.extend(_matrix_lines(r["hyperplane"]["basis"], "      "))
    c4 = doc["condition4"]
    if c4 is not None:
        if c4["holds"]:
            lines.append("  condition 4 holds (non-fixing relation is symmetric)")
            g = doc["graph"]
            edge_text = ", ".join("{%d,%d}" % tuple(e) for e in g["edges"]) or "(none)"
            lines.append(f"  graph: vertices {list(g['vertices'])}, edges {edge_text}")
        else:
            for i, j in c4["violations"]:
                lines.append(
                    f"  condition 4 VIOLATED: generator {i} moves alpha_{j} "
                    f"but generator {j} fixes alpha_{i}"
                )
    for remark in doc["remarks"]:
        lines.append(f"  note: {remark}")
    return "\n".join(lines)


def render_theorem_text(doc: dict) -> str:
    lines = [
        f"certification of {doc['source']}  "
        f"(dim {doc['dim']}, {doc['generator_count']} generators, field {doc['field']})"
    ]
    if doc["classical_mode"]:
        lines.append("  classical setting: reflection vectors form a basis")
    hyp = doc["hypothesis"]
    if not hyp["condition1"]["ok"]:
        for f in hyp["condition1"]["failures"]:
            lines.append(f"  condition 1 FAILED: generator {f['generator']}: {f['reason']}")
    else:
        lines.append("  condition 1: all generators are generalized reflections")
        c3 = hyp["condition3"]
        lines.append(
            f"  condition 3: base representation {c3['status']} "
            f"(commutant dim {c3['commutant_dim']}, method {c3['method']})"
        )
        c4 = hyp["condition4"]
        if c4["holds"]:
            lines.append("  condition 4: holds")
        else:
            lines.append(f"  condition 4: VIOLATED at pairs {c4['violations']}")
    claims = doc["claims"]
    if claims["claim1_connected"] is not None:
        lines.append(f"  graph connected: {claims['claim1_connected']}")
    if claims["claim3_subset"] is not None:
        lines.append(f"  connected basis subset: {claims['claim3_subset']}")
    if doc["per_degree"]:
        lines.append("  degree  dim  commutant  verdict   minus-intersections checked")
        for dr in doc["per_degree"]:
            c4s = dr["claim4"]
            suffix = "exhaustive" if c4s["exhaustive"] else "sampled"
            ok = "ok" if c4s["ok"] else "FAILED"
            lines.append(
                f"    {dr['d']:>3} {dr['dim']:>5} {dr['commutant_dim']:>9}  "
                f"{dr['verdict']:<9} {c4s['checked']} ({suffix}, {ok})"
            )
    if doc["pairwise_hom"] is not None:
        lines.append("  hom-space dimensions between exterior powers:")
        for row in doc["pairwise_hom"]:
            lines.append("    " + "  ".join(str(v) for v in row))
    for dr in doc["per_degree"]:
        t = dr["claim5_trace"]
        if t and t["sequences"]:
            lines.append(f"  move trace for d={t['d']} (base {t['base']}):")
            for seq in t["sequences"]:
                chain = " -> ".join(
                    ["{" + ",".join(map(str, t["base"])) + "}"]
                    + ["{" + ",".join(map(str, st["after"])) + "}" for st in seq["steps"]]
                )
                lines.append(f"    to {seq['target']}: {chain}")
    concl = doc["conclusion"]
    lines.append(f"  conclusion: {concl['status']}")
    if concl["reason"]:
        lines.append(f"    reason: {concl['reason']}")
    if concl["witness_subspace"] is not None:
        lines.append("    witness subspace basis:")
        lines.extend(_matrix_lines(concl["witness_subspace"]["basis"], "      "))
    if concl["witness_pairs"]:
        lines.append(f"    witness pairs: {concl['witness_pairs']}")
    for remark in hyp.get("remarks", []):
        lines.append(f"  note: {remark}")
    return "\n".join(lines)
