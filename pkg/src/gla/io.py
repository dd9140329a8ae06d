"""JSON encodings for derivations, constant specifications, models and results."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .calculus import ConstantSpecification, Derivation, SchemaId, Step
from .decide import GLProof, NonTheorem, Theorem, Unknown
from .semantics import KripkeModel
from .syntax import Const, parse_formula, parse_term, print_formula, print_term

__all__ = [
    "FormatError", "read_json", "write_json",
    "derivation_to_json", "derivation_from_json", "cs_to_json", "cs_from_json",
    "model_to_json", "model_from_json", "verdict_to_json", "lift_result_to_json", "load_derivation", "load_cs",
    "load_model",
]


class FormatError(ValueError):
    pass


def read_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path: str | Path, data: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def derivation_to_json(d: Derivation) -> dict:
    steps = []
    for s in d.steps:
        row: dict[str, Any] = {"formula": print_formula(s.formula), "rule": s.rule}
        if s.schema is not None:
            row["schema"] = s.schema.value
        if s.constant is not None:
            row["constant"] = s.constant
        if s.refs:
            row["from"] = list(s.refs)
        steps.append(row)
    return {"mode": d.mode, "hypotheses": [print_formula(h) for h in d.hypotheses],
            "steps": steps}


def derivation_from_json(data: dict) -> Derivation:
    if not isinstance(data, dict):
        raise FormatError("a derivation must be a JSON object")
    try:
        steps = []
        for row in data["steps"]:
            schema = row.get("schema")
            steps.append(Step(
                parse_formula(row["formula"]),
                row["rule"],
                tuple(int(i) for i in row.get("from", ())),
                SchemaId(schema) if schema is not None else None,
                row.get("constant"),
            ))
        hyps = tuple(parse_formula(h) for h in data.get("hypotheses", ()))
        return Derivation(tuple(steps), hyps, data.get("mode", "GLA"))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed derivation: {exc!r}") from exc


def cs_to_json(cs: ConstantSpecification) -> dict:
    return {"entries": [{"constant": c.name, "axiom": print_formula(a)} for c, a in cs]}


def cs_from_json(data: dict) -> ConstantSpecification:
    if isinstance(data, dict) and "cs" in data and "entries" not in data:
        data = data["cs"]  # the CS inside a lift result file
    if not isinstance(data, dict):
        raise FormatError("a constant specification must be a JSON object")
    try:
        pairs = []
        for row in data.get("entries", ()):
            term = parse_term(row["constant"])
            if not isinstance(term, Const):
                raise FormatError(f"{row['constant']!r} is not a proof constant")
            pairs.append((term, parse_formula(row["axiom"])))
        return ConstantSpecification.of(pairs)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed constant specification: {exc!r}") from exc


def model_to_json(m: KripkeModel) -> dict:
    order = {w: i for i, w in enumerate(m.worlds)}
    return {
        "worlds": list(m.worlds),
        "root": m.root,
        "rel": [list(p) for p in sorted(m.rel, key=lambda p: (order[p[0]], order[p[1]]))],
        "val": {k: sorted(v, key=order.get) for k, v in m.valuation.items()},
        "evidence": sorted([print_term(t), print_formula(f)] for t, f in m.evidence_seed),
    }


def model_from_json(data: dict) -> KripkeModel:
    if not isinstance(data, dict):
        raise FormatError("a model must be a JSON object")
    try:
        return KripkeModel(
            tuple(str(w) for w in data["worlds"]),
            frozenset((str(u), str(v)) for u, v in data.get("rel", ())),
            str(data["root"]),
            {k: frozenset(str(w) for w in v) for k, v in data.get("val", {}).items()},
            frozenset((parse_term(t), parse_formula(f)) for t, f in data.get("evidence", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed model: {exc!r}") from exc


def verdict_to_json(v: Theorem | NonTheorem | Unknown) -> dict:
    if isinstance(v, Theorem):
        cert = v.certificate
        if isinstance(cert, Derivation):
            cert = derivation_to_json(cert)
        elif isinstance(cert, GLProof):
            cert = cert.to_json()
        return {"verdict": v.category, "source": v.source, "certificate": cert}
    if isinstance(v, NonTheorem):
        return {"verdict": v.category, "failing_world": v.failing_world,
                "model": model_to_json(v.model)}
    return {"verdict": v.category, "exhausted": v.exhausted}


def lift_result_to_json(r) -> dict:
    return {"term": print_term(r.term), "cs": cs_to_json(r.extended_cs),
            "witness": derivation_to_json(r.witness)}


def load_derivation(path: str | Path) -> Derivation:
    """A derivation file, or the witness inside a lift result file."""
    data = read_json(path)
    if isinstance(data, dict) and "witness" in data:
        data = data["witness"]
    return derivation_from_json(data)


def load_cs(path: str | Path | None) -> ConstantSpecification:
    if path is None:
        return ConstantSpecification()
    return cs_from_json(read_json(path))


def load_model(path: str | Path) -> KripkeModel:
    return model_from_json(read_json(path))
