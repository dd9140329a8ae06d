"""Axiom schemas of GLA_∅ and schema matching."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from ..syntax import (
    Atom, Bang, Box, Const, Falsum, Formula, Neg, Proof, ProofTerm, Var, parse_formula,
)

__all__ = ["SchemaId", "SCHEMAS", "AxiomMatch", "match_axiom", "match_schema",
           "instantiate", "schemas_for_mode", "MODES"]

MODES = ("GLA", "GL", "LP")


class SchemaId(str, enum.Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"
    P8 = "P8"
    P9 = "P9"
    P10 = "P10"
    GL1 = "GL1"
    GL2 = "GL2"
    GL3 = "GL3"
    LP1 = "LP1"
    LP2 = "LP2"
    LP3 = "LP3"
    LP4 = "LP4"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"

    def __str__(self) -> str:
        return self.value

    @property
    def family(self) -> str:
        return self.value.rstrip("0123456789")


# Upper-case letters are formula metavariables, s/t are term metavariables.
_PATTERNS = {
    SchemaId.P1: ["A -> (B -> A)"],
    SchemaId.P2: ["(A -> B) -> ((A -> (B -> C)) -> (A -> C))"],
    SchemaId.P3: ["A & B -> A"],
    SchemaId.P4: ["A & B -> B"],
    SchemaId.P5: ["A -> (B -> A & B)"],
    SchemaId.P6: ["A -> A | B"],
    SchemaId.P7: ["B -> A | B"],
    SchemaId.P8: ["(A -> C) -> ((B -> C) -> (A | B -> C))"],
    SchemaId.P9: ["(A -> B) -> ((A -> ~B) -> ~A)"],
    SchemaId.P10: ["~~A -> A"],
    SchemaId.GL1: ["[](A -> B) -> ([]A -> []B)"],
    SchemaId.GL2: ["[]A -> [][]A"],
    SchemaId.GL3: ["[]([]A -> A) -> []A"],
    SchemaId.LP1: ["s:(A -> B) -> (t:A -> (s*t):B)"],
    SchemaId.LP2: ["t:A -> !t:(t:A)"],
    SchemaId.LP3: ["s:A -> (s+t):A", "t:A -> (s+t):A"],
    SchemaId.LP4: ["t:A -> A"],
    SchemaId.C1: ["t:A -> []A"],
    SchemaId.C2: ["~t:A -> []~t:A"],
    SchemaId.C3: ["t:[]A -> A"],
}

SCHEMAS: Mapping[SchemaId, tuple[Formula, ...]] = MappingProxyType(
    {sid: tuple(parse_formula(p) for p in pats) for sid, pats in _PATTERNS.items()}
)


def schemas_for_mode(mode: str) -> tuple[SchemaId, ...]:
    if mode not in MODES:
        raise ValueError(f"unknown logic mode {mode!r}")
    allowed = {"GLA": {"P", "GL", "LP", "C"}, "GL": {"P", "GL"}, "LP": {"P", "LP"}}[mode]
    return tuple(s for s in SchemaId if s.family in allowed)


@dataclass(frozen=True)
class AxiomMatch:
    schema: SchemaId
    bindings: Mapping[str, object] = field(default_factory=dict, compare=False)


def _match_term(pat: ProofTerm, t: ProofTerm, env: dict) -> bool:
    if isinstance(pat, (Var, Const)):
        key = "term:" + pat.name
        if key in env:
            return env[key] == t
        env[key] = t
        return True
    if type(pat) is not type(t):
        return False
    if isinstance(pat, Bang):
        return _match_term(pat.inner, t.inner, env)
    return _match_term(pat.left, t.left, env) and _match_term(pat.right, t.right, env)


def _match(pat: Formula, f: Formula, env: dict) -> bool:
    if isinstance(pat, Atom):
        if pat.name in env:
            return env[pat.name] == f
        env[pat.name] = f
        return True
    if type(pat) is not type(f):
        return False
    if isinstance(pat, Falsum):
        return True
    if isinstance(pat, (Neg, Box)):
        return _match(pat.body, f.body, env)
    if isinstance(pat, Proof):
        return _match_term(pat.term, f.term, env) and _match(pat.body, f.body, env)
    return _match(pat.left, f.left, env) and _match(pat.right, f.right, env)


def match_schema(f: Formula, schema: SchemaId) -> dict | None:
    """Bindings if ``f`` instantiates one of ``schema``'s patterns."""
    for pat in SCHEMAS[schema]:
        env: dict = {}
        if _match(pat, f, env):
            return {k.removeprefix("term:"): v for k, v in env.items()}
    return None


def match_axiom(f: Formula, mode: str = "GLA") -> AxiomMatch | None:
    """Least schema (in enumeration order) that ``f`` instantiates."""
    for sid in schemas_for_mode(mode):
        env = match_schema(f, sid)
        if env is not None:
            return AxiomMatch(sid, MappingProxyType(env))
    return None


def _inst_term(pat: ProofTerm, env: Mapping) -> ProofTerm:
    if isinstance(pat, (Var, Const)):
        return env[pat.name]
    if isinstance(pat, Bang):
        return Bang(_inst_term(pat.inner, env))
    return type(pat)(_inst_term(pat.left, env), _inst_term(pat.right, env))


def instantiate(schema: SchemaId, variant: int = 0, **env) -> Formula:
    """Build a schema instance; formula metas A, B, C and term metas s, t."""

    def go(p: Formula) -> Formula:
        if isinstance(p, Atom):
            return env[p.name]
        if isinstance(p, Falsum):
            return p
        if isinstance(p, (Neg, Box)):
            return type(p)(go(p.body))
        if isinstance(p, Proof):
            return Proof(_inst_term(p.term, env), go(p.body))
        return type(p)(go(p.left), go(p.right))

    return go(SCHEMAS[schema][variant])
