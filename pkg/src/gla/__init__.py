"""Workbench for GLA: provability logic GL extended with explicit proof terms."""

from .calculus import (
    ConstantSpecification, Derivation, SchemaId, Step, check_derivation, conjoin,
    deduction_transform, match_axiom, proof_table, random_derivation, validate_cs,
)
from .decide import (
    NonTheorem, SearchConfig, Theorem, Unknown, closure_set, countermodel_search, decide,
    decide_gl,
)
from .internalize import LiftResult, explicit_lob, lift, nec_term, refl_term
from .semantics import KripkeModel, evidence_holds, forces, h_set, holds_in_model, validate_model
from .syntax import ParseError, parse_formula, parse_term, print_formula, print_term

__all__ = [
    "ConstantSpecification", "Derivation", "SchemaId", "Step", "check_derivation", "conjoin",
    "deduction_transform", "match_axiom", "proof_table", "random_derivation", "validate_cs",
    "NonTheorem", "SearchConfig", "Theorem", "Unknown", "closure_set", "countermodel_search",
    "decide", "decide_gl",
    "LiftResult", "explicit_lob", "lift", "nec_term", "refl_term",
    "KripkeModel", "evidence_holds", "forces", "h_set", "holds_in_model", "validate_model",
    "ParseError", "parse_formula", "parse_term", "print_formula", "print_term",
]
