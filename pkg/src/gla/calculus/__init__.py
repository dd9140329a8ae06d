"""Axiom schemas, constant specifications and Hilbert-style derivations."""

from .builder import BuildError, DerivationBuilder
from .derivation import (
    EMPTY_CS, RULES, CheckReport, ConstantSpecification, Derivation, InvalidProofCode, Step,
    TransformError, check_derivation, conjoin, deduction_transform, hypothesis_dependencies,
    proof_table, substitute_cs, substitute_derivation, validate_cs,
)
from .generator import random_derivation, random_formula, random_term
from .schemas import MODES, SCHEMAS, AxiomMatch, SchemaId, instantiate, match_axiom, match_schema

__all__ = [
    "AxiomMatch", "BuildError", "CheckReport", "ConstantSpecification", "Derivation",
    "DerivationBuilder", "EMPTY_CS", "InvalidProofCode", "MODES", "RULES", "SCHEMAS",
    "SchemaId", "Step", "TransformError", "check_derivation", "conjoin", "deduction_transform",
    "hypothesis_dependencies", "instantiate", "match_axiom", "match_schema", "proof_table",
    "random_derivation", "random_formula", "random_term", "substitute_cs",
    "substitute_derivation", "validate_cs",
]
