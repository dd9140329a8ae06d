"""Seeded generators for formulas, terms and valid derivations (test corpus)."""

from __future__ import annotations

import random

from ..syntax import (
    And, App, Atom, Bang, Box, FALSUM, Formula, Imp, Neg, Or, Proof, ProofTerm, Sum, Var,
)
from .builder import DerivationBuilder
from .derivation import ConstantSpecification, Derivation, EMPTY_CS
from .schemas import SchemaId, schemas_for_mode

__all__ = ["random_formula", "random_term", "random_derivation"]

LETTERS = ("P", "Q")
VARIABLES = ("x", "y")


def random_term(rng: random.Random, depth: int = 1, variables=VARIABLES,
                constants=()) -> ProofTerm:
    leaves = [Var(v) for v in variables] + list(constants)
    if depth <= 0 or rng.random() < 0.6:
        return rng.choice(leaves)
    kind = rng.randrange(3)
    if kind == 0:
        return Bang(random_term(rng, depth - 1, variables, constants))
    make = App if kind == 1 else Sum
    return make(random_term(rng, depth - 1, variables, constants),
                random_term(rng, depth - 1, variables, constants))


def random_formula(rng: random.Random, depth: int = 2, letters=LETTERS, variables=VARIABLES,
                   constants=(), modal: bool = True, explicit: bool = True,
                   term_depth: int = 1) -> Formula:
    """Random formula of height at most ``depth``."""
    if depth <= 0 or rng.random() < 0.25:
        return FALSUM if rng.random() < 0.1 else Atom(rng.choice(letters))
    kinds = ["neg", "and", "or", "imp"]
    if modal:
        kinds.append("box")
    if explicit:
        kinds.append("proof")
    kind = rng.choice(kinds)

    def sub() -> Formula:
        return random_formula(rng, depth - 1, letters, variables, constants, modal, explicit,
                              term_depth)

    if kind == "neg":
        return Neg(sub())
    if kind == "box":
        return Box(sub())
    if kind == "proof":
        return Proof(random_term(rng, term_depth, variables, constants), sub())
    make = {"and": And, "or": Or, "imp": Imp}[kind]
    return make(sub(), sub())


class _Sampler:
    def __init__(self, rng: random.Random, builder: DerivationBuilder,
                 cs: ConstantSpecification):
        self.rng = rng
        self.b = builder
        self.cs = list(cs)
        self.schemas = schemas_for_mode(builder.mode)

    def formula(self) -> Formula:
        return random_formula(self.rng, 1, modal=self.b.mode != "LP",
                              explicit=self.b.mode != "GL", term_depth=0)

    def term(self) -> ProofTerm:
        return random_term(self.rng, 0)

    def axiom(self) -> Formula:
        if self.cs and self.b.mode == "GLA" and self.rng.random() < 0.25:
            c, a = self.rng.choice(self.cs)
            return self.b.cs_entry(Proof(c, a))
        sid = self.rng.choice(self.schemas)
        env = {"A": self.formula(), "B": self.formula(), "C": self.formula(),
               "s": self.term(), "t": self.term()}
        variant = self.rng.randrange(2) if sid is SchemaId.LP3 else 0
        return self.b.schema(sid, variant, **env)

    def majors(self, x: Formula) -> list[tuple[SchemaId, int, dict]]:
        """Axiom instances whose antecedent is exactly ``x``."""
        f, t = self.formula, self.term
        out = [(SchemaId.P1, 0, {"A": x, "B": f()}),
               (SchemaId.P5, 0, {"A": x, "B": f()}),
               (SchemaId.P6, 0, {"A": x, "B": f()}),
               (SchemaId.P7, 0, {"A": f(), "B": x})]
        if isinstance(x, Imp):
            out += [(SchemaId.P2, 0, {"A": x.left, "B": x.right, "C": f()}),
                    (SchemaId.P8, 0, {"A": x.left, "B": f(), "C": x.right}),
                    (SchemaId.P9, 0, {"A": x.left, "B": x.right})]
        if isinstance(x, And):
            out += [(SchemaId.P3, 0, {"A": x.left, "B": x.right}),
                    (SchemaId.P4, 0, {"A": x.left, "B": x.right})]
        if isinstance(x, Neg) and isinstance(x.body, Neg):
            out.append((SchemaId.P10, 0, {"A": x.body.body}))
        if isinstance(x, Box):
            out.append((SchemaId.GL2, 0, {"A": x.body}))
            if isinstance(x.body, Imp):
                out.append((SchemaId.GL1, 0, {"A": x.body.left, "B": x.body.right}))
                if isinstance(x.body.left, Box) and x.body.left.body == x.body.right:
                    out.append((SchemaId.GL3, 0, {"A": x.body.right}))
        if isinstance(x, Proof):
            env = {"t": x.term, "A": x.body}
            out += [(SchemaId.LP2, 0, env), (SchemaId.LP4, 0, env), (SchemaId.C1, 0, env),
                    (SchemaId.LP3, 0, {"s": x.term, "t": t(), "A": x.body}),
                    (SchemaId.LP3, 1, {"s": t(), "t": x.term, "A": x.body})]
            if isinstance(x.body, Box):
                out.append((SchemaId.C3, 0, {"t": x.term, "A": x.body.body}))
            if isinstance(x.body, Imp):
                out.append((SchemaId.LP1, 0, {"s": x.term, "t": t(), "A": x.body.left,
                                              "B": x.body.right}))
        if isinstance(x, Neg) and isinstance(x.body, Proof):
            out.append((SchemaId.C2, 0, {"t": x.body.term, "A": x.body.body}))
        return [m for m in out if m[0] in self.schemas]

    def derive(self, depth: int) -> Formula:
        if depth <= 1:
            return self.axiom()
        rules = ["mp", "mp", "conj", "nec", "refl", "axiom"]
        if self.b.mode == "LP":
            rules = ["mp", "mp", "conj", "axiom"]
        rule = self.rng.choice(rules)
        if rule == "axiom":
            return self.axiom()
        x = self.derive(depth - 1)
        if rule == "conj":
            y = self.derive(depth - 1)
            self.b.schema(SchemaId.P5, A=x, B=y)
            return self.b.mp(self.b.mp(Imp(x, Imp(y, And(x, y)))))
        if rule == "nec":
            return self.b.nec(x)
        if rule == "refl" and isinstance(x, Box):
            return self.b.refl(x)
        if isinstance(x, Imp) and self.b.has(x.left) and self.rng.random() < 0.5:
            return self.b.mp(x)
        sid, variant, env = self.rng.choice(self.majors(x))
        return self.b.mp(self.b.schema(sid, variant, **env))


def random_derivation(seed: int, depth: int = 3, cs: ConstantSpecification = EMPTY_CS,
                      mode: str = "GLA") -> Derivation:
    """A checking, hypothesis-free derivation; deterministic in ``seed``.

    ``depth`` bounds the nesting of rule applications: depth 1 yields a
    single axiom (or CS) line.
    """
    rng = random.Random(seed)
    b = DerivationBuilder(mode=mode, cs=cs)
    conclusion = _Sampler(rng, b, cs).derive(depth)
    return b.build(conclusion)
