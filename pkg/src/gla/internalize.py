"""Constructive internalization: from a derivation of F to a derivation of p:F."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .calculus import (
    ConstantSpecification, Derivation, DerivationBuilder, EMPTY_CS, SchemaId, instantiate,
)
from .syntax import App, Bang, Box, Const, Formula, Imp, Proof, ProofTerm, Var, subformulas, subterms

__all__ = ["LiftResult", "LiftError", "FreshConstants", "nec_term", "refl_term", "lift",
           "explicit_lob", "term_size"]


class LiftError(ValueError):
    pass


@dataclass(frozen=True)
class LiftResult:
    term: ProofTerm
    extended_cs: ConstantSpecification
    witness: Derivation
    next_fresh: int = 1


class FreshConstants:
    """Supply of constants ``<prefix>1, <prefix>2, ...`` avoiding taken names."""

    def __init__(self, taken: Iterable[str] = (), prefix: str = "k", start: int = 1):
        if not prefix or not prefix[0].islower() or prefix[0] in "uvwxyz":
            raise ValueError(f"prefix {prefix!r} cannot start a proof constant")
        self.taken = set(taken)
        self.prefix = prefix
        self.counter = start

    def __call__(self) -> Const:
        while True:
            name = f"{self.prefix}{self.counter}"
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return Const(name)


def term_size(t: ProofTerm) -> int:
    return sum(1 for _ in subterms(t))


def _constant_names(formulas: Iterable[Formula]) -> set[str]:
    names = set()
    for f in formulas:
        for g in subformulas(f):
            if isinstance(g, Proof):
                names.update(s.name for s in subterms(g.term) if isinstance(s, Const))
    return names


class _Internalizer:
    def __init__(self, cs: ConstantSpecification, fresh: FreshConstants,
                 names: Mapping[Formula, str] | None = None):
        self.cs = cs
        self.fresh = fresh
        self.names = dict(names or {})
        self.b = DerivationBuilder(cs=cs)

    def specify(self, axiom: Formula) -> Const:
        """Constant certifying ``axiom``; reused if one already exists."""
        c = self.cs.constant_for(axiom)
        if c is None:
            c = Const(self.names[axiom]) if axiom in self.names else self.fresh()
            self.cs = self.cs.with_entry(c, axiom)
        self.b.cs_entry(Proof(c, axiom))
        return c

    def _lift_rule(self, p: ProofTerm, f: Formula, axiom: Formula, schema: SchemaId,
                   target: Formula) -> ProofTerm:
        # axiom:  p:f -> target  (C1 or C3);  certified by a constant k
        self.b.axiom(axiom, schema)
        k = self.specify(axiom)
        pf = Proof(p, f)
        checker = self.b.schema(SchemaId.LP2, t=p, A=f)
        app = self.b.schema(SchemaId.LP1, s=k, t=Bang(p), A=pf, B=target)
        step4 = self.b.mp(app)
        self.b.hs(checker, step4)
        return App(k, Bang(p))

    def nec(self, p: ProofTerm, f: Formula) -> ProofTerm:
        """Adds ``p:f -> (k*!p):[]f``."""
        return self._lift_rule(p, f, Imp(Proof(p, f), Box(f)), SchemaId.C1, Box(f))

    def refl(self, p: ProofTerm, f: Formula) -> ProofTerm:
        """Adds ``p:[]f -> (k*!p):f``."""
        return self._lift_rule(p, Box(f), Imp(Proof(p, Box(f)), f), SchemaId.C3, f)

    def result(self, term: ProofTerm, conclusion: Formula) -> LiftResult:
        return LiftResult(term, self.cs, self.b.build(conclusion), self.fresh.counter)


def _supply(cs: ConstantSpecification, formulas: Iterable[Formula], prefix: str,
            start: int) -> FreshConstants:
    return FreshConstants(cs.constants() | _constant_names(formulas), prefix, start)


def nec_term(p: ProofTerm, f: Formula, cs: ConstantSpecification = EMPTY_CS,
             constant: str | None = None, prefix: str = "k", start: int = 1) -> LiftResult:
    """Internalized necessitation: witness of ``p:f -> (a*!p):[]f``."""
    axiom = Imp(Proof(p, f), Box(f))
    names = {axiom: constant} if constant else {}
    lifter = _Internalizer(cs, _supply(cs, [axiom], prefix, start), names)
    t = lifter.nec(p, f)
    return lifter.result(t, Imp(Proof(p, f), Proof(t, Box(f))))


def refl_term(p: ProofTerm, f: Formula, cs: ConstantSpecification = EMPTY_CS,
              constant: str | None = None, prefix: str = "k", start: int = 1) -> LiftResult:
    """Internalized reflection: witness of ``p:[]f -> (b*!p):f``."""
    axiom = Imp(Proof(p, Box(f)), f)
    names = {axiom: constant} if constant else {}
    lifter = _Internalizer(cs, _supply(cs, [axiom], prefix, start), names)
    s = lifter.refl(p, f)
    return lifter.result(s, Imp(Proof(p, Box(f)), Proof(s, f)))


def lift(d: Derivation, cs: ConstantSpecification = EMPTY_CS, prefix: str = "k",
         start: int = 1) -> LiftResult:
    """Turn a hypothesis-free derivation of F into a derivation of p:F.

    Axioms get fresh constants, CS lines are lifted with the proof checker,
    modus ponens with application, and Nec/Refl with the two internalized
    rule constructions. Identical axioms share one constant.
    """
    if d.hypotheses:
        raise LiftError("cannot internalize a derivation with hypotheses")
    lifter = _Internalizer(cs, _supply(cs, (s.formula for s in d.steps), prefix, start))
    b = lifter.b
    terms: list[ProofTerm] = []
    for n, step in enumerate(d.steps, start=1):
        f = step.formula
        if step.rule == "Axiom":
            t = lifter.specify(f)
        elif step.rule == "CS":
            b.cs_entry(f)
            b.mp(b.schema(SchemaId.LP2, t=f.term, A=f.body))
            t = Bang(f.term)
        elif step.rule == "MP":
            i, j = step.refs
            major, minor = d.steps[i - 1].formula, d.steps[j - 1].formula
            app = instantiate(SchemaId.LP1, s=terms[i - 1], t=terms[j - 1], A=minor, B=f)
            b.axiom(app, SchemaId.LP1)
            b.mp(b.mp(app))
            t = App(terms[i - 1], terms[j - 1])
            assert major == Imp(minor, f)
        elif step.rule == "Nec":
            p = terms[step.refs[0] - 1]
            t = lifter.nec(p, f.body)
            b.mp(Imp(Proof(p, f.body), Proof(t, f)))
        elif step.rule == "Refl":
            p = terms[step.refs[0] - 1]
            t = lifter.refl(p, f)
            b.mp(Imp(Proof(p, Box(f)), Proof(t, f)))
        else:
            raise LiftError(f"line {n}: cannot internalize a {step.rule} step")
        terms.append(t)
    return lifter.result(terms[-1], Proof(terms[-1], d.conclusion))


def explicit_lob(f: Formula, x: Var | str = "x", cs: ConstantSpecification = EMPTY_CS,
                 constants: Mapping[str, str] | None = None, prefix: str = "k",
                 start: int = 1) -> LiftResult:
    """Witness of ``x:([]f -> f) -> (b*!(c*(a*!x))):f``.

    ``constants`` may name the three certifying constants by role:
    ``"a"`` for the C1 instance, ``"c"`` for the GL3 instance and ``"b"``
    for the C3 instance.
    """
    x = Var(x) if isinstance(x, str) else x
    roles = dict(constants or {})
    lob_body = Imp(Box(f), f)
    c1 = Imp(Proof(x, lob_body), Box(lob_body))
    gl3 = Imp(Box(lob_body), Box(f))
    names = {}
    if "a" in roles:
        names[c1] = roles["a"]
    if "c" in roles:
        names[gl3] = roles["c"]
    lifter = _Internalizer(cs, _supply(cs, [c1, gl3], prefix, start), names)
    b = lifter.b

    t = lifter.nec(x, lob_body)
    line1 = Imp(Proof(x, lob_body), Proof(t, Box(lob_body)))
    b.axiom(gl3, SchemaId.GL3)
    c = lifter.specify(gl3)
    ct = App(c, t)
    line3 = b.mp(b.schema(SchemaId.LP1, s=c, t=t, A=Box(lob_body), B=Box(f)))
    if "b" in roles:
        lifter.names[Imp(Proof(ct, Box(f)), f)] = roles["b"]
    s = lifter.refl(ct, f)
    line4 = Imp(Proof(ct, Box(f)), Proof(s, f))
    b.hs(b.hs(line1, line3), line4)
    return lifter.result(s, Imp(Proof(x, lob_body), Proof(s, f)))
