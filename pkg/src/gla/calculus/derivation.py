"""Hilbert-style derivations for GLA_CS and their checker."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping

from ..propositional import entails
from ..syntax import (
    Box, Const, Formula, Imp, ProofTerm, Proof, has_box, has_proof, substitute,
)
from .schemas import MODES, SchemaId, match_axiom, match_schema, schemas_for_mode

__all__ = [
    "ConstantSpecification", "EMPTY_CS", "Step", "Derivation", "CheckReport",
    "TransformError", "InvalidProofCode", "RULES",
    "validate_cs", "check_derivation", "deduction_transform", "proof_table", "conjoin",
    "substitute_derivation", "substitute_cs", "hypothesis_dependencies",
]

RULES = ("Axiom", "CS", "MP", "Nec", "Refl", "Hyp", "Taut")


class TransformError(ValueError):
    pass


class InvalidProofCode(ValueError):
    pass


@dataclass(frozen=True)
class ConstantSpecification:
    """A finite set of ``c:A`` entries; one constant may certify several axioms."""

    entries: frozenset[tuple[Const, Formula]] = frozenset()

    @classmethod
    def of(cls, pairs: Iterable[tuple[Const | str, Formula]]) -> "ConstantSpecification":
        return cls(frozenset((Const(c) if isinstance(c, str) else c, a) for c, a in pairs))

    def __iter__(self) -> Iterator[tuple[Const, Formula]]:
        return iter(sorted(self.entries, key=lambda e: (e[0].name, str(e[1]))))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, entry) -> bool:
        return entry in self.entries

    def with_entry(self, constant: Const | str, axiom: Formula) -> "ConstantSpecification":
        c = Const(constant) if isinstance(constant, str) else constant
        return ConstantSpecification(self.entries | {(c, axiom)})

    def union(self, other: "ConstantSpecification") -> "ConstantSpecification":
        return ConstantSpecification(self.entries | other.entries)

    def issubset(self, other: "ConstantSpecification") -> bool:
        return self.entries <= other.entries

    def formulas(self) -> list[Formula]:
        return [Proof(c, a) for c, a in self]

    def constants(self) -> set[str]:
        return {c.name for c, _ in self.entries}

    def constant_for(self, axiom: Formula) -> Const | None:
        for c, a in self:
            if a == axiom:
                return c
        return None


EMPTY_CS = ConstantSpecification()


@dataclass(frozen=True)
class Step:
    """One line of a derivation; ``refs`` are 1-based line (or hypothesis) indices."""

    formula: Formula
    rule: str
    refs: tuple[int, ...] = ()
    schema: SchemaId | None = None
    constant: str | None = None

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")


@dataclass(frozen=True)
class Derivation:
    steps: tuple[Step, ...]
    hypotheses: tuple[Formula, ...] = ()
    mode: str = "GLA"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown logic mode {self.mode!r}")

    @property
    def conclusion(self) -> Formula:
        return self.steps[-1].formula

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    first_error: tuple[int, str] | None = field(default=None)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def fail(cls, index: int, reason: str) -> "CheckReport":
        return cls(False, (index, reason))


OK = CheckReport(True)


def validate_cs(cs: ConstantSpecification) -> CheckReport:
    for n, (c, axiom) in enumerate(cs, start=1):
        if not isinstance(c, Const):
            return CheckReport.fail(n, f"{c!r} is not a proof constant")
        if match_axiom(axiom, "GLA") is None:
            return CheckReport.fail(n, f"{c.name}:{axiom} does not specify an axiom instance")
    return OK


def _mode_violation(f: Formula, mode: str) -> str | None:
    if mode == "GL" and has_proof(f):
        return "proof assertion in GL mode"
    if mode == "LP" and has_box(f):
        return "box in LP mode"
    return None


def hypothesis_dependencies(d: Derivation) -> list[frozenset[int]]:
    """For each line, the hypothesis indices it rests on (rules assumed valid)."""
    deps: list[frozenset[int]] = []
    for step in d.steps:
        if step.rule == "Hyp":
            deps.append(frozenset(step.refs[:1]))
        elif step.rule in ("MP", "Taut"):
            acc: frozenset[int] = frozenset()
            for r in step.refs:
                if 1 <= r <= len(deps):
                    acc |= deps[r - 1]
            deps.append(acc)
        else:
            deps.append(frozenset())
    return deps


def check_derivation(d: Derivation, cs: ConstantSpecification = EMPTY_CS,
                     allow_taut: bool = False) -> CheckReport:
    """Check every line of ``d``; report the first unjustified one."""
    if not d.steps:
        return CheckReport.fail(0, "empty derivation")
    for k, h in enumerate(d.hypotheses, start=1):
        why = _mode_violation(h, d.mode)
        if why:
            return CheckReport.fail(0, f"hypothesis {k}: {why}")
    allowed = set(schemas_for_mode(d.mode))
    lines: list[Formula] = []
    deps: list[frozenset[int]] = []

    for n, step in enumerate(d.steps, start=1):
        f = step.formula
        why = _mode_violation(f, d.mode)
        if why:
            return CheckReport.fail(n, why)
        refs = step.refs
        if step.rule != "Hyp" and any(not (1 <= r < n) for r in refs):
            return CheckReport.fail(n, f"reference out of range in {refs}")
        dep: frozenset[int] = frozenset()

        if step.rule == "Axiom":
            if step.schema is None:
                return CheckReport.fail(n, "axiom step without schema")
            if step.schema not in allowed:
                return CheckReport.fail(n, f"schema {step.schema} not available in {d.mode} mode")
            if match_schema(f, step.schema) is None:
                return CheckReport.fail(n, f"not an instance of {step.schema}")
        elif step.rule == "CS":
            if not isinstance(f, Proof) or (f.term, f.body) not in cs:
                return CheckReport.fail(n, "not an entry of the constant specification")
            if step.constant is not None and f.term != Const(step.constant):
                return CheckReport.fail(n, f"entry does not belong to constant {step.constant}")
        elif step.rule == "Hyp":
            if len(refs) != 1 or not (1 <= refs[0] <= len(d.hypotheses)):
                return CheckReport.fail(n, "no such hypothesis")
            if d.hypotheses[refs[0] - 1] != f:
                return CheckReport.fail(n, f"differs from hypothesis {refs[0]}")
            dep = frozenset(refs)
        elif step.rule == "MP":
            if len(refs) != 2:
                return CheckReport.fail(n, "MP needs two references")
            i, j = refs
            if lines[i - 1] != Imp(lines[j - 1], f):
                return CheckReport.fail(n, f"line {i} is not line {j} -> this line")
            dep = deps[i - 1] | deps[j - 1]
        elif step.rule in ("Nec", "Refl"):
            if d.mode == "LP":
                return CheckReport.fail(n, f"{step.rule} not available in LP mode")
            if len(refs) != 1:
                return CheckReport.fail(n, f"{step.rule} needs one reference")
            (i,) = refs
            if step.rule == "Nec" and f != Box(lines[i - 1]):
                return CheckReport.fail(n, f"not the necessitation of line {i}")
            if step.rule == "Refl" and lines[i - 1] != Box(f):
                return CheckReport.fail(n, f"line {i} is not []-this line")
            if deps[i - 1]:
                return CheckReport.fail(n, f"{step.rule} applied to hypothesis-dependent line {i}")
        elif step.rule == "Taut":
            if not allow_taut:
                return CheckReport.fail(n, "Taut steps are disabled (strict mode)")
            if not entails([lines[r - 1] for r in refs], f):
                return CheckReport.fail(n, "not a propositional consequence of the cited lines")
            for r in refs:
                dep |= deps[r - 1]
        lines.append(f)
        deps.append(dep)
    return OK


def deduction_transform(d: Derivation) -> Derivation:
    """Discharge the last hypothesis ``A``; the result concludes ``A -> G``."""
    if not d.hypotheses:
        raise TransformError("derivation has no hypothesis to discharge")
    a = d.hypotheses[-1]
    last = len(d.hypotheses)
    deps = hypothesis_dependencies(d)
    out: list[Step] = []
    where: dict[int, int] = {}      # old line -> new index of the verbatim line
    cond: dict[int, int] = {}       # old line -> new index of "A -> line"

    def emit(step: Step) -> int:
        out.append(step)
        return len(out)

    def conditional(i: int) -> int:
        if i not in cond:
            b = d.steps[i - 1].formula
            p1 = emit(Step(Imp(b, Imp(a, b)), "Axiom", schema=SchemaId.P1))
            cond[i] = emit(Step(Imp(a, b), "MP", (p1, where[i])))
        return cond[i]

    for n, step in enumerate(d.steps, start=1):
        f = step.formula
        if last not in deps[n - 1]:
            if step.rule in ("Nec", "Refl") and last in deps[step.refs[0] - 1]:
                raise TransformError(f"line {n}: {step.rule} depends on the discharged hypothesis")
            if step.rule != "Hyp":
                step = replace(step, refs=tuple(where[r] for r in step.refs))
            where[n] = emit(step)
            continue
        if step.rule == "Hyp":
            aa = Imp(a, a)
            s1 = emit(Step(Imp(a, Imp(aa, a)), "Axiom", schema=SchemaId.P1))
            s2 = emit(Step(Imp(Imp(a, aa), Imp(Imp(a, Imp(aa, a)), aa)), "Axiom",
                           schema=SchemaId.P2))
            s3 = emit(Step(Imp(a, aa), "Axiom", schema=SchemaId.P1))
            s4 = emit(Step(Imp(Imp(a, Imp(aa, a)), aa), "MP", (s2, s3)))
            cond[n] = emit(Step(aa, "MP", (s4, s1)))
        elif step.rule == "MP":
            i, j = step.refs
            bj = d.steps[j - 1].formula
            ci, cj = conditional(i), conditional(j)
            p2 = emit(Step(Imp(Imp(a, bj), Imp(Imp(a, Imp(bj, f)), Imp(a, f))), "Axiom",
                           schema=SchemaId.P2))
            m = emit(Step(Imp(Imp(a, Imp(bj, f)), Imp(a, f)), "MP", (p2, cj)))
            cond[n] = emit(Step(Imp(a, f), "MP", (m, ci)))
        elif step.rule == "Taut":
            cited = tuple(conditional(r) for r in step.refs)
            cond[n] = emit(Step(Imp(a, f), "Taut", cited))
        else:
            raise TransformError(f"line {n}: {step.rule} depends on the discharged hypothesis")
    # the final line's conditional is always emitted last
    conditional(len(d.steps))
    return Derivation(tuple(out), d.hypotheses[:-1], d.mode)


def proof_table(k: Derivation, cs: ConstantSpecification = EMPTY_CS,
                allow_taut: bool = False) -> frozenset[Formula]:
    """T(k): every formula proved by the proof code ``k`` (all of its lines)."""
    if k.hypotheses:
        raise InvalidProofCode("proof codes must not carry hypotheses")
    report = check_derivation(k, cs, allow_taut)
    if not report.ok:
        raise InvalidProofCode(f"derivation does not check: {report.first_error}")
    return frozenset(s.formula for s in k.steps)


def conjoin(k: Derivation, l: Derivation) -> Derivation:
    """A proof code whose table contains the tables of both arguments."""
    offset = len(k.steps)
    shifted = tuple(replace(s, refs=tuple(r + offset for r in s.refs)) for s in l.steps)
    mode = k.mode if k.mode == l.mode else "GLA"
    return Derivation(k.steps + shifted, (), mode)


def substitute_cs(cs: ConstantSpecification, map_props: Mapping[str, Formula] | None = None,
                  map_vars: Mapping[str, ProofTerm] | None = None) -> ConstantSpecification:
    return ConstantSpecification(
        frozenset((c, substitute(a, map_props, map_vars)) for c, a in cs.entries))


def substitute_derivation(d: Derivation, map_props: Mapping[str, Formula] | None = None,
                          map_vars: Mapping[str, ProofTerm] | None = None) -> Derivation:
    steps = tuple(replace(s, formula=substitute(s.formula, map_props, map_vars)) for s in d.steps)
    hyps = tuple(substitute(h, map_props, map_vars) for h in d.hypotheses)
    return Derivation(steps, hyps, d.mode)
