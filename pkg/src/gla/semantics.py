"""Finite rooted GL-models with a global evidence relation.

Evidence is stored as a finite seed; membership in its closure under
application, proof checker and sum is decided bottom-up over the subterms
of the queried term, which is exact because every closure rule builds a
larger term from smaller ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .calculus import ConstantSpecification, EMPTY_CS
from .syntax import (
    And, App, Atom, Bang, Box, Falsum, Formula, Imp, Neg, Or, Proof, ProofTerm, Sum, subformulas,
)

__all__ = ["KripkeModel", "SoundnessReport", "evidence_set", "evidence_holds", "forces",
           "h_set", "validate_model", "holds_in_model", "failing_worlds", "frame_problems",
           "EVAL_MODES"]

EVAL_MODES = ("all_worlds", "root_only")


@dataclass(frozen=True)
class KripkeModel:
    worlds: tuple[str, ...]
    rel: frozenset[tuple[str, str]]
    root: str
    valuation: Mapping[str, frozenset[str]] = field(default_factory=dict)
    evidence_seed: frozenset[tuple[ProofTerm, Formula]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "rel", frozenset(tuple(p) for p in self.rel))
        object.__setattr__(self, "valuation",
                           {k: frozenset(v) for k, v in sorted(self.valuation.items())})
        object.__setattr__(self, "evidence_seed", frozenset(self.evidence_seed))

    def __hash__(self):
        return hash((self.worlds, self.rel, self.root, tuple(self.valuation.items()),
                     self.evidence_seed))

    def successors(self, u: str) -> list[str]:
        return [w for w in self.worlds if (u, w) in self.rel]

    def true_at(self, letter: str, u: str) -> bool:
        return u in self.valuation.get(letter, ())


@dataclass(frozen=True)
class SoundnessReport:
    frame_ok: bool
    root_ok: bool
    f_sound: bool
    cs_sound: bool
    cs_holds: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.frame_ok and self.root_ok and self.f_sound and self.cs_sound and self.cs_holds


def _seed_index(seed: Iterable[tuple[ProofTerm, Formula]]) -> dict[ProofTerm, frozenset]:
    idx: dict[ProofTerm, set] = {}
    for t, f in seed:
        idx.setdefault(t, set()).add(f)
    return {t: frozenset(fs) for t, fs in idx.items()}


@lru_cache(maxsize=4096)
def _evidence_table(seed: frozenset) -> "_Evidence":
    return _Evidence(_seed_index(seed))


class _Evidence:
    def __init__(self, index: dict):
        self.index = index
        self.cache: dict[ProofTerm, frozenset] = {}

    def of(self, t: ProofTerm) -> frozenset[Formula]:
        hit = self.cache.get(t)
        if hit is not None:
            return hit
        out = set(self.index.get(t, ()))
        if isinstance(t, App):
            left, right = self.of(t.left), self.of(t.right)
            out.update(f.right for f in left if isinstance(f, Imp) and f.left in right)
        elif isinstance(t, Sum):
            out |= self.of(t.left) | self.of(t.right)
        elif isinstance(t, Bang):
            out.update(Proof(t.inner, f) for f in self.of(t.inner))
        result = frozenset(out)
        self.cache[t] = result
        return result


def evidence_set(seed: Iterable[tuple[ProofTerm, Formula]], t: ProofTerm) -> frozenset[Formula]:
    """All formulas ``t`` is evidence for in the closure of ``seed``."""
    return _evidence_table(frozenset(seed)).of(t)


def evidence_holds(seed: Iterable[tuple[ProofTerm, Formula]], t: ProofTerm, f: Formula) -> bool:
    return f in evidence_set(seed, t)


def frame_problems(m: KripkeModel) -> tuple[list[str], list[str]]:
    """(frame failures, root failures) as human-readable strings."""
    frame, root = [], []
    ws = set(m.worlds)
    if not ws:
        frame.append("no worlds")
    if len(ws) != len(m.worlds):
        frame.append("duplicate world labels")
    for u, v in sorted(m.rel):
        if u not in ws or v not in ws:
            frame.append(f"relation pair ({u},{v}) outside the world set")
        if u == v:
            frame.append(f"reflexive pair ({u},{u})")
    for (u, v), (v2, w) in product(sorted(m.rel), repeat=2):
        if v == v2 and (u, w) not in m.rel:
            frame.append(f"not transitive: ({u},{v}),({v},{w}) without ({u},{w})")
    if m.root not in ws:
        root.append(f"root {m.root} is not a world")
    else:
        for w in m.worlds:
            if w != m.root and (m.root, w) not in m.rel:
                root.append(f"root does not see world {w}")
    return frame, root


class _Evaluator:
    def __init__(self, m: KripkeModel):
        self.m = m
        self.ev = _evidence_table(m.evidence_seed)
        self.succ = {u: m.successors(u) for u in m.worlds}
        self.memo: dict[tuple[str, Formula], bool] = {}

    def __call__(self, u: str, f: Formula) -> bool:
        key = (u, f)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, Atom):
            r = self.m.true_at(f.name, u)
        elif isinstance(f, Falsum):
            r = False
        elif isinstance(f, Neg):
            r = not self(u, f.body)
        elif isinstance(f, And):
            r = self(u, f.left) and self(u, f.right)
        elif isinstance(f, Or):
            r = self(u, f.left) or self(u, f.right)
        elif isinstance(f, Imp):
            r = (not self(u, f.left)) or self(u, f.right)
        elif isinstance(f, Box):
            r = all(self(v, f.body) for v in self.succ[u])
        elif isinstance(f, Proof):
            # evidence is global and the body must hold at every world
            r = f.body in self.ev.of(f.term) and all(self(v, f.body) for v in self.m.worlds)
        else:
            raise TypeError(f"not a formula: {f!r}")
        self.memo[key] = r
        return r


def forces(m: KripkeModel, u: str, f: Formula) -> bool:
    return _Evaluator(m)(u, f)


def h_set(f: Formula) -> frozenset[Formula]:
    """{[]G -> G : []G a subformula of f}."""
    return frozenset(Imp(g, g.body) for g in subformulas(f) if isinstance(g, Box))


def validate_model(m: KripkeModel, sound_for: Iterable[Formula] = (),
                   cs: ConstantSpecification = EMPTY_CS) -> SoundnessReport:
    frame, root = frame_problems(m)
    failures = frame + root
    if frame or root:
        return SoundnessReport(not frame, not root, False, False, False, tuple(failures))
    ev = _Evaluator(m)
    f_sound = cs_sound = cs_holds = True
    for f in sound_for:
        for h in sorted(h_set(f), key=str):
            if not ev(m.root, h):
                f_sound = False
                failures.append(f"root does not force {h} (soundness for {f})")
    for c, a in cs:
        ca = Proof(c, a)
        for h in sorted(h_set(ca), key=str):
            if not ev(m.root, h):
                cs_sound = False
                failures.append(f"root does not force {h} (soundness for {ca})")
        if not ev(m.root, ca):
            cs_holds = False
            failures.append(f"CS formula {ca} does not hold")
    return SoundnessReport(True, True, f_sound, cs_sound, cs_holds, tuple(failures))


def failing_worlds(m: KripkeModel, f: Formula) -> list[str]:
    ev = _Evaluator(m)
    return [u for u in m.worlds if not ev(u, f)]


def holds_in_model(m: KripkeModel, f: Formula, mode: str = "all_worlds") -> bool:
    if mode == "all_worlds":
        return not failing_worlds(m, f)
    if mode == "root_only":
        return forces(m, m.root, f)
    raise ValueError(f"unknown evaluation mode {mode!r}")
