"""Decision procedure for pure-modal GL validity.

Backward proof search in the cut-free sequent calculus for GL: invertible
classical rules, then at a sequent of atoms and boxes the Löb rule

    []G, G, []B  =>  B
    ------------------------------
    []G  =>  []B, D

(boxes on the left are kept and also unboxed, the chosen []B moves left).
Each Löb step adds a boxed formula to the left that was not there before,
so search terminates. A failed search yields a finite irreflexive
transitive tree countermodel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..semantics import KripkeModel
from ..syntax import And, Atom, Box, Falsum, Formula, Imp, Neg, Or, has_proof, print_formula

__all__ = ["FragmentError", "GLProof", "gl_prove", "gl_countermodel"]


class FragmentError(ValueError):
    pass


@dataclass(frozen=True)
class GLProof:
    rule: str
    left: tuple[Formula, ...]
    right: tuple[Formula, ...]
    premises: tuple["GLProof", ...] = ()

    def to_json(self) -> dict:
        return {
            "sequent": ", ".join(map(print_formula, self.left)) + " => "
                       + ", ".join(map(print_formula, self.right)),
            "rule": self.rule,
            "premises": [p.to_json() for p in self.premises],
        }

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)


@dataclass
class _World:
    atoms: frozenset[str]
    children: list["_World"] = field(default_factory=list)


def _key(f: Formula) -> str:
    return print_formula(f)


def _sorted(fs) -> tuple[Formula, ...]:
    return tuple(sorted(fs, key=_key))


class _Prover:
    def __init__(self):
        self.memo: dict[tuple[frozenset, frozenset], GLProof | _World] = {}

    def prove(self, left: frozenset, right: frozenset) -> GLProof | _World:
        key = (left, right)
        if key not in self.memo:
            self.memo[key] = self._prove(left, right)
        return self.memo[key]

    def _prove(self, left: frozenset, right: frozenset) -> GLProof | _World:
        seq = (_sorted(left), _sorted(right))
        if any(isinstance(f, Falsum) for f in left):
            return GLProof("false-left", *seq)
        if left & right:
            return GLProof("axiom", *seq)
        for f in _sorted(left):
            if isinstance(f, (Atom, Box, Falsum)):
                continue
            rest = left - {f}
            if isinstance(f, Neg):
                return self._one("neg-left", seq, [(rest, right | {f.body})])
            if isinstance(f, And):
                return self._one("and-left", seq, [(rest | {f.left, f.right}, right)])
            if isinstance(f, Or):
                return self._one("or-left", seq, [(rest | {f.left}, right), (rest | {f.right}, right)])
            if isinstance(f, Imp):
                return self._one("imp-left", seq, [(rest, right | {f.left}), (rest | {f.right}, right)])
            raise FragmentError(f"{f} is outside the pure modal fragment")
        for f in _sorted(right):
            if isinstance(f, (Atom, Box, Falsum)):
                continue
            rest = right - {f}
            if isinstance(f, Neg):
                return self._one("neg-right", seq, [(left | {f.body}, rest)])
            if isinstance(f, And):
                return self._one("and-right", seq, [(left, rest | {f.left}), (left, rest | {f.right})])
            if isinstance(f, Or):
                return self._one("or-right", seq, [(left, rest | {f.left, f.right})])
            if isinstance(f, Imp):
                return self._one("imp-right", seq, [(left | {f.left}, rest | {f.right})])
            raise FragmentError(f"{f} is outside the pure modal fragment")

        boxed = frozenset(f for f in left if isinstance(f, Box))
        unboxed = frozenset(f.body for f in boxed)
        children = []
        for goal in _sorted(f for f in right if isinstance(f, Box)):
            sub = self.prove(boxed | unboxed | {goal}, frozenset({goal.body}))
            if isinstance(sub, GLProof):
                return GLProof("loeb", *seq, (sub,))
            children.append(sub)
        return _World(frozenset(f.name for f in left if isinstance(f, Atom)), children)

    def _one(self, rule, seq, premises) -> GLProof | _World:
        proofs = []
        for l, r in premises:
            sub = self.prove(frozenset(l), frozenset(r))
            if isinstance(sub, _World):
                return sub
            proofs.append(sub)
        return GLProof(rule, *seq, tuple(proofs))


def gl_prove(f: Formula) -> GLProof | KripkeModel:
    """A sequent proof of ``f`` or a countermodel refuting ``f`` at its root."""
    if has_proof(f):
        raise FragmentError(f"{print_formula(f)} mentions proof terms")
    out = _Prover().prove(frozenset(), frozenset({f}))
    if isinstance(out, GLProof):
        return out
    return _tree_model(out)


def gl_countermodel(f: Formula) -> KripkeModel | None:
    out = gl_prove(f)
    return out if isinstance(out, KripkeModel) else None


def _tree_model(root: _World) -> KripkeModel:
    names: list[str] = []
    val: dict[str, set[str]] = {}
    rel: set[tuple[str, str]] = set()

    def visit(w: _World, ancestors: list[str]) -> None:
        name = str(len(names) + 1)
        names.append(name)
        for a in w.atoms:
            val.setdefault(a, set()).add(name)
        rel.update((a, name) for a in ancestors)
        for child in w.children:
            visit(child, ancestors + [name])

    visit(root, [])
    return KripkeModel(tuple(names), frozenset(rel), names[0],
                       {k: frozenset(v) for k, v in val.items()})
