from __future__ import annotations

from dataclasses import dataclass

from ..calculus import ConstantSpecification, EMPTY_CS
from ..syntax import Atom, Formula, Proof, ProofTerm, print_formula, print_term, subformulas, subterms

__all__ = ["ClosureSet", "closure_set", "formula_key", "term_key"]


def formula_key(f: Formula) -> tuple[int, str]:
    return (len(print_formula(f)), print_formula(f))


def term_key(t: ProofTerm) -> tuple[int, str]:
    return (len(print_term(t)), print_term(t))


@dataclass(frozen=True)
class ClosureSet:
    """Formulas ordered so that every subformula precedes its superformulas."""

    formulas: tuple[Formula, ...]
    proof_pairs: tuple[tuple[ProofTerm, Formula], ...]
    letters: tuple[str, ...]
    terms: tuple[ProofTerm, ...]

    def __contains__(self, f: Formula) -> bool:
        return f in set(self.formulas)


def closure_set(f: Formula, cs: ConstantSpecification = EMPTY_CS) -> ClosureSet:
    # H-members []G -> G only contribute subformulas already present
    roots = [f] + cs.formulas()
    forms: set[Formula] = set()
    for r in roots:
        forms.update(subformulas(r))
    ordered = tuple(sorted(forms, key=lambda g: (_height(g), formula_key(g))))
    pairs = tuple(sorted(((g.term, g.body) for g in forms if isinstance(g, Proof)),
                         key=lambda p: (term_key(p[0]), formula_key(p[1]))))
    terms: set[ProofTerm] = set()
    for t, _ in pairs:
        terms.update(subterms(t))
    letters = tuple(sorted({g.name for g in forms if isinstance(g, Atom)}))
    return ClosureSet(ordered, pairs, letters, tuple(sorted(terms, key=term_key)))


def _height(f: Formula) -> int:
    return max((_height(g) for g in _children(f)), default=-1) + 1


def _children(f: Formula):
    for name in ("left", "right", "body"):
        g = getattr(f, name, None)
        if g is not None:
            yield g
