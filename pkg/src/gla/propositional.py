"""Classical propositional entailment over the mixed language.

Maximal non-propositional subformulas (``[]A``, ``t:A``), sentence letters
and ``false`` are treated as opaque atoms. ``false`` is opaque on purpose:
the fixed classical base has no axiom about it, so a tautology here is
exactly what the ten classical schemas can reach.
"""

from __future__ import annotations

from typing import Iterable

from pysat.formula import IDPool
from pysat.solvers import Minisat22

from .syntax import And, Formula, Imp, Neg, Or

__all__ = ["entails", "is_tautology", "entailment_core", "Entailment"]


class _Encoder:
    def __init__(self):
        self.pool = IDPool()
        self.clauses: list[list[int]] = []
        self._cache: dict[Formula, int] = {}

    def lit(self, f: Formula) -> int:
        if f in self._cache:
            return self._cache[f]
        if isinstance(f, Neg):
            v = -self.lit(f.body)
        elif isinstance(f, (And, Or, Imp)):
            a = self.lit(f.left)
            b = self.lit(f.right)
            if isinstance(f, Imp):
                a = -a
            v = self.pool.id(("gate", f))
            if isinstance(f, And):
                self.clauses += [[-v, a], [-v, b], [v, -a, -b]]
            else:
                self.clauses += [[-v, a, b], [v, -a], [v, -b]]
        else:
            v = self.pool.id(("atom", f))
        self._cache[f] = v
        return v


def entailment_core(premises: Iterable[Formula], goal: Formula) -> list[int] | None:
    """Indices of premises sufficient for ``goal``, or None if not entailed.

    The returned subset is the solver's unsat core, not necessarily minimal.
    """
    premises = list(premises)
    enc = _Encoder()
    selectors = []
    for i, p in enumerate(premises):
        s = enc.pool.id(("sel", i))
        enc.clauses.append([-s, enc.lit(p)])
        selectors.append(s)
    enc.clauses.append([-enc.lit(goal)])
    with Minisat22(bootstrap_with=enc.clauses) as solver:
        if solver.solve(assumptions=selectors):
            return None
        core = set(solver.get_core() or [])
    return [i for i, s in enumerate(selectors) if s in core]


class Entailment:
    """Incremental entailment from a growing premise list, one solver throughout."""

    def __init__(self, premises: Iterable[Formula] = ()):
        self.enc = _Encoder()
        self.solver = Minisat22()
        self.premises: list[Formula] = []
        self.selectors: list[int] = []
        self._flushed = 0
        for p in premises:
            self.add(p)

    def _flush(self) -> None:
        for c in self.enc.clauses[self._flushed:]:
            self.solver.add_clause(c)
        self._flushed = len(self.enc.clauses)

    def add(self, premise: Formula) -> None:
        s = self.enc.pool.id(("sel", len(self.premises)))
        self.enc.clauses.append([-s, self.enc.lit(premise)])
        self.premises.append(premise)
        self.selectors.append(s)

    def core(self, goal: Formula) -> list[Formula] | None:
        g = self.enc.lit(goal)
        self._flush()
        if self.solver.solve(assumptions=self.selectors + [-g]):
            return None
        core = set(self.solver.get_core() or [])
        return [p for p, s in zip(self.premises, self.selectors) if s in core]

    def close(self) -> None:
        self.solver.delete()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def entails(premises: Iterable[Formula], goal: Formula) -> bool:
    return entailment_core(premises, goal) is not None


def is_tautology(f: Formula) -> bool:
    return entails([], f)
