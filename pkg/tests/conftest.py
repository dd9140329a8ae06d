from __future__ import annotations

from itertools import product

import pytest
from hypothesis import strategies as st

from gla.syntax import (
    FALSUM, And, App, Atom, Bang, Box, Const, Falsum, Imp, Neg, Or, Proof, Sum, Var,
    parse_formula,
)

LETTERS = ("P", "Q", "R")
VARS = ("x", "y", "u")
CONSTS = ("a", "c", "t")


def terms(max_leaves: int = 4):
    leaves = st.one_of(st.sampled_from(VARS).map(Var), st.sampled_from(CONSTS).map(Const))
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(App, inner, inner), st.builds(Sum, inner, inner), st.builds(Bang, inner),
        ),
        max_leaves=max_leaves,
    )


def formulas(max_leaves: int = 12, proofs: bool = True, boxes: bool = True):
    leaves = st.one_of(st.sampled_from(LETTERS).map(Atom), st.just(FALSUM))

    def extend(inner):
        options = [
            st.builds(Neg, inner), st.builds(And, inner, inner), st.builds(Or, inner, inner),
            st.builds(Imp, inner, inner),
        ]
        if boxes:
            options.append(st.builds(Box, inner))
        if proofs:
            options.append(st.builds(Proof, terms(3), inner))
        return st.one_of(options)

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def depth(f) -> int:
    kids = [getattr(f, n) for n in ("left", "right", "body") if getattr(f, n, None) is not None]
    return 1 + max((depth(k) for k in kids), default=0)


# ---------------------------------------------------------------- oracles

def truth_table_tautology(f) -> bool:
    """Naive truth-table check, non-propositional parts and false opaque."""
    atoms = sorted(_opaque(f), key=repr)
    for bits in product((False, True), repeat=len(atoms)):
        env = dict(zip(atoms, bits))
        if not _tt(f, env):
            return False
    return True


def _opaque(f) -> set:
    if isinstance(f, Neg):
        return _opaque(f.body)
    if isinstance(f, (And, Or, Imp)):
        return _opaque(f.left) | _opaque(f.right)
    return {f}


def _tt(f, env) -> bool:
    if isinstance(f, Neg):
        return not _tt(f.body, env)
    if isinstance(f, And):
        return _tt(f.left, env) and _tt(f.right, env)
    if isinstance(f, Or):
        return _tt(f.left, env) or _tt(f.right, env)
    if isinstance(f, Imp):
        return not _tt(f.left, env) or _tt(f.right, env)
    return env[f]


def naive_evidence(seed, max_size: int = 9) -> set:
    """Forward closure of the seed, restricted to terms of bounded size."""
    def size(t):
        if isinstance(t, (Var, Const)):
            return 1
        if isinstance(t, Bang):
            return 1 + size(t.inner)
        return 1 + size(t.left) + size(t.right)

    known = set(seed)
    terms_seen = {t for t, _ in seed}
    changed = True
    while changed:
        changed = False
        new = set()
        for (s, f), (t, g) in product(list(known), repeat=2):
            if isinstance(f, Imp) and f.left == g:
                new.add((App(s, t), f.right))
            new.add((Sum(s, t), f))
            new.add((Sum(t, s), f))
        for t, f in list(known):
            new.add((Bang(t), Proof(t, f)))
        for pair in new:
            if pair not in known and size(pair[0]) <= max_size:
                known.add(pair)
                terms_seen.add(pair[0])
                changed = True
    return known


def naive_forces(m, u, f) -> bool:
    """Direct transcription of the forcing clauses, no memoization."""
    from gla.semantics import evidence_holds

    if isinstance(f, Atom):
        return u in m.valuation.get(f.name, ())
    if isinstance(f, Falsum):
        return False
    if isinstance(f, Neg):
        return not naive_forces(m, u, f.body)
    if isinstance(f, And):
        return naive_forces(m, u, f.left) and naive_forces(m, u, f.right)
    if isinstance(f, Or):
        return naive_forces(m, u, f.left) or naive_forces(m, u, f.right)
    if isinstance(f, Imp):
        return not naive_forces(m, u, f.left) or naive_forces(m, u, f.right)
    if isinstance(f, Box):
        return all(naive_forces(m, v, f.body) for v in m.worlds if (u, v) in m.rel)
    if isinstance(f, Proof):
        return evidence_holds(m.evidence_seed, f.term, f.body) and all(
            naive_forces(m, v, f.body) for v in m.worlds)
    raise TypeError(f)


def small_gl_models(max_worlds: int, letters=("P",), seeds=(frozenset(),)):
    """All rooted GL models up to ``max_worlds`` worlds over the given letters and seeds."""
    from gla.decide import gl_relations
    from gla.semantics import KripkeModel

    for n in range(1, max_worlds + 1):
        names = tuple(str(i + 1) for i in range(n))
        for rel in gl_relations(n):
            r = frozenset((names[i], names[j]) for i, j in rel)
            for bits in product((False, True), repeat=n * len(letters)):
                val = {
                    p: frozenset(names[w] for w in range(n) if bits[k * n + w])
                    for k, p in enumerate(letters)
                }
                for seed in seeds:
                    yield KripkeModel(names, r, names[0], val, seed)


@pytest.fixture
def pf():
    return parse_formula


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
