"""Bounded forward theorem search.

Non-propositional axiom instances are generated over the goal's closure
(terms extended by one layer of ``!``, ``*``, ``+``), then Nec and Refl are
applied for a bounded number of rounds. All classical reasoning is left to
a SAT-backed entailment check; the certificate therefore uses Taut steps.
"""

from __future__ import annotations

import time
from itertools import product

from ..calculus import ConstantSpecification, Derivation, SchemaId, Step, instantiate
from ..propositional import Entailment
from ..syntax import App, Bang, Box, Formula, Imp, Proof, Sum, subformulas
from .closure import closure_set, formula_key, term_key

__all__ = ["saturate"]

MAX_INSTANCES = 20000


def _instances(goal: Formula, cs: ConstantSpecification) -> list[tuple[Formula, SchemaId]]:
    cl = closure_set(goal, cs)
    forms = list(cl.formulas)
    base = list(cl.terms)
    terms = list(base)
    for t in base:
        terms.append(Bang(t))
    for s, t in product(base, repeat=2):
        terms += [App(s, t), Sum(s, t)]
    terms = sorted(set(terms), key=term_key)
    imps = [f for f in forms if isinstance(f, Imp)]
    boxed = [f.body for f in forms if isinstance(f, Box)]

    out: list[tuple[Formula, SchemaId]] = []

    def add(sid, variant=0, **env):
        out.append((instantiate(sid, variant, **env), sid))

    for f in imps:
        add(SchemaId.GL1, A=f.left, B=f.right)
    for a in boxed:
        add(SchemaId.GL2, A=a)
        add(SchemaId.GL3, A=a)
    for t, a in product(terms, forms):
        add(SchemaId.LP2, t=t, A=a)
        add(SchemaId.LP4, t=t, A=a)
        add(SchemaId.C1, t=t, A=a)
        add(SchemaId.C2, t=t, A=a)
        add(SchemaId.C3, t=t, A=a)
    for s, t in product(base, repeat=2):
        for a in forms:
            add(SchemaId.LP3, 0, s=s, t=t, A=a)
            add(SchemaId.LP3, 1, s=s, t=t, A=a)
        for f in imps:
            add(SchemaId.LP1, s=s, t=t, A=f.left, B=f.right)
    seen = set()
    unique = []
    for f, sid in out:
        if f not in seen:
            seen.add(f)
            unique.append((f, sid))
    return unique


def saturate(goal: Formula, cs: ConstantSpecification, depth: int = 3,
             deadline: float | None = None) -> tuple[Derivation | None, str | None]:
    """(certificate, None) on success, else (None, name of the exhausted bound)."""
    instances = _instances(goal, cs)
    cut = None
    if len(instances) > MAX_INSTANCES:
        instances = instances[:MAX_INSTANCES]
        cut = "instances"

    # theorem -> how it was obtained: ("Axiom", sid) | ("CS",) | (rule, premise, core)
    origin: dict[Formula, tuple] = {}
    for f, sid in instances:
        origin[f] = ("Axiom", sid)
    for f in cs.formulas():
        origin.setdefault(f, ("CS",))

    pool = set()
    for f in list(origin) + [goal]:
        for g in subformulas(f):
            if isinstance(g, Box):
                pool.add(g)
    pool = sorted(pool, key=formula_key)

    with Entailment(origin) as oracle:
        for _ in range(depth):
            core = oracle.core(goal)
            if core is not None:
                return _certificate(goal, core, origin), None
            grew = False
            for bx in pool:
                if deadline is not None and time.monotonic() > deadline:
                    return None, "time_budget"
                if bx not in origin:
                    core = oracle.core(bx.body)
                    if core is not None:
                        origin[bx] = ("Nec", bx.body, core)
                        oracle.add(bx)
                        grew = True
                elif bx.body not in origin and origin[bx][0] != "Nec":
                    origin[bx.body] = ("Refl", bx, [bx])
                    oracle.add(bx.body)
                    grew = True
            if not grew:
                break
        core = oracle.core(goal)
    if core is not None:
        return _certificate(goal, core, origin), None
    return None, cut or "saturation_depth"


def _certificate(goal: Formula, core: list[Formula], origin: dict) -> Derivation:
    steps: list[Step] = []
    line: dict[Formula, int] = {}

    def emit(step: Step) -> int:
        steps.append(step)
        return len(steps)

    def establish(f: Formula) -> int:
        if f in line:
            return line[f]
        how = origin[f]
        if how[0] == "Axiom":
            line[f] = emit(Step(f, "Axiom", schema=how[1]))
        elif how[0] == "CS":
            line[f] = emit(Step(f, "CS", constant=f.term.name))
        elif how[0] == "Nec":
            body = how[1]
            refs = tuple(establish(g) for g in how[2])
            premise = line.get(body) or emit(Step(body, "Taut", refs))
            line[f] = emit(Step(f, "Nec", (premise,)))
        else:
            line[f] = emit(Step(f, "Refl", (establish(how[1]),)))
        return line[f]

    refs = tuple(establish(g) for g in core)
    if goal in line:
        emit(steps[line[goal] - 1])
    else:
        emit(Step(goal, "Taut", refs))
    return Derivation(tuple(steps))
