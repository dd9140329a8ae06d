"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are collected in ``RESULTS`` and echoed in the terminal summary
(see ``pytest_terminal_summary`` in conftest), so they show up even when
output capture is on.
"""

from __future__ import annotations

import random
import time

from gla.calculus import (
    ConstantSpecification, check_derivation, conjoin, proof_table, random_derivation,
    random_formula, random_term, substitute_cs, substitute_derivation, validate_cs,
)
from gla.decide import (
    NonTheorem, SearchConfig, Theorem, Unknown, countermodel_search, decide, decide_gl, search,
)
from gla.fixtures import DERIVATIONS, FIXTURE_DIR, corpus
from gla.internalize import lift
from gla.io import load_cs, load_derivation, load_model
from gla.semantics import failing_worlds, forces, validate_model
from gla.syntax import Const, Proof, parse_formula, print_formula

RESULTS: list[str] = []

pf = parse_formula


def gate(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_fixture_checking():
    cs_all = load_cs(FIXTURE_DIR / "cs.json")
    worst, failures = 0.0, []
    for fx in DERIVATIONS:
        d = load_derivation(fx.path)
        start = time.perf_counter()
        ok = check_derivation(d, cs_all).ok
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        if not ok or elapsed >= 0.1:
            failures.append(fx.name)
    gate(1, "bundled derivations check, each < 0.1 s", not failures,
         f"{len(DERIVATIONS)} fixtures, slowest {worst * 1000:.1f} ms, failures {failures}")


def test_2_ier_reproduction():
    m = load_model(FIXTURE_DIR / "ier_model.json")
    ier = pf("[]x:P -> P")
    table = {
        "1": {"P": False, "x:P": False, "[]x:P": False, "[]x:P -> x:P": True, "[]x:P -> P": True},
        "2": {"P": False, "x:P": False, "[]x:P": True, "[]x:P -> P": False},
    }
    facts = all(forces(m, u, pf(s)) is v for u, row in table.items() for s, v in row.items())
    sound = validate_model(m, [ier]).ok
    start = time.perf_counter()
    found = countermodel_search(ier)
    elapsed = time.perf_counter() - start
    iso = (found is not None and len(found[0].worlds) == 2 and len(found[0].rel) == 1
           and not found[0].evidence_seed and not any(found[0].valuation.values())
           and found[1] != found[0].root)
    ok = facts and sound and failing_worlds(m, ier) == ["2"] and iso and elapsed < 1.0
    gate(2, "IER model reproduced and found by search < 1 s", ok,
         f"node facts {facts}, sound {sound}, search {elapsed:.3f} s, isomorphic {iso}")


GOLDEN_GL = [
    ("[](P -> Q) -> ([]P -> []Q)", True),
    ("[]P -> [][]P", True),
    ("[]([]P -> P) -> []P", True),
    ("[]([]false -> false) -> []false", True),
    ("[](P & Q) -> []P & []Q", True),
    ("[]P & []Q -> [](P & Q)", True),
    ("~[]false -> ~[]~[]false", True),
    ("[]P -> P", False),
    ("~[]false", False),
    ("[]false -> false", False),
    ("[]P | []~P", False),
    ("[][]P -> []P", False),
]


def test_3_gl_oracle():
    start = time.perf_counter()
    wrong = []
    for text, valid in GOLDEN_GL:
        f = pf(text)
        v = decide_gl(f)
        if valid and not isinstance(v, Theorem):
            wrong.append(text)
        if not valid:
            confirmed = (isinstance(v, NonTheorem) and validate_model(v.model).frame_ok
                         and not forces(v.model, v.failing_world, f))
            if not confirmed:
                wrong.append(text)
    elapsed = time.perf_counter() - start
    gate(3, "GL golden list exact, < 1 s total", not wrong and elapsed < 1.0,
         f"{len(GOLDEN_GL)} formulas, {elapsed * 1000:.1f} ms, mismatches {wrong}")


def test_4_internalization():
    failures = []
    for seed in range(200):
        d = random_derivation(seed, 1 + seed % 4)
        r = lift(d)
        ok = (validate_cs(r.extended_cs).ok and check_derivation(r.witness, r.extended_cs).ok
              and r.witness.conclusion == Proof(r.term, d.conclusion))
        if not ok:
            failures.append(seed)
    gate(4, "lift witnesses re-check and conclude p:F", not failures,
         f"200 derivations, failures {failures}")


def test_5_soundness_cross_check():
    start = time.perf_counter()
    violations, truncated = [], 0
    for seed in range(500):
        d = random_derivation(seed, 1 + seed % 4)
        cs = ConstantSpecification()
        if seed % 2:
            r = lift(d)
            d, cs = r.witness, r.extended_cs
        out = search(d.conclusion, cs)
        if out.model is not None:
            violations.append(seed)
        truncated += out.truncated is not None
    elapsed = time.perf_counter() - start
    gate(5, "no countermodel for 500 generated theorems, < 5 min",
         not violations and elapsed < 300,
         f"{elapsed:.1f} s, violations {violations}, truncated {truncated}")


def test_6_conjoinability():
    bad = []
    for seed in range(200):
        k = random_derivation(seed, 1 + seed % 4)
        l = random_derivation(10_000 + seed, 1 + (seed // 4) % 4)
        n = conjoin(k, l)
        tk, tl, tn = proof_table(k), proof_table(l), proof_table(n)
        if not (tk | tl) <= tn or len(tn) > len(n.steps):
            bad.append(seed)
    gate(6, "proof_table(conjoin(k, l)) covers both tables", not bad,
         f"200 pairs, failures {bad}")


def test_7_non_realizability():
    f = pf("x:(u:false -> false) -> v:false")
    start = time.perf_counter()
    v = decide(f)
    elapsed = time.perf_counter() - start
    ok = isinstance(v, NonTheorem) and validate_model(v.model, [f]).ok and elapsed < 10
    gate(7, "non-realizability is a NonTheorem, < 10 s", ok,
         f"{type(v).__name__} in {elapsed:.3f} s")


def _depth(f) -> int:
    kids = [getattr(f, n) for n in ("left", "right", "body") if getattr(f, n, None) is not None]
    return 1 + max((_depth(k) for k in kids), default=0)


def test_8_property_suites():
    rng = random.Random(8)
    trips = 0
    for _ in range(1000):
        f = random_formula(rng, rng.randint(1, 6), letters=("P", "Q", "R"),
                           variables=("x", "y", "u"), constants=(Const("a"), Const("c")))
        assert _depth(f) <= 7
        if parse_formula(print_formula(f)) == f:
            trips += 1
    closed = 0
    for seed in range(1000):
        d = random_derivation(seed, 1 + seed % 4)
        cs = ConstantSpecification()
        if seed % 3 == 0:
            r = lift(d)
            d, cs = r.witness, r.extended_cs
        props = {"P": random_formula(rng, 2, letters=("Q", "R")), "Q": random_formula(rng, 1)}
        var_map = {"x": random_term(rng, 2)}
        if check_derivation(substitute_derivation(d, props, var_map),
                            substitute_cs(cs, props, var_map)).ok:
            closed += 1
    gate(8, "round trip and substitution closure on 1000 instances each",
         trips == 1000 and closed == 1000, f"round trip {trips}/1000, substitution {closed}/1000")


def _golden_corpus():
    items = [(name, d.conclusion, cs) for name, d, cs in corpus()]
    empty = ConstantSpecification()
    items += [
        ("ier", pf("[]x:P -> P"), empty),
        ("non-realizability", pf("x:(u:false -> false) -> v:false"), empty),
        ("consistency", pf("[]false -> false"), empty),
    ]
    items += [(text, pf(text), empty) for text, _ in GOLDEN_GL]
    return items


def test_9_desk_scale_decidability():
    slow, unknown = [], []
    worst = 0.0
    items = _golden_corpus()
    for name, f, cs in items:
        start = time.perf_counter()
        v = decide(f, cs, SearchConfig())
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        if isinstance(v, Unknown):
            unknown.append(name)
        if elapsed >= 30:
            slow.append(name)
    gate(9, "decide answers every corpus formula within 30 s", not slow and not unknown,
         f"{len(items)} formulas, slowest {worst:.2f} s, unknown {unknown}, slow {slow}")

