from __future__ import annotations

import pytest

from gla.calculus import (
    ConstantSpecification, Derivation, SchemaId, Step, check_derivation, random_derivation,
    validate_cs,
)
from gla.internalize import (
    FreshConstants, LiftError, explicit_lob, lift, nec_term, refl_term, term_size,
)
from gla.syntax import App, Bang, Const, Proof, Var, parse_formula, parse_term, print_term

pf = parse_formula


def assert_witness(r, conclusion=None):
    assert r.witness.hypotheses == ()
    assert validate_cs(r.extended_cs).ok
    assert check_derivation(r.witness, r.extended_cs).ok
    if conclusion is not None:
        assert r.witness.conclusion == conclusion


class TestNec:
    def test_variable(self):
        r = nec_term(Var("x"), pf("P"), constant="a")
        assert r.term == parse_term("a*!x")
        assert set(r.extended_cs) == {(Const("a"), pf("x:P -> []P"))}
        assert_witness(r, pf("x:P -> (a*!x):[]P"))

    def test_ground_term(self):
        r = nec_term(Const("c"), pf("false"), constant="a")
        assert print_term(r.term) == "a*!c"
        assert (Const("a"), pf("c:false -> []false")) in r.extended_cs
        assert_witness(r)

    def test_fresh_namespace(self):
        r = nec_term(Var("x"), pf("P"))
        assert r.term == App(Const("k1"), Bang(Var("x")))
        assert r.next_fresh == 2

    def test_witness_shape(self):
        r = nec_term(Var("x"), pf("P"), constant="a")
        schemas = [s.schema for s in r.witness.steps if s.rule == "Axiom"]
        assert SchemaId.C1 in schemas and SchemaId.LP2 in schemas and SchemaId.LP1 in schemas


class TestRefl:
    def test_variable(self):
        r = refl_term(Var("x"), pf("P"), constant="b")
        assert r.term == parse_term("b*!x")
        assert set(r.extended_cs) == {(Const("b"), pf("x:[]P -> P"))}
        assert_witness(r, pf("x:[]P -> (b*!x):P"))

    def test_false(self):
        r = refl_term(Var("y"), pf("false"), constant="b")
        assert print_term(r.term) == "b*!y"
        assert (Const("b"), pf("y:[]false -> false")) in r.extended_cs
        assert_witness(r)


class TestLift:
    def test_single_axiom(self):
        d = Derivation((Step(pf("x:P -> []P"), "Axiom", schema=SchemaId.C1),))
        r = lift(d)
        assert r.term == Const("k1")
        assert set(r.extended_cs) == {(Const("k1"), pf("x:P -> []P"))}
        assert_witness(r, pf("k1:(x:P -> []P)"))

    def test_nec_of_axiom(self):
        d = Derivation((Step(pf("P -> P | Q"), "Axiom", schema=SchemaId.P6),
                        Step(pf("[](P -> P | Q)"), "Nec", (1,))))
        r = lift(d)
        c, a = Const("k1"), Const("k2")
        assert r.term == App(a, Bang(c))
        assert set(r.extended_cs) == {
            (c, pf("P -> P | Q")), (a, pf("k1:(P -> P | Q) -> [](P -> P | Q)")),
        }
        assert_witness(r, Proof(r.term, pf("[](P -> P | Q)")))

    def test_mp(self):
        d = Derivation((
            Step(pf("[]([]P -> P) -> []P"), "Axiom", schema=SchemaId.GL3),
            Step(pf("([]([]P -> P) -> []P) -> (Q -> ([]([]P -> P) -> []P))"), "Axiom",
                 schema=SchemaId.P1),
            Step(pf("Q -> ([]([]P -> P) -> []P)"), "MP", (2, 1)),
        ))
        assert check_derivation(d).ok
        r = lift(d)
        assert r.term == App(Const("k2"), Const("k1"))
        assert_witness(r, Proof(r.term, d.conclusion))

    def test_cs_step_uses_proof_checker(self):
        cs = ConstantSpecification.of([("c", pf("P -> (Q -> P)"))])
        d = Derivation((Step(pf("c:(P -> (Q -> P))"), "CS", constant="c"),))
        r = lift(d, cs)
        assert r.term == Bang(Const("c")) and r.extended_cs == cs
        assert_witness(r, pf("!c:c:(P -> (Q -> P))"))

    def test_refl(self):
        d = Derivation((Step(pf("[]P -> [][]P"), "Axiom", schema=SchemaId.GL2),
                        Step(pf("[]([]P -> [][]P)"), "Nec", (1,)),
                        Step(pf("[]P -> [][]P"), "Refl", (2,))))
        r = lift(d)
        assert_witness(r, Proof(r.term, pf("[]P -> [][]P")))

    def test_hypotheses_rejected(self):
        d = Derivation((Step(pf("P"), "Hyp", (1,)),), (pf("P"),))
        with pytest.raises(LiftError):
            lift(d)

    def test_avoids_user_constants(self):
        cs = ConstantSpecification.of([("k1", pf("P -> (Q -> P)"))])
        d = Derivation((Step(pf("[]P -> [][]P"), "Axiom", schema=SchemaId.GL2),))
        r = lift(d, cs)
        assert r.term == Const("k2")

    def test_deterministic(self):
        d = random_derivation(11, 4)
        assert lift(d) == lift(d)

    def test_random(self):
        base = lift(random_derivation(7, 3)).extended_cs
        for seed in range(200):
            cs = base if seed % 2 else ConstantSpecification()
            d = random_derivation(seed, 1 + seed % 4, cs)
            r = lift(d, cs)
            assert_witness(r, Proof(r.term, d.conclusion))
            assert cs.issubset(r.extended_cs)

    def test_term_size_is_linear(self):
        for seed in range(100):
            d = random_derivation(seed, 4)
            r = lift(d)
            assert term_size(r.term) <= 5 * len(d.steps)


class TestExplicitLob:
    def test_known_term(self):
        r = explicit_lob(pf("P"), "x", constants={"a": "a", "b": "b", "c": "c"})
        assert r.term == parse_term("b*!(c*(a*!x))")
        assert set(r.extended_cs) == {
            (Const("a"), pf("x:([]P -> P) -> []([]P -> P)")),
            (Const("c"), pf("[]([]P -> P) -> []P")),
            (Const("b"), pf("(c*(a*!x)):[]P -> P")),
        }
        assert_witness(r, pf("x:([]P -> P) -> (b*!(c*(a*!x))):P"))

    def test_falsum(self):
        r = explicit_lob(pf("false"), "x", constants={"a": "a", "b": "b", "c": "c"})
        assert r.term == parse_term("b*!(c*(a*!x))")
        assert_witness(r, pf("x:([]false -> false) -> (b*!(c*(a*!x))):false"))

    def test_fresh_constants(self):
        r = explicit_lob(pf("Q"))
        assert_witness(r)
        assert {c.name for c, _ in r.extended_cs} == {"k1", "k2", "k3"}


def test_fresh_supply():
    fresh = FreshConstants({"k1", "k3"})
    assert [fresh().name for _ in range(3)] == ["k2", "k4", "k5"]
    with pytest.raises(ValueError):
        FreshConstants(prefix="x")
