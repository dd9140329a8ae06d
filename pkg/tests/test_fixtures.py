from __future__ import annotations

from gla.calculus import SchemaId, check_derivation, validate_cs
from gla.fixtures import DERIVATIONS, FIXTURE_DIR, combined_cs, corpus, ier_model
from gla.io import cs_to_json, derivation_to_json, load_cs, model_to_json, read_json
from gla.syntax import parse_formula

CONCLUSIONS = {
    "positive_introspection": "t:P -> []t:P",
    "stability": "[]t:P | []~t:P",
    "explicit_lob": "x:([]P -> P) -> (b*!(c*(a*!x))):P",
    "proposition_1": "t:[]P -> P",
    "internalized_necessitation": "x:P -> (a*!x):[]P",
    "internalized_reflection": "x:[]P -> (b*!x):P",
}


def test_files_match_builders():
    for fx in DERIVATIONS:
        d, cs = fx.builder()
        assert read_json(fx.path) == derivation_to_json(d), fx.name
        assert read_json(fx.cs_path) == cs_to_json(cs), fx.name
    assert read_json(FIXTURE_DIR / "cs.json") == cs_to_json(combined_cs())
    assert read_json(FIXTURE_DIR / "ier_model.json") == model_to_json(ier_model())
    assert read_json(FIXTURE_DIR / "ier_model.json") == {
        "worlds": ["1", "2"], "root": "1", "rel": [["1", "2"]], "val": {}, "evidence": []}


def test_conclusions():
    for name, d, cs in corpus():
        assert d.conclusion == parse_formula(CONCLUSIONS[name])
        assert check_derivation(d, cs).ok
        assert check_derivation(d, load_cs(FIXTURE_DIR / "cs.json")).ok


def test_combined_cs_is_valid():
    cs = load_cs(FIXTURE_DIR / "cs.json")
    assert validate_cs(cs).ok and cs.constants() == {"a", "b", "c"}


def test_positive_introspection_uses_lp2_and_c1():
    d = dict((n, d) for n, d, _ in corpus())["positive_introspection"]
    axioms = [s.schema for s in d.steps if s.rule == "Axiom"]
    assert axioms[:2] == [SchemaId.LP2, SchemaId.C1]
    assert len(d.steps) == 7


def test_proposition_1_avoids_c3():
    d = dict((n, d) for n, d, _ in corpus())["proposition_1"]
    assert SchemaId.C3 not in {s.schema for s in d.steps}
    assert d.steps[-1].rule == "Refl"
