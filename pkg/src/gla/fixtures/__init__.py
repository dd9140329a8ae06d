"""Bundled derivations and models reproducing the worked examples.

The JSON files next to this module are generated by :func:`write_fixtures`
and compared against the builders below by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable

from ..calculus import ConstantSpecification, Derivation, DerivationBuilder, SchemaId
from ..internalize import explicit_lob, nec_term, refl_term
from ..io import (
    cs_to_json, derivation_to_json, load_cs, load_derivation, load_model, model_to_json,
    write_json,
)
from ..semantics import KripkeModel
from ..syntax import Bang, Box, Const, Imp, Neg, Or, Proof, Var, parse_formula

__all__ = ["FIXTURE_DIR", "DERIVATIONS", "Fixture", "corpus", "combined_cs", "ier_model",
           "write_fixtures", "fixture_path"]

FIXTURE_DIR = Path(str(resources.files(__package__)))

P = parse_formula("P")
T = Const("t")
X = Var("x")
EMPTY = ConstantSpecification()


def positive_introspection() -> tuple[Derivation, ConstantSpecification]:
    b = DerivationBuilder()
    tp = Proof(T, P)
    lp2 = b.schema(SchemaId.LP2, t=T, A=P)
    c1 = b.schema(SchemaId.C1, t=Bang(T), A=tp)
    return b.build(b.hs(lp2, c1)), EMPTY


def stability() -> tuple[Derivation, ConstantSpecification]:
    """[]t:P | []~t:P by cases on t:P."""
    b = DerivationBuilder()
    b.include(positive_introspection()[0])
    tp = Proof(T, P)
    goal = Or(Box(tp), Box(Neg(tp)))
    c2 = b.schema(SchemaId.C2, t=T, A=P)
    left = b.hs(Imp(tp, Box(tp)), b.schema(SchemaId.P6, A=Box(tp), B=Box(Neg(tp))))
    right = b.hs(c2, b.schema(SchemaId.P7, A=Box(tp), B=Box(Neg(tp))))
    assert left == Imp(tp, goal) and right == Imp(Neg(tp), goal)
    return b.build(b.cases(tp, goal)), EMPTY


def proposition_1() -> tuple[Derivation, ConstantSpecification]:
    """t:[]P -> P without any C3 step; the GL reasoning is fully expanded."""
    b = DerivationBuilder()
    tb, bp = Proof(T, Box(P)), Box(P)
    target = Box(Imp(tb, P))
    line1 = b.contrapose(b.schema(SchemaId.LP4, t=T, A=bp))
    line2 = b.schema(SchemaId.C2, t=T, A=bp)
    b.assume(Neg(tb))
    b.assume(tb)
    b.ex_falso(tb, P)
    b.discharge()
    line3 = b.box_mono(b.discharge())
    line4 = b.hs(b.hs(line1, line2), line3)
    line5 = b.box_mono(b.schema(SchemaId.P1, A=P, B=tb))
    assert line4 == Imp(Neg(bp), target) and line5 == Imp(bp, target)
    line6 = b.cases(bp, target)
    return b.build(b.refl(line6)), EMPTY


def internalized_necessitation() -> tuple[Derivation, ConstantSpecification]:
    r = nec_term(X, P, constant="a")
    return r.witness, r.extended_cs


def internalized_reflection() -> tuple[Derivation, ConstantSpecification]:
    r = refl_term(X, P, constant="b")
    return r.witness, r.extended_cs


def explicit_loeb() -> tuple[Derivation, ConstantSpecification]:
    r = explicit_lob(P, X, constants={"a": "a", "b": "b", "c": "c"})
    return r.witness, r.extended_cs


@dataclass(frozen=True)
class Fixture:
    name: str
    filename: str
    builder: Callable[[], tuple[Derivation, ConstantSpecification]]

    @property
    def path(self) -> Path:
        return FIXTURE_DIR / self.filename

    @property
    def cs_path(self) -> Path:
        return FIXTURE_DIR / self.filename.replace(".json", ".cs.json")


DERIVATIONS: tuple[Fixture, ...] = (
    Fixture("positive_introspection", "positive_introspection.json", positive_introspection),
    Fixture("stability", "stability.json", stability),
    Fixture("explicit_lob", "explicit_lob.json", explicit_loeb),
    Fixture("proposition_1", "prop1.json", proposition_1),
    Fixture("internalized_necessitation", "internalized_nec.json", internalized_necessitation),
    Fixture("internalized_reflection", "internalized_refl.json", internalized_reflection),
)


def fixture_path(filename: str) -> Path:
    return FIXTURE_DIR / filename


def ier_model() -> KripkeModel:
    """Two worlds 1 ≺ 2, P false everywhere, no evidence."""
    return KripkeModel(("1", "2"), frozenset({("1", "2")}), "1", {}, frozenset())


def combined_cs(fixtures=DERIVATIONS) -> ConstantSpecification:
    cs = ConstantSpecification()
    for fx in fixtures:
        cs = cs.union(fx.builder()[1])
    return cs


@lru_cache(maxsize=1)
def corpus() -> tuple[tuple[str, Derivation, ConstantSpecification], ...]:
    """The bundled derivations as loaded from disk, with their own CS."""
    return tuple((fx.name, load_derivation(fx.path), load_cs(fx.cs_path)) for fx in DERIVATIONS)


def write_fixtures(directory: Path = FIXTURE_DIR) -> None:
    directory = Path(directory)
    for fx in DERIVATIONS:
        d, cs = fx.builder()
        write_json(directory / fx.filename, derivation_to_json(d))
        write_json(directory / fx.filename.replace(".json", ".cs.json"), cs_to_json(cs))
    write_json(directory / "cs.json", cs_to_json(combined_cs()))
    write_json(directory / "empty.json", cs_to_json(ConstantSpecification()))
    write_json(directory / "ier_model.json", model_to_json(ier_model()))


def load_ier_model() -> KripkeModel:
    return load_model(FIXTURE_DIR / "ier_model.json")
