"""Three-valued decision verdicts and the top-level ``decide``."""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..calculus import ConstantSpecification, Derivation, EMPTY_CS, check_derivation
from ..semantics import KripkeModel
from ..syntax import Formula, has_proof
from .gl import GLProof, gl_prove
from .saturate import saturate
from .search import SearchConfig, search

__all__ = ["Theorem", "NonTheorem", "Unknown", "Verdict", "decide", "decide_gl"]


@dataclass(frozen=True)
class Theorem:
    # a Hilbert derivation, a GL sequent proof, or the name of a bundled fixture
    certificate: Derivation | GLProof | str
    source: str

    category = "theorem"


@dataclass(frozen=True)
class NonTheorem:
    model: KripkeModel
    failing_world: str

    category = "non-theorem"


@dataclass(frozen=True)
class Unknown:
    # comma-separated bounds: the search bound, then the saturation bound
    exhausted: str

    category = "unknown"


Verdict = Theorem | NonTheorem | Unknown


def decide_gl(f: Formula) -> Theorem | NonTheorem:
    """GL validity of a pure-modal formula; raises FragmentError otherwise."""
    out = gl_prove(f)
    if isinstance(out, GLProof):
        return Theorem(out, "gl-tableau")
    return NonTheorem(out, out.root)


def _from_corpus(f: Formula, cs: ConstantSpecification) -> str | None:
    from ..fixtures import corpus

    for name, d, fcs in corpus():
        if d.conclusion == f and fcs.issubset(cs) and check_derivation(d, fcs).ok:
            return name
    return None


def decide(f: Formula, cs: ConstantSpecification = EMPTY_CS,
           cfg: SearchConfig | None = None, use_fixtures: bool = True) -> Verdict:
    """Bounded decision: countermodel search, then certified fixtures, then saturation.

    GL theorems in the pure modal fragment are answered by the tableau first;
    they have no sound countermodel, so this only skips a fruitless search.
    """
    cfg = cfg or SearchConfig()
    start = time.monotonic()
    if not has_proof(f) and not cs.entries:
        out = gl_prove(f)
        if isinstance(out, GLProof):
            return Theorem(out, "gl-tableau")

    found = search(f, cs, cfg)
    if found.model is not None:
        return NonTheorem(found.model, found.world)

    if use_fixtures:
        name = _from_corpus(f, cs)
        if name is not None:
            return Theorem(name, "fixture")

    deadline = start + cfg.time_budget
    cert, bound = saturate(f, cs, cfg.saturation_depth, deadline)
    if cert is not None:
        return Theorem(cert, "saturation")
    return Unknown(f"{found.truncated or 'max_worlds'},{bound}")
