"""Exhaustive bounded countermodel search.

Models are enumerated in a fixed canonical order: world count, then the
accessibility relation, then the valuation, then the evidence seed. Within
one relation and seed every valuation is evaluated at once: the truth value
of a closure formula at a world is an integer whose bit ``v`` is the value
under valuation number ``v``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ..calculus import ConstantSpecification, EMPTY_CS
from ..semantics import EVAL_MODES, KripkeModel, evidence_set, failing_worlds, h_set, validate_model
from ..syntax import And, Atom, Box, Falsum, Formula, Imp, Neg, Or, Proof
from .closure import ClosureSet, closure_set

__all__ = ["SearchConfig", "SearchOutcome", "countermodel_search", "search", "gl_relations"]

# valuations handled per big-integer block (bits of the valuation index)
_BLOCK_BITS = 14


@dataclass(frozen=True)
class SearchConfig:
    max_worlds: int = 4
    max_seed: int = 8
    eval_mode: str = "all_worlds"
    saturation_depth: int = 3
    time_budget: float = 30.0

    def __post_init__(self):
        if self.eval_mode not in EVAL_MODES:
            raise ValueError(f"unknown evaluation mode {self.eval_mode!r}")
        for name in ("max_worlds", "max_seed", "saturation_depth", "time_budget"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    model: KripkeModel | None
    world: str | None
    # bound that kept the search from covering its whole space, if any
    truncated: str | None
    models_examined: int

    @property
    def found(self) -> bool:
        return self.model is not None


def gl_relations(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Strict partial orders on 0..n-1 where 0 sees everything, i ≺ j only if i < j.

    Every finite rooted transitive irreflexive frame is isomorphic to one of
    these (number worlds along a linear extension).
    """
    optional = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    base = {(0, j) for j in range(1, n)}
    for mask in range(1 << len(optional)):
        rel = base | {p for k, p in enumerate(optional) if mask >> k & 1}
        if all((i, l) in rel for (i, j) in rel for (k, l) in rel if j == k):
            yield frozenset(rel)


def _bit_pattern(bit: int, width: int) -> int:
    """Integer over ``2**width`` valuations with bit v set iff bit ``bit`` of v is set."""
    half = 1 << bit
    block = ((1 << half) - 1) << half
    period = half << 1
    total = 1 << width
    out = block
    span = period
    while span < total:
        out |= out << span
        span <<= 1
    return out & ((1 << total) - 1)


class _Space:
    def __init__(self, goal: Formula, cs: ConstantSpecification, cl: ClosureSet, cfg: SearchConfig):
        self.goal = goal
        self.cs = cs
        self.cl = cl
        self.cfg = cfg
        self.cs_pairs = [(c, a) for c, a in cs]
        self.free_pairs = [p for p in cl.proof_pairs if p not in set(self.cs_pairs)]
        self.soundness = sorted(h_set(goal).union(*(h_set(f) for f in cs.formulas())),
                                key=str)
        self.required = cs.formulas()
        self.index = {f: i for i, f in enumerate(cl.formulas)}

    def assignments(self) -> tuple[list[tuple[frozenset, frozenset]], bool]:
        """Distinct closed evidence assignments on the closure pairs.

        Returns ``(seed, true_pairs)`` for the first seed (in canonical order)
        inducing each assignment, and whether the seed bound cut the space.
        """
        seen: dict[frozenset, frozenset] = {}
        out = []
        k_max = min(self.cfg.max_seed, len(self.free_pairs))
        truncated = k_max < len(self.free_pairs)
        for k in range(k_max + 1):
            for combo in combinations(range(len(self.free_pairs)), k):
                seed = frozenset(self.cs_pairs) | {self.free_pairs[i] for i in combo}
                true = frozenset(p for p in self.cl.proof_pairs
                                 if p[1] in evidence_set(seed, p[0]))
                if true not in seen:
                    seen[true] = seed
                    out.append((seed, true))
        return out, truncated


def _evaluate(space: _Space, n: int, succ: list[list[int]], true_pairs: frozenset,
              atoms: dict, full: int) -> list[list[int]]:
    vals: list[list[int]] = []
    index = space.index
    for f in space.cl.formulas:
        if isinstance(f, Atom):
            row = atoms[f.name]
        elif isinstance(f, Falsum):
            row = [0] * n
        elif isinstance(f, Neg):
            b = vals[index[f.body]]
            row = [full ^ x for x in b]
        elif isinstance(f, And):
            a, b = vals[index[f.left]], vals[index[f.right]]
            row = [x & y for x, y in zip(a, b)]
        elif isinstance(f, Or):
            a, b = vals[index[f.left]], vals[index[f.right]]
            row = [x | y for x, y in zip(a, b)]
        elif isinstance(f, Imp):
            a, b = vals[index[f.left]], vals[index[f.right]]
            row = [(full ^ x) | y for x, y in zip(a, b)]
        elif isinstance(f, Box):
            b = vals[index[f.body]]
            row = []
            for w in range(n):
                acc = full
                for v in succ[w]:
                    acc &= b[v]
                row.append(acc)
        elif isinstance(f, Proof):
            if (f.term, f.body) in true_pairs:
                acc = full
                for x in vals[index[f.body]]:
                    acc &= x
            else:
                acc = 0
            row = [acc] * n
        else:
            raise TypeError(f"not a formula: {f!r}")
        vals.append(row)
    return vals


def _value_at(space: _Space, vals, f: Formula, w: int, full: int) -> int:
    if f in space.index:
        return vals[space.index[f]][w]
    if isinstance(f, Imp):  # H-members are []G -> G over closure formulas
        return (full ^ _value_at(space, vals, f.left, w, full)) | _value_at(space, vals, f.right, w, full)
    raise KeyError(f)


def _build_model(space: _Space, n: int, rel, valuation: int, seed) -> KripkeModel:
    letters = space.cl.letters
    names = [str(i + 1) for i in range(n)]
    val = {}
    for li, letter in enumerate(letters):
        val[letter] = frozenset(names[w] for w in range(n) if valuation >> (li * n + w) & 1)
    return KripkeModel(tuple(names), frozenset((names[i], names[j]) for i, j in rel), names[0],
                       val, frozenset(seed))


def search(f: Formula, cs: ConstantSpecification = EMPTY_CS,
           cfg: SearchConfig | None = None) -> SearchOutcome:
    cfg = cfg or SearchConfig()
    deadline = time.monotonic() + cfg.time_budget
    cl = closure_set(f, cs)
    space = _Space(f, cs, cl, cfg)
    assignments, seed_cut = space.assignments()
    truncated = "max_seed" if seed_cut else None
    examined = 0
    nl = len(cl.letters)

    for n in range(1, cfg.max_worlds + 1):
        width = n * nl
        inner = min(width, _BLOCK_BITS)
        full = (1 << (1 << inner)) - 1
        patterns = [_bit_pattern(b, inner) for b in range(inner)]
        for rel in gl_relations(n):
            succ = [[j for j in range(n) if (i, j) in rel] for i in range(n)]
            for block in range(1 << (width - inner)):
                atoms = {}
                for li, letter in enumerate(cl.letters):
                    row = []
                    for w in range(n):
                        bit = li * n + w
                        if bit < inner:
                            row.append(patterns[bit])
                        else:
                            row.append(full if block >> (bit - inner) & 1 else 0)
                    atoms[letter] = row
                best = None
                for seed, true_pairs in assignments:
                    if time.monotonic() > deadline:
                        return SearchOutcome(None, None, "time_budget", examined)
                    examined += 1
                    vals = _evaluate(space, n, succ, true_pairs, atoms, full)
                    ok = full
                    for h in space.soundness:
                        ok &= _value_at(space, vals, h, 0, full)
                    for r in space.required:
                        ok &= vals[space.index[r]][0]
                    goal_row = vals[space.index[f]]
                    if cfg.eval_mode == "root_only":
                        bad = full ^ goal_row[0]
                    else:
                        bad = 0
                        for x in goal_row:
                            bad |= full ^ x
                    hit = ok & bad
                    if hit:
                        low = (hit & -hit).bit_length() - 1
                        if best is None or low < best[0]:
                            best = (low, seed)
                if best is not None:
                    valuation = (block << inner) | best[0]
                    model = _build_model(space, n, rel, valuation, best[1])
                    return SearchOutcome(model, _failing_world(model, f, cfg.eval_mode),
                                         None, examined)
    return SearchOutcome(None, None, truncated, examined)


def _failing_world(m: KripkeModel, f: Formula, mode: str) -> str:
    if mode == "root_only":
        return m.root
    return failing_worlds(m, f)[0]


def countermodel_search(f: Formula, cs: ConstantSpecification = EMPTY_CS,
                        cfg: SearchConfig | None = None) -> tuple[KripkeModel, str] | None:
    """First canonical sound CS-model (within bounds) where ``f`` fails."""
    out = search(f, cs, cfg)
    if out.model is None:
        return None
    report = validate_model(out.model, [f], cs)
    assert report.ok, report.failures
    return out.model, out.world
