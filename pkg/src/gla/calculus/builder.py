"""Incremental construction of derivations, addressed by formula.

The builder deduplicates lines by formula, so tactics can refer to earlier
results by the formula they proved instead of tracking line numbers. Lines
that rest on fewer hypotheses win when a formula is derived twice.
"""

from __future__ import annotations

from ..syntax import Box, Formula, Imp, Neg
from .derivation import (
    ConstantSpecification, Derivation, EMPTY_CS, Step, deduction_transform,
    hypothesis_dependencies,
)
from .schemas import SchemaId, instantiate, match_axiom, match_schema

__all__ = ["DerivationBuilder", "BuildError"]


class BuildError(ValueError):
    pass


class DerivationBuilder:
    def __init__(self, hypotheses=(), mode: str = "GLA",
                 cs: ConstantSpecification = EMPTY_CS):
        self.mode = mode
        self.cs = cs
        self.hypotheses: list[Formula] = list(hypotheses)
        self.steps: list[Step] = []
        self._deps: list[frozenset[int]] = []
        self._line: dict[Formula, int] = {}

    # -- bookkeeping -----------------------------------------------------

    def _add(self, step: Step, dep: frozenset[int]) -> Formula:
        f = step.formula
        i = self._line.get(f)
        if i is not None and self._deps[i - 1] <= dep:
            return f
        self.steps.append(step)
        self._deps.append(dep)
        if i is None or dep < self._deps[i - 1]:
            self._line[f] = len(self.steps)
        return f

    def line(self, f: Formula) -> int:
        try:
            return self._line[f]
        except KeyError:
            raise BuildError(f"no line proves {f}") from None

    def has(self, f: Formula) -> bool:
        return f in self._line

    def depends(self, f: Formula) -> frozenset[int]:
        return self._deps[self.line(f) - 1]

    def __len__(self) -> int:
        return len(self.steps)

    # -- primitive rules -------------------------------------------------

    def hyp(self, f: Formula) -> Formula:
        for k in range(len(self.hypotheses), 0, -1):
            if self.hypotheses[k - 1] == f:
                return self._add(Step(f, "Hyp", (k,)), frozenset({k}))
        raise BuildError(f"{f} is not a hypothesis")

    def assume(self, f: Formula) -> Formula:
        self.hypotheses.append(f)
        return self.hyp(f)

    def axiom(self, f: Formula, schema: SchemaId | None = None) -> Formula:
        if schema is None:
            m = match_axiom(f, self.mode)
            if m is None:
                raise BuildError(f"{f} is not an axiom instance")
            schema = m.schema
        elif match_schema(f, schema) is None:
            raise BuildError(f"{f} is not an instance of {schema}")
        return self._add(Step(f, "Axiom", schema=schema), frozenset())

    def schema(self, schema: SchemaId, variant: int = 0, **env) -> Formula:
        return self.axiom(instantiate(schema, variant, **env), schema)

    def cs_entry(self, f: Formula) -> Formula:
        return self._add(Step(f, "CS", constant=f.term.name), frozenset())

    def mp(self, major: Formula, minor: Formula | None = None) -> Formula:
        if not isinstance(major, Imp):
            raise BuildError(f"{major} is not an implication")
        minor = major.left if minor is None else minor
        if major.left != minor:
            raise BuildError(f"{minor} does not match the antecedent of {major}")
        i, j = self.line(major), self.line(minor)
        return self._add(Step(major.right, "MP", (i, j)), self._deps[i - 1] | self._deps[j - 1])

    def nec(self, f: Formula) -> Formula:
        i = self.line(f)
        if self._deps[i - 1]:
            raise BuildError(f"cannot necessitate hypothesis-dependent {f}")
        return self._add(Step(Box(f), "Nec", (i,)), frozenset())

    def refl(self, f: Formula) -> Formula:
        if not isinstance(f, Box):
            raise BuildError(f"{f} is not boxed")
        i = self.line(f)
        if self._deps[i - 1]:
            raise BuildError(f"cannot reflect hypothesis-dependent {f}")
        return self._add(Step(f.body, "Refl", (i,)), frozenset())

    def taut(self, f: Formula, premises=()) -> Formula:
        refs = tuple(self.line(p) for p in premises)
        dep = frozenset().union(*(self._deps[r - 1] for r in refs)) if refs else frozenset()
        return self._add(Step(f, "Taut", refs), dep)

    def include(self, d: Derivation) -> Formula:
        """Splice the lines of a hypothesis-free derivation."""
        if d.hypotheses:
            raise BuildError("can only include hypothesis-free derivations")
        proved: list[Formula] = []
        for step in d.steps:
            refs = tuple(self.line(proved[r - 1]) for r in step.refs)
            proved.append(self._add(Step(step.formula, step.rule, refs, step.schema, step.constant),
                                    frozenset()))
        return d.conclusion

    def discharge(self) -> Formula:
        """Deduction theorem on the most recent assumption."""
        d = deduction_transform(Derivation(tuple(self.steps), tuple(self.hypotheses), self.mode))
        self.hypotheses = list(d.hypotheses)
        self.steps = []
        self._deps = []
        self._line = {}
        for step, dep in zip(d.steps, hypothesis_dependencies(d)):
            self.steps.append(step)
            self._deps.append(dep)
            i = self._line.get(step.formula)
            if i is None or dep < self._deps[i - 1]:
                self._line[step.formula] = len(self.steps)
        return d.conclusion

    def build(self, conclusion: Formula | None = None) -> Derivation:
        steps = list(self.steps)
        if conclusion is not None:
            i = self.line(conclusion)
            if i != len(steps):
                # restating a line with its own justification is always valid
                steps.append(steps[i - 1])
        return Derivation(tuple(steps), tuple(self.hypotheses), self.mode)

    # -- propositional tactics ------------------------------------------

    def identity(self, a: Formula) -> Formula:
        aa = Imp(a, a)
        self.schema(SchemaId.P1, A=a, B=aa)
        self.schema(SchemaId.P2, A=a, B=aa, C=a)
        self.schema(SchemaId.P1, A=a, B=a)
        self.mp(self.mp(instantiate(SchemaId.P2, A=a, B=aa, C=a)))
        return aa

    def weaken(self, b: Formula, a: Formula) -> Formula:
        """From ``B`` get ``A -> B``."""
        self.schema(SchemaId.P1, A=b, B=a)
        return self.mp(Imp(b, Imp(a, b)))

    def hs(self, xy: Imp, yz: Imp) -> Formula:
        """From ``X -> Y`` and ``Y -> Z`` get ``X -> Z``."""
        x, y, z = xy.left, xy.right, yz.right
        if yz.left != y:
            raise BuildError(f"cannot chain {xy} with {yz}")
        self.weaken(yz, x)
        p2 = self.schema(SchemaId.P2, A=x, B=y, C=z)
        return self.mp(self.mp(p2, xy))

    def contrapose(self, xy: Imp) -> Formula:
        """From ``X -> Y`` get ``~Y -> ~X``."""
        x, y = xy.left, xy.right
        self.assume(Neg(y))
        self.weaken(Neg(y), x)
        p9 = self.schema(SchemaId.P9, A=x, B=y)
        self.mp(self.mp(p9, xy))
        return self.discharge()

    def ex_falso(self, x: Formula, c: Formula) -> Formula:
        """From ``X`` and ``~X`` get ``C``."""
        nc = Neg(c)
        self.weaken(x, nc)
        self.weaken(Neg(x), nc)
        p9 = self.schema(SchemaId.P9, A=nc, B=x)
        self.mp(self.mp(p9))
        self.schema(SchemaId.P10, A=c)
        return self.mp(Imp(Neg(nc), c))

    def cases(self, p: Formula, b: Formula) -> Formula:
        """From ``p -> B`` and ``~p -> B`` get ``B``."""
        n1 = self.contrapose(Imp(p, b))
        n2 = self.contrapose(Imp(Neg(p), b))
        p9 = self.schema(SchemaId.P9, A=Neg(b), B=Neg(p))
        assert p9.left == n1 and p9.right.left == n2
        self.mp(self.mp(p9))
        self.schema(SchemaId.P10, A=b)
        return self.mp(Imp(Neg(Neg(b)), b))

    def box_mono(self, xy: Imp) -> Formula:
        """From a hypothesis-free ``X -> Y`` get ``[]X -> []Y``."""
        self.nec(xy)
        gl1 = self.schema(SchemaId.GL1, A=xy.left, B=xy.right)
        return self.mp(gl1)
