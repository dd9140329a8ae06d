"""Proof terms and formulas of the mixed provability / explicit-proof language.

Surface syntax (ASCII)::

    formula := disj ("->" formula)?
    disj    := conj ("|" conj)*
    conj    := unary ("&" unary)*
    unary   := "~" unary | "[]" unary | term ":" unary
             | "false" | "true" | UPPER_IDENT | "(" formula ")"
    term    := appt ("+" appt)*
    appt    := bangt ("*" bangt)*
    bangt   := "!" bangt | LOWER_IDENT | "(" term ")"

Lowercase identifiers starting with one of ``u v w x y z`` are proof
variables; every other lowercase identifier is a proof constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

__all__ = [
    "Var", "Const", "App", "Sum", "Bang", "ProofTerm",
    "Atom", "Falsum", "Neg", "And", "Or", "Imp", "Box", "Proof", "Formula",
    "FALSUM", "TRUTH", "ParseError",
    "parse_formula", "parse_term", "print_formula", "print_term",
    "subformulas", "subterms", "subformula_closure", "substitute", "substitute_term",
    "letters", "terms_of", "is_variable_name", "is_propositional", "has_proof", "has_box",
]

VARIABLE_INITIALS = frozenset("uvwxyz")


def is_variable_name(name: str) -> bool:
    return name[:1] in VARIABLE_INITIALS


# -- proof terms -------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class App:
    left: "ProofTerm"
    right: "ProofTerm"

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Sum:
    left: "ProofTerm"
    right: "ProofTerm"

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Bang:
    inner: "ProofTerm"

    def __str__(self) -> str:
        return print_term(self)


ProofTerm = Union[Var, Const, App, Sum, Bang]


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Falsum:
    def __str__(self) -> str:
        return "false"


@dataclass(frozen=True)
class Neg:
    body: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Box:
    body: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Proof:
    term: ProofTerm
    body: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


Formula = Union[Atom, Falsum, Neg, And, Or, Imp, Box, Proof]

FALSUM = Falsum()
TRUTH = Neg(FALSUM)


# -- lexer -------------------------------------------------------------------

class ParseError(ValueError):
    """Raised on malformed input; carries the character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op>->|\[\]|[~&|:()!*+])|(?P<upper>[A-Z][A-Za-z0-9_']*)|(?P<lower>[a-z][A-Za-z0-9_']*))"
)
_TRAILING_WS = re.compile(r"\s*$")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while not _TRAILING_WS.match(text, pos):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, value: str) -> bool:
        kind, val, _ = self.tok
        return kind == "op" and val == value

    def expect(self, value: str, what: str | None = None) -> None:
        if not self.peek(value):
            self.fail(what or f"'{value}'")
        self.i += 1

    def fail(self, expected: str):
        kind, val, pos = self.tok
        found = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"expected {expected}, found {found}", pos, self.text)

    def done(self) -> None:
        if self.tok[0] != "eof":
            self.fail("end of input")

    # formulas
    def formula(self) -> Formula:
        left = self.disj()
        if self.peek("->"):
            self.i += 1
            return Imp(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek("|"):
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek("&"):
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, val, _ = self.tok
        if kind == "op" and val == "~":
            self.i += 1
            return Neg(self.unary())
        if kind == "op" and val == "[]":
            self.i += 1
            return Box(self.unary())
        if kind == "upper":
            self.i += 1
            return Atom(val)
        if kind == "lower" and val in ("false", "true"):
            self.i += 1
            return FALSUM if val == "false" else TRUTH
        if kind == "lower" or (kind == "op" and val == "!"):
            t = self.term()
            self.expect(":", "':' after proof term")
            return Proof(t, self.unary())
        if kind == "op" and val == "(":
            # "(" opens either a parenthesized term before ':' or a formula
            save = self.i
            try:
                t = self.term()
                self.expect(":")
            except ParseError:
                self.i = save
            else:
                return Proof(t, self.unary())
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        self.fail("a formula")

    # terms
    def term(self) -> ProofTerm:
        t = self.appt()
        while self.peek("+"):
            self.i += 1
            t = Sum(t, self.appt())
        return t

    def appt(self) -> ProofTerm:
        t = self.bangt()
        while self.peek("*"):
            self.i += 1
            t = App(t, self.bangt())
        return t

    def bangt(self) -> ProofTerm:
        kind, val, _ = self.tok
        if kind == "op" and val == "!":
            self.i += 1
            return Bang(self.bangt())
        if kind == "lower" and val not in ("false", "true"):
            self.i += 1
            return Var(val) if is_variable_name(val) else Const(val)
        if kind == "op" and val == "(":
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        self.fail("a proof term")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_term(text: str) -> ProofTerm:
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


# -- printing ----------------------------------------------------------------

_PREC = {Imp: 1, Or: 2, And: 3}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 4)


def print_term(t: ProofTerm) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, Bang):
        inner = print_term(t.inner)
        return "!" + (f"({inner})" if isinstance(t.inner, (App, Sum)) else inner)
    if isinstance(t, App):
        left = print_term(t.left)
        if isinstance(t.left, Sum):
            left = f"({left})"
        right = print_term(t.right)
        if isinstance(t.right, (App, Sum)):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(t, Sum):
        right = print_term(t.right)
        if isinstance(t.right, Sum):
            right = f"({right})"
        return f"{print_term(t.left)}+{right}"
    raise TypeError(f"not a proof term: {t!r}")


def print_formula(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses the grammar needs."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, (Neg, Box)):
        body = print_formula(f.body)
        if _prec(f.body) < 4:
            body = f"({body})"
        return ("~" if isinstance(f, Neg) else "[]") + body
    if isinstance(f, Proof):
        term = print_term(f.term)
        if isinstance(f.term, (App, Sum)):
            term = f"({term})"
        body = print_formula(f.body)
        if _prec(f.body) < 4:
            body = f"({body})"
        return f"{term}:{body}"
    if isinstance(f, Imp):
        left = print_formula(f.left)
        if _prec(f.left) <= 1:
            left = f"({left})"
        return f"{left} -> {print_formula(f.right)}"
    if isinstance(f, (And, Or)):
        p = _prec(f)
        op = " & " if isinstance(f, And) else " | "
        left = print_formula(f.left)
        if _prec(f.left) < p:
            left = f"({left})"
        right = print_formula(f.right)
        if _prec(f.right) <= p:
            right = f"({right})"
        return left + op + right
    raise TypeError(f"not a formula: {f!r}")


# -- traversal ---------------------------------------------------------------

def subterms(t: ProofTerm) -> Iterator[ProofTerm]:
    yield t
    if isinstance(t, (App, Sum)):
        yield from subterms(t.left)
        yield from subterms(t.right)
    elif isinstance(t, Bang):
        yield from subterms(t.inner)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over ``f`` and every subformula (with repeats)."""
    yield f
    if isinstance(f, (Neg, Box, Proof)):
        yield from subformulas(f.body)
    elif isinstance(f, (And, Or, Imp)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def terms_of(f: Formula) -> set[ProofTerm]:
    """All proof terms occurring in ``f`` together with their subterms."""
    out: set[ProofTerm] = set()
    for g in subformulas(f):
        if isinstance(g, Proof):
            out.update(subterms(g.term))
    return out


def subformula_closure(f: Formula) -> tuple[frozenset, frozenset]:
    return frozenset(subformulas(f)), frozenset(terms_of(f))


def letters(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def has_proof(f: Formula) -> bool:
    return any(isinstance(g, Proof) for g in subformulas(f))


def has_box(f: Formula) -> bool:
    return any(isinstance(g, Box) for g in subformulas(f))


def is_propositional(f: Formula) -> bool:
    return not (has_proof(f) or has_box(f))


# -- substitution ------------------------------------------------------------

def substitute_term(t: ProofTerm, map_vars: Mapping[str, ProofTerm]) -> ProofTerm:
    if isinstance(t, Var):
        return map_vars.get(t.name, t)
    if isinstance(t, Const):
        return t
    if isinstance(t, App):
        return App(substitute_term(t.left, map_vars), substitute_term(t.right, map_vars))
    if isinstance(t, Sum):
        return Sum(substitute_term(t.left, map_vars), substitute_term(t.right, map_vars))
    if isinstance(t, Bang):
        return Bang(substitute_term(t.inner, map_vars))
    raise TypeError(f"not a proof term: {t!r}")


def substitute(f: Formula, map_props: Mapping[str, Formula] | None = None,
               map_vars: Mapping[str, ProofTerm] | None = None) -> Formula:
    """Simultaneously replace sentence letters and proof variables."""
    map_props = map_props or {}
    map_vars = map_vars or {}

    def go(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return map_props.get(g.name, g)
        if isinstance(g, Falsum):
            return g
        if isinstance(g, Neg):
            return Neg(go(g.body))
        if isinstance(g, Box):
            return Box(go(g.body))
        if isinstance(g, Proof):
            return Proof(substitute_term(g.term, map_vars), go(g.body))
        return type(g)(go(g.left), go(g.right))

    return go(f)
