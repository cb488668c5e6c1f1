"""Propositional acceptance conditions: AST, parser, printer and classification.

Concrete syntax (whitespace-insensitive)::

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := or ("->" imp)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "(" formula ")" | "T" | "F" | IDENT

``&``, ``|`` and ``<->`` associate to the left, ``->`` to the right.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Collection, Iterator, Mapping, Optional

from .errors import CapExceededError, ParseError, UndeclaredArgumentError
from .interpretation import TruthValue

#: Maximum number of free atoms :func:`classify` will enumerate.
DEFAULT_ATOM_CAP = 20


class Formula:
    """Base class of the formula AST. Nodes are immutable and hashable."""

    __slots__ = ()

    def __str__(self):
        return to_text(self)

    # Operator sugar keeps tests and programmatic construction readable.
    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True, slots=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


TOP = Const(True)
BOTTOM = Const(False)


class FormulaClass(enum.Enum):
    TAUTOLOGY = "tautology"
    UNSATISFIABLE = "unsatisfiable"
    CONTINGENT = "contingent"


def conjunction(parts) -> Formula:
    """Left-nested conjunction of *parts*; ``T`` when empty."""
    parts = list(parts)
    if not parts:
        return TOP
    result = parts[0]
    for p in parts[1:]:
        result = And(result, p)
    return result


# --------------------------------------------------------------------------
# Traversal


def atoms(phi: Formula) -> tuple[str, ...]:
    """Atom names of *phi* in order of first occurrence (left to right)."""
    seen: dict[str, None] = {}
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            seen.setdefault(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append(node.right)
            stack.append(node.left)
    return tuple(seen)


def evaluate(phi: Formula, assignment: Mapping[str, bool]) -> bool:
    """Two-valued evaluation. Every atom of *phi* must be in *assignment*."""
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Atom):
        return assignment[phi.name]
    if isinstance(phi, Not):
        return not evaluate(phi.child, assignment)
    if isinstance(phi, And):
        return evaluate(phi.left, assignment) and evaluate(phi.right, assignment)
    if isinstance(phi, Or):
        return evaluate(phi.left, assignment) or evaluate(phi.right, assignment)
    if isinstance(phi, Implies):
        return (not evaluate(phi.left, assignment)) or evaluate(phi.right, assignment)
    if isinstance(phi, Iff):
        return evaluate(phi.left, assignment) == evaluate(phi.right, assignment)
    raise TypeError(f"not a formula node: {phi!r}")


def partial_valuation(phi: Formula, v: Mapping[str, TruthValue]) -> Formula:
    """Replace atoms decided by *v* with ``T``/``F``; undecided atoms stay.

    No simplification is performed, so ``a & !c`` under ``a=t, c=f`` becomes
    ``T & !F``.
    """
    if isinstance(phi, Const):
        return phi
    if isinstance(phi, Atom):
        try:
            value = v[phi.name]
        except KeyError:
            raise UndeclaredArgumentError(
                f"atom {phi.name!r} is outside the interpretation's domain"
            ) from None
        if value is TruthValue.T:
            return TOP
        if value is TruthValue.F:
            return BOTTOM
        return phi
    if isinstance(phi, Not):
        return Not(partial_valuation(phi.child, v))
    left = partial_valuation(phi.left, v)
    right = partial_valuation(phi.right, v)
    return type(phi)(left, right)


def completions(names: Collection[str]) -> Iterator[dict[str, bool]]:
    names = list(names)
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def classify(phi: Formula, cap: int = DEFAULT_ATOM_CAP) -> FormulaClass:
    """Tautology / unsatisfiable / contingent, by enumerating all completions."""
    free = atoms(phi)
    if len(free) > cap:
        raise CapExceededError("formula atom count", len(free), cap)
    seen_true = seen_false = False
    for assignment in completions(free):
        if evaluate(phi, assignment):
            seen_true = True
        else:
            seen_false = True
        if seen_true and seen_false:
            return FormulaClass.CONTINGENT
    return FormulaClass.TAUTOLOGY if seen_true else FormulaClass.UNSATISFIABLE


# --------------------------------------------------------------------------
# Printing

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6, Const: 6}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def _prec(phi):
    return _PREC[type(phi)]


def to_text(phi: Formula) -> str:
    """Canonical text with the fewest parentheses that still round-trip."""
    if isinstance(phi, Const):
        return "T" if phi.value else "F"
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Not):
        inner = to_text(phi.child)
        return "!" + (f"({inner})" if _prec(phi.child) < _PREC[Not] else inner)
    kind = type(phi)
    p = _PREC[kind]
    left, right = to_text(phi.left), to_text(phi.right)
    if kind is Implies:
        wrap_left = _prec(phi.left) <= p
        wrap_right = _prec(phi.right) < p
    else:
        wrap_left = _prec(phi.left) < p
        wrap_right = _prec(phi.right) <= p
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {_SYMBOL[kind]} {right}"


def to_unicode(phi: Formula) -> str:
    """Human-facing rendering with logic symbols (not re-parseable)."""
    text = to_text(phi)
    for ascii_op, sym in (("<->", "↔"), ("->", "→"), ("&", "∧"), ("|", "∨"), ("!", "¬")):
        text = text.replace(ascii_op, sym)
    return re.sub(r"\bT\b", "⊤", re.sub(r"\bF\b", "⊥", text))


# --------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op><->|->|[!&|()])|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<bad>\S))"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "op", "ident" or "end"
    text: str
    column: int  # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", column=m.start("bad") + 1)
        kind = "op" if m.group("op") is not None else "ident"
        tokens.append(_Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    tokens.append(_Token("end", "end of input", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, declared: Optional[Collection[str]]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.declared = declared

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def fail(self, expected: str):
        raise ParseError(f"expected {expected}, found {self.tok.text!r}", column=self.tok.column)

    def parse(self) -> Formula:
        phi = self.iff()
        if self.tok.kind != "end":
            self.fail("an operator or end of input")
        return phi

    def iff(self):
        phi = self.imp()
        while self.accept("<->"):
            phi = Iff(phi, self.imp())
        return phi

    def imp(self):
        phi = self.or_()
        if self.accept("->"):
            return Implies(phi, self.imp())
        return phi

    def or_(self):
        phi = self.and_()
        while self.accept("|"):
            phi = Or(phi, self.and_())
        return phi

    def and_(self):
        phi = self.unary()
        while self.accept("&"):
            phi = And(phi, self.unary())
        return phi

    def unary(self):
        tok = self.tok
        if self.accept("!"):
            return Not(self.unary())
        if self.accept("("):
            phi = self.iff()
            if not self.accept(")"):
                self.fail("')'")
            return phi
        if tok.kind == "ident":
            self.i += 1
            if tok.text == "T":
                return TOP
            if tok.text == "F":
                return BOTTOM
            if self.declared is not None and tok.text not in self.declared:
                raise UndeclaredArgumentError(
                    f"undeclared atom {tok.text!r}", column=tok.column
                )
            return Atom(tok.text)
        self.fail("'!', '(', 'T', 'F' or an argument name")


def parse_formula(text: str, declared_atoms: Optional[Collection[str]] = None) -> Formula:
    """Parse *text*; when *declared_atoms* is given every atom must be in it."""
    return _Parser(text, declared_atoms).parse()
