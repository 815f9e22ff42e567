"""Formulas of the propositional language with a primitive conditional.

The concrete grammar, tightest binding first::

    ~        negation
    &        conjunction        (left-associative)
    |        disjunction        (left-associative)
    ->       conditional        (right-associative)
    <-> =>   biconditional, material conditional (right-associative)

``T`` and ``F`` are the constants, atoms are C-style identifiers.  ``<->`` and
``=>`` are sugar and never survive parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import FormulaSyntaxError

__all__ = [
    "Formula", "Atom", "Top", "Bot", "Not", "And", "Or", "Cond",
    "TOP", "BOT", "iff", "material",
    "parse", "render", "as_formula", "normalize_for_calculus",
    "atoms", "complexity", "depth", "subformulas",
]


class Formula:
    """Common base of the AST node classes.  Nodes cache their hash, since
    formulas are used heavily as set members and dictionary keys."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("Atom", self.name)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Top(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Bot(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Not(Formula):
    sub: Formula
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("Not", self.sub)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("And", self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("Or", self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Cond(Formula):
    antecedent: Formula
    consequent: Formula
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("Cond", self.antecedent, self.consequent)))

    def __hash__(self) -> int:
        return self._hash


TOP = Top()
BOT = Bot()

FormulaLike = Union[Formula, str]


def iff(left: Formula, right: Formula) -> Formula:
    return And(Cond(left, right), Cond(right, left))


def material(left: Formula, right: Formula) -> Formula:
    return Or(Not(left), right)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(<->|->|=>|[~&|()])|([A-Za-z_][A-Za-z0-9_]*))")
_EOF = "end of input"
_PRIMARY_START = frozenset({"~", "(", "T", "F", "identifier"})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            match = _TOKEN.match(text, pos)
            if match is None:
                rest = text[pos:]
                if not rest.strip():
                    break
                bad = pos + len(rest) - len(rest.lstrip())
                raise FormulaSyntaxError(
                    f"unknown token {text[bad]!r}", self._byte(bad), _PRIMARY_START | {"&", "|", "->", "<->", "=>", ")"}
                )
            start = match.start(1) if match.group(1) else match.start(2)
            if match.group(1):
                self.tokens.append((match.group(1), match.group(1), start))
            else:
                word = match.group(2)
                kind = word if word in ("T", "F") else "identifier"
                self.tokens.append((kind, word, start))
            pos = match.end()
        self.tokens.append((_EOF, "", len(text)))
        self.index = 0

    def _byte(self, char_index: int) -> int:
        return len(self.text[:char_index].encode("utf-8"))

    def peek(self) -> str:
        return self.tokens[self.index][0]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, expected: frozenset[str]):
        kind, value, start = self.tokens[self.index]
        found = "end of input" if kind == _EOF else repr(value)
        raise FormulaSyntaxError(f"unexpected {found}", self._byte(start), expected)

    def parse(self) -> Formula:
        result = self.biconditional()
        if self.peek() != _EOF:
            self.fail(frozenset({"&", "|", "->", "<->", "=>", _EOF}))
        return result

    def biconditional(self) -> Formula:
        left = self.conditional()
        kind = self.peek()
        if kind == "<->":
            self.advance()
            return iff(left, self.biconditional())
        if kind == "=>":
            self.advance()
            return material(left, self.biconditional())
        return left

    def conditional(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.advance()
            return Cond(left, self.conditional())
        return left

    def disjunction(self) -> Formula:
        result = self.conjunction()
        while self.peek() == "|":
            self.advance()
            result = Or(result, self.conjunction())
        return result

    def conjunction(self) -> Formula:
        result = self.unary()
        while self.peek() == "&":
            self.advance()
            result = And(result, self.unary())
        return result

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "~":
            self.advance()
            return Not(self.unary())
        if kind == "(":
            self.advance()
            inner = self.biconditional()
            if self.peek() != ")":
                self.fail(frozenset({")", "&", "|", "->", "<->", "=>"}))
            self.advance()
            return inner
        if kind == "T":
            self.advance()
            return TOP
        if kind == "F":
            self.advance()
            return BOT
        if kind == "identifier":
            return Atom(self.advance()[1])
        self.fail(_PRIMARY_START)


def parse(text: str) -> Formula:
    """Parse ``text`` into a desugared formula.

    >>> parse("p <-> q")
    And(left=Cond(antecedent=Atom(name='p'), consequent=Atom(name='q')), right=Cond(antecedent=Atom(name='q'), consequent=Atom(name='p')))
    """
    return _Parser(text).parse()


def as_formula(value: FormulaLike) -> Formula:
    if isinstance(value, Formula):
        return value
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"expected a Formula or a string, got {type(value).__name__}")


# ---------------------------------------------------------------- printing

def _level(f: Formula) -> int:
    if isinstance(f, Cond):
        return 1
    if isinstance(f, Or):
        return 2
    if isinstance(f, And):
        return 3
    return 4


def _wrap(f: Formula, parens: bool) -> str:
    text = render(f)
    return f"({text})" if parens else text


def render(f: Formula) -> str:
    """Print with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, Not):
        return "~" + _wrap(f.sub, _level(f.sub) < 4)
    if isinstance(f, And):
        return f"{_wrap(f.left, _level(f.left) < 3)} & {_wrap(f.right, _level(f.right) <= 3)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, _level(f.left) < 2)} | {_wrap(f.right, _level(f.right) <= 2)}"
    if isinstance(f, Cond):
        return f"{_wrap(f.antecedent, _level(f.antecedent) <= 1)} -> {render(f.consequent)}"
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- structure

def normalize_for_calculus(f: Formula) -> Formula:
    """Rewrite every disjunction as a negated conjunction of negations."""
    if isinstance(f, (Atom, Top, Bot)):
        return f
    if isinstance(f, Not):
        return Not(normalize_for_calculus(f.sub))
    if isinstance(f, And):
        return And(normalize_for_calculus(f.left), normalize_for_calculus(f.right))
    if isinstance(f, Or):
        return Not(And(Not(normalize_for_calculus(f.left)), Not(normalize_for_calculus(f.right))))
    if isinstance(f, Cond):
        return Cond(normalize_for_calculus(f.antecedent), normalize_for_calculus(f.consequent))
    raise TypeError(f"not a formula: {f!r}")


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield ``f`` and all its subformulas, parents before children."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.sub)
        elif isinstance(node, (And, Or)):
            stack.extend((node.right, node.left))
        elif isinstance(node, Cond):
            stack.extend((node.consequent, node.antecedent))


def atoms(*formulas: FormulaLike) -> list[str]:
    """Sorted distinct atom names occurring in any of the formulas."""
    names = set()
    for f in formulas:
        names.update(node.name for node in subformulas(as_formula(f)) if isinstance(node, Atom))
    return sorted(names)


def complexity(f: FormulaLike) -> int:
    """Number of connective occurrences."""
    return sum(1 for node in subformulas(as_formula(f)) if not isinstance(node, (Atom, Top, Bot)))


def depth(f: FormulaLike) -> int:
    f = as_formula(f)
    if isinstance(f, Not):
        return 1 + depth(f.sub)
    if isinstance(f, (And, Or)):
        return 1 + max(depth(f.left), depth(f.right))
    if isinstance(f, Cond):
        return 1 + max(depth(f.antecedent), depth(f.consequent))
    return 0
