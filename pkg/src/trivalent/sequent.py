"""Three-sided sequents and backward proof search for the DF and CC calculi.

A sequent ``G | D | S`` is satisfied by a valuation that gives value 0 to some
member of G, 1/2 to some member of D, or 1 to some member of S.  Search
applies rules backwards until every leaf is an axiom (a derivation) or some
leaf has no compound formula left (a countermodel is read off that branch).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import NoRuleError, TrivalentError
from .semantics import HALF, ONE, ZERO, Conditional, LogicConfig, TruthValue, _evaluate, coerce_valuation
from .syntax import And, Atom, Bot, Cond, Formula, FormulaLike, Not, Or, Top, as_formula, atoms, complexity, \
    normalize_for_calculus
from .tableau import LogicLike, calculus_logic

__all__ = [
    "ThreeSidedSequent", "SearchNode", "Derivation", "Countermodel", "POSITIONS",
    "is_axiom", "axiom_name", "expand_sequent", "rule_name", "search", "extract_countermodel", "derives",
    "sequent_satisfied", "derivation_to_json", "render_derivation",
]

POSITIONS = ("gamma", "delta", "sigma")
_POSITION_VALUE = (ZERO, HALF, ONE)
_SUFFIX = ("0", "1/2", "1")


def _fmt(f: Formula) -> str:
    text = str(f)
    return f"({text})" if "|" in text else text


@dataclass(frozen=True)
class ThreeSidedSequent:
    gamma: frozenset[Formula]
    delta: frozenset[Formula]
    sigma: frozenset[Formula]

    def __init__(self, gamma: Iterable[FormulaLike] = (), delta: Iterable[FormulaLike] = (),
                 sigma: Iterable[FormulaLike] = ()):
        for name, part in zip(POSITIONS, (gamma, delta, sigma)):
            if isinstance(part, (str, Formula)):
                part = [part]
            object.__setattr__(self, name, frozenset(as_formula(f) for f in part))

    @classmethod
    def _of(cls, gamma: frozenset, delta: frozenset, sigma: frozenset) -> "ThreeSidedSequent":
        # trusted constructor for frozensets of formulas
        new = object.__new__(cls)
        object.__setattr__(new, "gamma", gamma)
        object.__setattr__(new, "delta", delta)
        object.__setattr__(new, "sigma", sigma)
        return new

    @classmethod
    def parse(cls, text: str, separator: str = ";") -> "ThreeSidedSequent":
        """Read ``"G1, G2 ; D1 ; S1"``: positions split by ``separator``, formulas by commas."""
        parts = text.split(separator)
        if len(parts) != 3:
            raise ValueError(f"a three-sided sequent needs exactly three positions separated by {separator!r}")
        return cls(*([f for f in (x.strip() for x in part.split(",")) if f] for part in parts))

    def positions(self) -> tuple[frozenset[Formula], frozenset[Formula], frozenset[Formula]]:
        return self.gamma, self.delta, self.sigma

    def replace(self, position: int, remove: Formula | None = None, add: Iterable[Formula] = ()) -> "ThreeSidedSequent":
        parts = list(self.positions())
        if remove is not None:
            parts[position] = parts[position] - {remove}
        parts[position] = parts[position] | frozenset(add)
        return ThreeSidedSequent._of(*parts)

    def atoms(self) -> list[str]:
        return atoms(*self.gamma, *self.delta, *self.sigma)

    def union(self, other: "ThreeSidedSequent") -> "ThreeSidedSequent":
        return ThreeSidedSequent._of(self.gamma | other.gamma, self.delta | other.delta, self.sigma | other.sigma)

    def __str__(self) -> str:
        return " | ".join(", ".join(sorted(map(_fmt, part))) or "∅" for part in self.positions())


# ---------------------------------------------------------------- axioms and rules

def axiom_name(s: ThreeSidedSequent) -> str | None:
    """Name of the axiom ``s`` instantiates, or None."""
    if s.gamma & s.delta & s.sigma:
        return "SRef"
    if any(isinstance(f, Bot) for f in s.gamma):
        return "bot-0"
    if any(isinstance(f, Top) for f in s.sigma):
        return "top-1"
    return None


def is_axiom(s: ThreeSidedSequent) -> bool:
    return axiom_name(s) is not None


def rule_name(principal: Formula, position: int) -> str:
    if isinstance(principal, Not):
        head = "neg"
    elif isinstance(principal, And):
        head = "and"
    elif isinstance(principal, Cond):
        head = "cond"
    else:
        raise NoRuleError(f"no rule introduces {principal}")
    return f"{head}-{_SUFFIX[position]}"


AND_HALF_RULES = ("invertible", "printed")


def expand_sequent(s: ThreeSidedSequent, principal: FormulaLike, position: int | str,
                   logic: LogicLike = Conditional.CC, *, and_half: str = "invertible") -> list[ThreeSidedSequent]:
    """Premises of the rule that introduces ``principal`` at ``position`` of ``s``.

    ``and_half`` picks the conjunction rule for the middle position.  The default
    ("invertible") has premises ``D,A,B``; ``D,A | S,A``; ``D,B | S,B``.  The
    alternative ("printed") has ``D,A | S,B``; ``D,B | S,A``; ``D,A,B``, which is
    sound but loses valid sequents such as ``p, q | p, p & q | q``.
    """
    logic = calculus_logic(logic)
    principal = as_formula(principal)
    pos = POSITIONS.index(position) if isinstance(position, str) else position
    if principal not in s.positions()[pos]:
        raise ValueError(f"{principal} does not occur in position {POSITIONS[pos]} of {s}")
    rest = s.replace(pos, remove=principal)
    g, d, sg = rest.positions()

    def make(gamma=(), delta=(), sigma=()) -> ThreeSidedSequent:
        return ThreeSidedSequent._of(g.union(gamma), d.union(delta), sg.union(sigma))

    if isinstance(principal, Not):
        a = principal.sub
        return [(make(sigma=[a]), make(delta=[a]), make(gamma=[a]))[pos]]
    if isinstance(principal, And):
        a, b = principal.left, principal.right
        if pos == 0:
            return [make(gamma=[a, b])]
        if pos == 2:
            return [make(sigma=[a]), make(sigma=[b])]
        if and_half == "invertible":
            return [make(delta=[a], sigma=[a]), make(delta=[b], sigma=[b]), make(delta=[a, b])]
        if and_half == "printed":
            return [make(delta=[a], sigma=[b]), make(delta=[b], sigma=[a]), make(delta=[a, b])]
        raise ValueError(f"and_half must be one of {AND_HALF_RULES}")
    if isinstance(principal, Cond):
        a, b = principal.antecedent, principal.consequent
        if logic is Conditional.CC:
            if pos == 0:
                return [make(delta=[a], sigma=[a]), make(gamma=[b])]
            if pos == 1:
                return [make(gamma=[a], delta=[b])]
            return [make(delta=[a], sigma=[a]), make(sigma=[b])]
        if pos == 0:
            return [make(sigma=[a]), make(gamma=[b])]
        if pos == 1:
            return [make(gamma=[a], delta=[a, b])]
        return [make(sigma=[a]), make(sigma=[b])]
    if isinstance(principal, Or):
        raise NoRuleError("no rule for disjunction; pass inputs through normalize_for_calculus")
    raise NoRuleError(f"{principal} is atomic; no rule applies")


_ARITY = {
    Not: (1, 1, 1),
    And: (1, 3, 2),
    Conditional.CC: (2, 1, 2),
    Conditional.DF: (2, 1, 2),
}
_CONNECTIVE_RANK = {Not: 0, And: 1, Cond: 2}
_POSITION_RANK = (2, 1, 0)  # sigma first, then delta, then gamma


@lru_cache(maxsize=65536)
def _shape(f: Formula) -> tuple[int, str]:
    return complexity(f), str(f)


def _selection_key(f: Formula, pos: int, logic: Conditional):
    arity = _ARITY[logic if isinstance(f, Cond) else type(f)][pos]
    return (arity, _CONNECTIVE_RANK[type(f)], _POSITION_RANK[pos], *_shape(f))


def choose_principal(s: ThreeSidedSequent, logic: Conditional) -> tuple[Formula, int] | None:
    """Next formula to decompose: fewest premises first, then negations before
    conjunctions before conditionals, then sigma before delta before gamma, then
    lower complexity, then text order."""
    candidates = [(f, pos) for pos, part in enumerate(s.positions()) for f in part
                  if isinstance(f, (Not, And, Cond))]
    if not candidates:
        return None
    return min(candidates, key=lambda c: _selection_key(c[0], c[1], logic))


# ---------------------------------------------------------------- search

@dataclass
class SearchNode:
    sequent: ThreeSidedSequent
    rule: str | None = None            # axiom name at leaves, rule name at inner nodes
    principal: tuple[Formula, int] | None = None
    children: list["SearchNode"] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.children:
            return "rule"
        return "axiom" if self.rule is not None else "stuck"

    def leaves(self) -> list["SearchNode"]:
        if not self.children:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)


@dataclass
class Derivation:
    """Every leaf of ``tree`` is an axiom."""

    tree: SearchNode
    logic: Conditional

    @property
    def root(self) -> ThreeSidedSequent:
        return self.tree.sequent

    def __bool__(self) -> bool:
        return True


@dataclass
class Countermodel:
    """A valuation refuting the root, read off the leftmost non-axiomatic branch."""

    valuation: dict[str, TruthValue]
    union_sequent: ThreeSidedSequent
    branch: list[ThreeSidedSequent]
    logic: Conditional
    refutes_root: bool = True

    def __bool__(self) -> bool:
        return False


SearchOutcome = Union[Derivation, Countermodel]


class _Stuck(Exception):
    def __init__(self, path: list[ThreeSidedSequent]):
        self.path = path


def _grow(s: ThreeSidedSequent, logic: Conditional, and_half: str, path: list[ThreeSidedSequent]) -> SearchNode:
    path = path + [s]
    name = axiom_name(s)
    if name is not None:
        return SearchNode(s, rule=name)
    choice = choose_principal(s, logic)
    if choice is None:
        raise _Stuck(path)
    formula, pos = choice
    node = SearchNode(s, rule=rule_name(formula, pos), principal=choice)
    for premise in expand_sequent(s, formula, pos, logic, and_half=and_half):
        node.children.append(_grow(premise, logic, and_half, path))
    return node


def search(s: ThreeSidedSequent, logic: LogicLike = Conditional.CC, *, and_half: str = "invertible") -> SearchOutcome:
    """Derive ``s`` or return a countermodel from the leftmost branch that cannot close."""
    logic = calculus_logic(logic)
    root = ThreeSidedSequent(*(map(normalize_for_calculus, part) for part in s.positions()))
    try:
        tree = _grow(root, logic, and_half, [])
    except _Stuck as stuck:
        union = stuck.path[0]
        for sequent in stuck.path[1:]:
            union = union.union(sequent)
        valuation = extract_countermodel(union, s.atoms(), strict=(and_half == "invertible"))
        cfg = LogicConfig(logic)
        refutes = [not sequent_satisfied(valuation, x, cfg) for x in stuck.path]
        if and_half == "invertible" and not all(refutes):
            raise TrivalentError(f"extracted valuation satisfies a sequent on the open branch of {s}")
        return Countermodel(valuation, union, stuck.path, logic, refutes_root=refutes[0])
    return Derivation(tree, logic)


def extract_countermodel(union: ThreeSidedSequent, universe: Iterable[str] = (), *,
                         strict: bool = True) -> dict[str, TruthValue]:
    """Give each atom the first value (0, 1/2, 1) its union positions do not demand.

    Atoms of ``universe`` absent from the union get 1/2.  With ``strict`` any formula
    in all three positions is an error; otherwise only atoms are checked.
    """
    clash = union.gamma & union.delta & union.sigma
    if not strict:
        clash = {f for f in clash if isinstance(f, Atom)}
    if clash:
        raise TrivalentError(f"{sorted(map(str, clash))} occur in all three positions of the union sequent")
    valuation = {name: HALF for name in universe}
    for name in union.atoms():
        atom = Atom(name)
        forbidden = {value for value, part in zip(_POSITION_VALUE, union.positions()) if atom in part}
        valuation[name] = next(v for v in (ZERO, HALF, ONE) if v not in forbidden)
    return dict(sorted(valuation.items()))


def derives(premises: Iterable[FormulaLike], conclusions: Iterable[FormulaLike] | FormulaLike,
            logic: LogicLike = Conditional.CC, **options) -> SearchOutcome:
    """Search ``premises | conclusions | conclusions``."""
    if isinstance(conclusions, (str, Formula)):
        conclusions = [conclusions]
    conclusions = [as_formula(c) for c in conclusions]
    return search(ThreeSidedSequent(premises, conclusions, conclusions), logic, **options)


def sequent_satisfied(v: Mapping[str, object], s: ThreeSidedSequent, cfg: LogicConfig | LogicLike = Conditional.CC) -> bool:
    if not isinstance(cfg, LogicConfig):
        cfg = LogicConfig(calculus_logic(cfg))
    v = coerce_valuation(v)
    return any(_evaluate(f, v, cfg) == target
               for target, part in zip(_POSITION_VALUE, s.positions()) for f in part)


# ---------------------------------------------------------------- output

def _sequent_json(s: ThreeSidedSequent) -> dict:
    return {name: sorted(map(str, part)) for name, part in zip(POSITIONS, s.positions())}


def derivation_to_json(d: Derivation) -> dict:
    """Flat node list in preorder; each node names its rule and its premises by index."""
    nodes: list[dict] = []

    def walk(node: SearchNode) -> int:
        index = len(nodes)
        entry = {"id": index, "sequent": _sequent_json(node.sequent), "text": str(node.sequent),
                 "rule": node.rule, "premises": []}
        if node.principal is not None:
            entry["principal"] = {"formula": str(node.principal[0]), "position": POSITIONS[node.principal[1]]}
        nodes.append(entry)
        entry["premises"] = [walk(child) for child in node.children]
        return index

    walk(d.tree)
    return {"logic": d.logic.value, "root": 0, "nodes": nodes}


def render_derivation(d: Derivation | SearchNode) -> str:
    """Premises above a bar carrying the rule name, conclusion below, as in printed proofs."""
    node = d.tree if isinstance(d, Derivation) else d
    return "\n".join(line.rstrip() for line in _block(node))


def _block(node: SearchNode) -> list[str]:
    conclusion = str(node.sequent)
    above: list[str] = []
    if node.children:
        blocks = [_block(child) for child in node.children]
        height = max(len(b) for b in blocks)
        widths = [max(len(line) for line in b) for b in blocks]
        padded = [[" " * w] * (height - len(b)) + [line.ljust(w) for line in b] for b, w in zip(blocks, widths)]
        above = ["   ".join(row) for row in zip(*padded)]
    premise_width = max((len(line) for line in above), default=0)
    bar_width = max(premise_width, len(conclusion))
    label = node.rule or "?"
    width = bar_width + 1 + len(label)
    lines = [line.ljust(width) for line in above]
    lines.append("-" * bar_width + " " + label)
    lines.append(conclusion.center(bar_width).ljust(width))
    return lines
