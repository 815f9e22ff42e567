"""Labelled refutation tableaux for the DF and CC conditionals under TT.

A node carries the whole label list of its branch position.  Expanding a
node replaces its leftmost compound label, in place, by each alternative of
the matching rule, so every child keeps the untouched labels of its parent.
A branch closes as soon as one formula carries two different values anywhere
along it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import ClosedBranchError, NoRuleError, PremiseLimitError, TrivalentError
from .semantics import (HALF, ONE, ZERO, Conditional, Connectives, LogicConfig, TruthValue, _evaluate,
                        coerce_value)
from .syntax import And, Atom, Bot, Cond, Formula, FormulaLike, Not, Or, Top, as_formula, atoms, \
    normalize_for_calculus

__all__ = [
    "Label", "TableauNode", "Tableau", "DeductionResult",
    "calculus_logic", "expand_label", "build_tableau", "deduce",
    "induced_quasi_evaluation", "complete_valuation", "tableau_to_json", "render_tableau",
]

DEFAULT_PREMISE_LIMIT = 16

LogicLike = Union[str, Conditional, LogicConfig]


def calculus_logic(logic: LogicLike) -> Conditional:
    """Resolve the conditional of a proof calculus; only DF and CC with Kleene connectives have one."""
    if isinstance(logic, LogicConfig):
        if logic.connectives is not Connectives.KLEENE:
            raise ValueError("the proof calculi are defined for the Strong Kleene connectives only")
        logic = logic.conditional
    if isinstance(logic, str):
        key = logic.strip().upper().split("/")[0]
        if key in ("DFT", "DFM", "CCT", "CCM"):
            key = key[:2]
        logic = Conditional.parse(key)
    if logic not in (Conditional.DF, Conditional.CC):
        raise ValueError(f"no proof calculus for the {logic.value} conditional; use DF or CC")
    return logic


@dataclass(frozen=True)
class Label:
    formula: Formula
    value: TruthValue

    def __init__(self, formula: FormulaLike, value):
        object.__setattr__(self, "formula", as_formula(formula))
        object.__setattr__(self, "value", coerce_value(value))

    def __str__(self) -> str:
        return f"{self.formula}:{self.value}"

    @classmethod
    def parse(cls, text: str) -> "Label":
        """Read ``"<formula>:<value>"``, e.g. ``"p -> q:1/2"``."""
        formula, sep, value = text.rpartition(":")
        if not sep:
            raise ValueError(f"label {text!r} lacks ':<value>'")
        return cls(formula, value)


def _is_compound(f: Formula) -> bool:
    return isinstance(f, (Not, And, Or, Cond))


def _constant_clash(label: Label) -> bool:
    return (isinstance(label.formula, Bot) and label.value != ZERO) or \
        (isinstance(label.formula, Top) and label.value != ONE)


def expand_label(label: Label, logic: LogicLike = Conditional.CC) -> list[list[Label]]:
    """Branch alternatives of the rule for ``label``.

    A constant carrying a value it can never have yields no alternatives,
    which closes the branch.
    """
    logic = calculus_logic(logic)
    f, n = label.formula, label.value
    if _constant_clash(label):
        return []
    if isinstance(f, Not):
        return [[Label(f.sub, (ONE, HALF, ZERO)[n])]]
    if isinstance(f, And):
        a, b = f.left, f.right
        if n == ONE:
            return [[Label(a, ONE), Label(b, ONE)]]
        if n == ZERO:
            return [[Label(a, ZERO)], [Label(b, ZERO)]]
        return [[Label(a, ONE), Label(b, HALF)], [Label(a, HALF), Label(b, HALF)], [Label(a, HALF), Label(b, ONE)]]
    if isinstance(f, Cond):
        a, b = f.antecedent, f.consequent
        if logic is Conditional.CC:
            if n == ONE:
                return [[Label(a, ONE), Label(b, ONE)], [Label(a, HALF), Label(b, ONE)]]
            if n == ZERO:
                return [[Label(a, ONE), Label(b, ZERO)], [Label(a, HALF), Label(b, ZERO)]]
            return [[Label(a, ZERO)], [Label(b, HALF)]]
        if n == ONE:
            return [[Label(a, ONE), Label(b, ONE)]]
        if n == ZERO:
            return [[Label(a, ONE), Label(b, ZERO)]]
        return [[Label(a, ZERO)], [Label(a, HALF)], [Label(b, HALF)]]
    if isinstance(f, Or):
        raise NoRuleError(f"no rule for disjunction in {label}; pass inputs through normalize_for_calculus")
    raise NoRuleError(f"no rule applies to {label}")


@dataclass
class TableauNode:
    labels: tuple[Label, ...]
    children: list["TableauNode"] = field(default_factory=list)
    closed: bool = False       # for leaves: the branch ending here is closed
    principal: int | None = None  # index of the label expanded to produce the children

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def subtree_closed(self) -> bool:
        if self.is_leaf:
            return self.closed
        return all(child.subtree_closed() for child in self.children)

    def branches(self) -> Iterator[list["TableauNode"]]:
        """Root-to-leaf paths, left to right."""
        if self.is_leaf:
            yield [self]
            return
        for child in self.children:
            for path in child.branches():
                yield [self, *path]


@dataclass
class Tableau:
    root: TableauNode
    logic: Conditional

    @property
    def closed(self) -> bool:
        return self.root.subtree_closed()

    def branches(self) -> list[list[TableauNode]]:
        return list(self.root.branches())

    def open_branches(self) -> list[list[TableauNode]]:
        return [b for b in self.root.branches() if not b[-1].closed]

    def leaves(self) -> list[TableauNode]:
        return [b[-1] for b in self.root.branches()]


def build_tableau(root_labels: Iterable[Label], logic: LogicLike = Conditional.CC) -> Tableau:
    """Fully expand a tableau, always working on the leftmost compound label of a node."""
    logic = calculus_logic(logic)
    labels = tuple(Label(normalize_for_calculus(l.formula), l.value) for l in root_labels)
    return Tableau(_grow(labels, {}, logic), logic)


def _grow(labels: tuple[Label, ...], seen: Mapping[Formula, TruthValue], logic: Conditional) -> TableauNode:
    values = dict(seen)
    node = TableauNode(labels)
    for label in labels:
        earlier = values.setdefault(label.formula, label.value)
        if earlier != label.value or _constant_clash(label):
            node.closed = True
            return node
    for i, label in enumerate(labels):
        if _is_compound(label.formula):
            node.principal = i
            for alternative in expand_label(label, logic):
                child_labels = labels[:i] + tuple(alternative) + labels[i + 1:]
                node.children.append(_grow(child_labels, values, logic))
            return node
    return node


# ---------------------------------------------------------------- deducibility

@dataclass
class DeductionResult:
    """Outcome of the 2^k-tableaux test.  Truthy exactly when the conclusion is deducible."""

    derivable: bool
    tableaux: list[Tableau]
    open_tableau: Tableau | None = None
    open_branch: list[TableauNode] | None = None
    quasi_evaluation: dict[Formula, TruthValue] | None = None
    countermodel: dict[str, TruthValue] | None = None

    def __bool__(self) -> bool:
        return self.derivable


def deduce(premises: Sequence[FormulaLike], conclusion: FormulaLike, logic: LogicLike = Conditional.CC, *,
           max_premises: int = DEFAULT_PREMISE_LIMIT) -> DeductionResult:
    """Check every tableau giving each premise 1 or 1/2 and the conclusion 0.

    Tableaux are built in order (premise values tried 1 before 1/2, first premise
    slowest); the search stops at the first open one and reads a countermodel off
    its leftmost open branch.
    """
    logic = calculus_logic(logic)
    premises = [as_formula(p) for p in premises]
    conclusion = as_formula(conclusion)
    if len(premises) > max_premises:
        raise PremiseLimitError(f"{len(premises)} premises exceed the limit of {max_premises} "
                                f"({2 ** len(premises)} tableaux)")
    universe = atoms(*premises, conclusion)
    built = []
    for values in itertools.product((ONE, HALF), repeat=len(premises)):
        roots = [Label(p, v) for p, v in zip(premises, values)] + [Label(conclusion, ZERO)]
        tableau = build_tableau(roots, logic)
        built.append(tableau)
        if not tableau.closed:
            branch = tableau.open_branches()[0]
            q = induced_quasi_evaluation(branch)
            return DeductionResult(False, built, tableau, branch, q, complete_valuation(q, universe, logic))
    return DeductionResult(True, built)


def induced_quasi_evaluation(branch: Sequence[TableauNode]) -> dict[Formula, TruthValue]:
    """Collect every label on the branch into a partial valuation of formulas."""
    q: dict[Formula, TruthValue] = {}
    for node in branch:
        for label in node.labels:
            if q.setdefault(label.formula, label.value) != label.value or _constant_clash(label):
                raise ClosedBranchError(f"branch is closed: {label.formula} gets two values")
    return q


def complete_valuation(q: Mapping[Formula, TruthValue], universe: Iterable[str],
                       logic: LogicLike = Conditional.CC) -> dict[str, TruthValue]:
    """Extend the atomic part of ``q`` to every atom of ``universe``, filling with 1/2.

    Raises if the extension disagrees with ``q`` on any formula of its domain.
    """
    cfg = LogicConfig(calculus_logic(logic))
    names = set(universe)
    for f in q:
        names.update(atoms(f))
    valuation = {name: HALF for name in sorted(names)}
    for f, value in q.items():
        if isinstance(f, Atom):
            valuation[f.name] = value
    for f, value in q.items():
        if _evaluate(f, valuation, cfg) != value:
            raise TrivalentError(f"quasi-evaluation is not table-compatible: {f} should be {value}")
    return valuation


# ---------------------------------------------------------------- output

def _node_json(node: TableauNode) -> dict:
    return {
        "labels": [str(l) for l in node.labels],
        "closed": node.subtree_closed(),
        "children": [_node_json(c) for c in node.children],
    }


def tableau_to_json(tableau: Tableau) -> dict:
    return {"logic": tableau.logic.value, "closed": tableau.closed, "root": _node_json(tableau.root)}


def render_tableau(tableau: Tableau) -> str:
    """Indented text rendering; closed leaves end in ``x``, open leaves in ``o``."""
    lines: list[str] = []

    def walk(node: TableauNode, indent: int) -> None:
        text = " ; ".join(str(l) for l in node.labels)
        if node.is_leaf:
            text += "   x" if node.closed else "   o"
        lines.append("  " * indent + text)
        for child in node.children:
            walk(child, indent + 1)

    walk(tableau.root, 0)
    return "\n".join(lines)
