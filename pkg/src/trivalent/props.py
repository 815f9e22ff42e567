"""Validity matrices: the DF trilemma, commutation with negation, and a checklist of
principles, each failure carrying a re-verified countermodel."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .corpus import random_inferences
from .semantics import (Conditional, Connectives, Inference, LogicConfig, TruthValue, ValidityScheme, _evaluate,
                        entails)
from .syntax import Cond, Formula

__all__ = [
    "Principle", "Cell", "PropertyMatrix", "refutes", "check",
    "TRILEMMA_PRINCIPLES", "COMMUTATION_PRINCIPLES", "CHECKLIST_PRINCIPLES", "CHECKLIST_LOGICS",
    "DeductionReport", "deduction_theorem",
    "trilemma_matrix", "commutation_matrix", "checklist_matrix", "render_all",
]


@dataclass(frozen=True)
class Principle:
    name: str
    inferences: tuple[Inference, ...]  # holds when every one is valid

    @classmethod
    def of(cls, name: str, *pairs: tuple[Sequence[str], str]) -> "Principle":
        return cls(name, tuple(Inference(p, c) for p, c in pairs))


@dataclass(frozen=True)
class Cell:
    valid: bool
    inference: Inference | None = None
    witness: dict[str, TruthValue] | None = None

    @property
    def mark(self) -> str:
        return "✓" if self.valid else "×"


def refutes(v: dict[str, TruthValue], inf: Inference, cfg: LogicConfig, scheme: ValidityScheme) -> bool:
    """Does ``v`` make every premise designated and every conclusion undesignated?"""
    if scheme is ValidityScheme.SS_AND_TT:
        return any(refutes(v, inf, cfg, s) for s in (ValidityScheme.SS, ValidityScheme.TT))
    good = scheme.premise_designated
    bad = scheme.conclusion_designated
    return all(_evaluate(p, v, cfg) in good for p in inf.premises) and \
        all(_evaluate(c, v, cfg) not in bad for c in inf.conclusions)


def check(principle: Principle, cfg: LogicConfig, scheme: ValidityScheme = ValidityScheme.TT) -> Cell:
    for inf in principle.inferences:
        verdict = entails(inf, cfg, scheme)
        if not verdict:
            if not refutes(verdict.countermodel, inf, cfg, scheme):
                raise AssertionError(f"countermodel {verdict.countermodel} does not refute {inf}")
            return Cell(False, inf, verdict.countermodel)
    return Cell(True)


@dataclass
class PropertyMatrix:
    title: str
    corner: str
    rows: list[str]
    columns: list[str]
    cells: dict[tuple[str, str], Cell] = field(default_factory=dict)

    def __getitem__(self, key: tuple[str, str]) -> Cell:
        return self.cells[key]

    def marks(self) -> dict[str, tuple[str, ...]]:
        return {r: tuple(self.cells[r, c].mark for c in self.columns) for r in self.rows}

    def render(self) -> str:
        widths = [max(len(self.corner), *map(len, self.rows))] + [max(len(c), 1) for c in self.columns]
        lines = [self.title, "  ".join(h.ljust(w) for h, w in zip([self.corner, *self.columns], widths)).rstrip()]
        for r in self.rows:
            row = [r] + [self.cells[r, c].mark for c in self.columns]
            lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
        failures = [(r, c) for r in self.rows for c in self.columns if not self.cells[r, c].valid]
        if failures:
            lines.append("witnesses:")
            for r, c in failures:
                cell = self.cells[r, c]
                v = ", ".join(f"{k}={val}" for k, val in cell.witness.items())
                lines.append(f"  {r} / {c}: {cell.inference} fails at {v}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "rows": self.rows,
            "columns": self.columns,
            "cells": [
                {"row": r, "column": c, "valid": cell.valid,
                 "inference": None if cell.inference is None else str(cell.inference),
                 "witness": None if cell.witness is None else {k: str(v) for k, v in cell.witness.items()}}
                for (r, c), cell in self.cells.items()
            ],
        }


TRILEMMA_PRINCIPLES = (
    Principle.of("MP", (["p", "p -> q"], "q")),
    Principle.of("Identity", ([], "p -> p")),
    Principle.of("Converse", (["p -> q"], "q -> p")),
)

TRILEMMA_SCHEMES = (ValidityScheme.SS, ValidityScheme.TT, ValidityScheme.ST, ValidityScheme.TS,
                    ValidityScheme.SS_AND_TT)

COMMUTATION_PRINCIPLES = (
    Principle.of("~(A->B) => A->~B", (["~(p -> q)"], "p -> ~q")),
    Principle.of("A->~B => ~(A->B)", (["p -> ~q"], "~(p -> q)")),
)

CHECKLIST_PRINCIPLES = (
    Principle.of("Modus Ponens", (["p", "p -> q"], "q")),
    Principle.of("Import-Export", (["p -> (q -> r)"], "p & q -> r"), (["p & q -> r"], "p -> (q -> r)")),
    Principle.of("Contraposition", (["p -> q"], "~q -> ~p")),
    Principle.of("Modus Tollens", (["p -> q", "~q"], "~p")),
    Principle.of("Commutation", (["~(p -> q)"], "p -> ~q"), (["p -> ~q"], "~(p -> q)")),
    Principle.of("Aristotle", ([], "~(~p -> p)")),
    Principle.of("Boethius", ([], "(p -> q) -> ~(p -> ~q)")),
    Principle.of("Cond. Excluded Middle", ([], "(p -> q) | (p -> ~q)")),
    Principle.of("Linearity", ([], "(p -> q) | (q -> p)")),
    Principle.of("Disjunctive Syllogism", (["~p", "p | q"], "q")),
    Principle.of("(A->B)->A", ([], "(p -> q) -> p")),
)

CHECKLIST_LOGICS = (
    ("DF/Kleene", LogicConfig(Conditional.DF, Connectives.KLEENE)),
    ("CC/Kleene", LogicConfig(Conditional.CC, Connectives.KLEENE)),
    ("DF/Cooper", LogicConfig(Conditional.DF, Connectives.COOPER)),
    ("CC/Cooper", LogicConfig(Conditional.CC, Connectives.COOPER)),
)


def trilemma_matrix(conditional: Conditional = Conditional.DF) -> PropertyMatrix:
    cfg = LogicConfig(conditional)
    m = PropertyMatrix(f"Trilemma: {conditional.value} under each validity scheme", f"{conditional.value}/.",
                       [str(s) for s in TRILEMMA_SCHEMES], [p.name for p in TRILEMMA_PRINCIPLES])
    for scheme in TRILEMMA_SCHEMES:
        for p in TRILEMMA_PRINCIPLES:
            m.cells[str(scheme), p.name] = check(p, cfg, scheme)
    return m


def commutation_matrix(conditionals: Iterable[Conditional] = (Conditional.CC, Conditional.F, Conditional.J1,
                                                              Conditional.J2)) -> PropertyMatrix:
    conditionals = list(conditionals)
    m = PropertyMatrix("Commutation with negation under TT", "J", [c.value for c in conditionals],
                       [p.name for p in COMMUTATION_PRINCIPLES])
    for c in conditionals:
        for p in COMMUTATION_PRINCIPLES:
            m.cells[c.value, p.name] = check(p, LogicConfig(c))
    return m


@dataclass
class DeductionReport:
    """Both directions of the Deduction Theorem over a corpus.

    ``introduction``: Γ, A ⊨ B implies Γ ⊨ A→B.  ``elimination``: the converse.
    Witnesses are (Γ, A, B, countermodel of the failing side).
    """

    cfg: LogicConfig
    scheme: ValidityScheme
    checked: int
    introduction_witness: tuple | None = None
    elimination_witness: tuple | None = None

    @property
    def introduction(self) -> bool:
        return self.introduction_witness is None

    @property
    def elimination(self) -> bool:
        return self.elimination_witness is None

    @property
    def holds(self) -> bool:
        return self.introduction and self.elimination


def deduction_theorem(cfg: LogicConfig, scheme: ValidityScheme = ValidityScheme.TT,
                      corpus: Iterable[Inference] | None = None,
                      extra: Sequence[tuple[Sequence[Formula], Formula, Formula]] = ()) -> DeductionReport:
    """Compare Γ, A ⊨ B with Γ ⊨ A→B, taking A as the last premise of each corpus item."""
    if corpus is None:
        corpus = random_inferences()
    cases = [(list(e[0]), e[1], e[2]) for e in extra]
    cases += [(list(inf.premises[:-1]), inf.premises[-1], inf.conclusions[0])
              for inf in corpus if inf.premises and len(inf.conclusions) == 1]
    report = DeductionReport(cfg, scheme, 0)
    for gamma, a, b in cases:
        report.checked += 1
        with_a = entails(Inference(gamma + [a], b), cfg, scheme)
        folded = entails(Inference(gamma, Cond(a, b)), cfg, scheme)
        if with_a and not folded and report.introduction_witness is None:
            report.introduction_witness = (tuple(gamma), a, b, folded.countermodel)
        if folded and not with_a and report.elimination_witness is None:
            report.elimination_witness = (tuple(gamma), a, b, with_a.countermodel)
        if not report.introduction and not report.elimination:
            break
    return report


def checklist_matrix(logics: Sequence[tuple[str, LogicConfig]] = CHECKLIST_LOGICS) -> PropertyMatrix:
    m = PropertyMatrix("Principles under TT", "principle",
                       [p.name for p in CHECKLIST_PRINCIPLES] + ["Cond. Introduction"],
                       [name for name, _ in logics])
    for name, cfg in logics:
        for p in CHECKLIST_PRINCIPLES:
            m.cells[p.name, name] = check(p, cfg)
        report = deduction_theorem(cfg)
        if report.introduction:
            m.cells["Cond. Introduction", name] = Cell(True)
        else:
            gamma, a, b, v = report.introduction_witness
            m.cells["Cond. Introduction", name] = Cell(False, Inference(gamma, Cond(a, b)), v)
    return m


def render_all() -> str:
    """Every matrix as deterministic text."""
    return "\n\n".join(m.render() for m in (trilemma_matrix(), commutation_matrix(), checklist_matrix())) + "\n"
