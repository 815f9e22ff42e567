import oracle
from trivalent.props import (CHECKLIST_PRINCIPLES, checklist_matrix, commutation_matrix, deduction_theorem,
                             refutes, render_all, trilemma_matrix)
from trivalent.semantics import LogicConfig, ValidityScheme
from trivalent.syntax import BOT, TOP, Atom, And, Not

Y, N = "✓", "×"

# the trilemma as tabulated for DF
TRILEMMA = {
    "SS": (Y, N, Y),
    "TT": (N, Y, N),
    "ST": (Y, Y, Y),
    "TS": (N, N, N),
    "SS∩TT": (N, N, N),
}
# commutation with negation, both directions, under TT
COMMUTATION = {"CC": (Y, Y), "F": (N, Y), "J1": (N, N), "J2": (Y, N)}


def _witnesses_refute(matrix, cfg_for, scheme_for):
    for (row, col), cell in matrix.cells.items():
        if not cell.valid:
            assert refutes(cell.witness, cell.inference, cfg_for(row, col), scheme_for(row, col))


def test_trilemma():
    m = trilemma_matrix()
    assert m.marks() == TRILEMMA
    _witnesses_refute(m, lambda r, c: LogicConfig("DF"), lambda r, c: ValidityScheme.parse(r))


def test_commutation():
    m = commutation_matrix()
    assert m.marks() == COMMUTATION
    _witnesses_refute(m, lambda r, c: LogicConfig(r), lambda r, c: ValidityScheme.TT)


def test_commutation_witnesses_match_the_hand_computed_ones():
    m = commutation_matrix()
    assert {k: str(v) for k, v in m["F", m.columns[0]].witness.items()} == {"p": "1/2", "q": "1"}
    assert {k: str(v) for k, v in m["J2", m.columns[1]].witness.items()} == {"p": "1/2", "q": "1/2"}


def test_checklist_against_oracle():
    m = checklist_matrix()
    logics = {"DF/Kleene": ("DF", "kleene"), "CC/Kleene": ("CC", "kleene"),
              "DF/Cooper": ("DF", "cooper"), "CC/Cooper": ("CC", "cooper")}
    for principle in CHECKLIST_PRINCIPLES:
        for column, (cond, conn) in logics.items():
            expected = all(oracle.valid(i.premises, i.conclusions, cond, conn) for i in principle.inferences)
            assert m[principle.name, column].valid == expected, (principle.name, column)
    _witnesses_refute(m, lambda r, c: LogicConfig(*logics[c]), lambda r, c: ValidityScheme.TT)


def test_checklist_highlights():
    m = checklist_matrix()
    assert m["Import-Export", "DF/Kleene"].valid and not m["Import-Export", "DF/Cooper"].valid
    assert m["Linearity", "CC/Kleene"].valid and not m["Linearity", "CC/Cooper"].valid
    assert not m["Disjunctive Syllogism", "CC/Kleene"].valid and m["Disjunctive Syllogism", "CC/Cooper"].valid
    assert all(m["Cond. Introduction", c].valid for c in m.columns)
    for c in m.columns:
        assert m["Aristotle", c].valid and m["Boethius", c].valid and m["Cond. Excluded Middle", c].valid


def test_deduction_theorem_directions():
    df = deduction_theorem(LogicConfig("DF"))
    assert df.introduction and not df.elimination
    cc = deduction_theorem(LogicConfig("CC"))
    assert cc.holds
    p, q = Atom("p"), Atom("q")
    for scheme in (ValidityScheme.SS, ValidityScheme.ST):
        report = deduction_theorem(LogicConfig("CC"), scheme, corpus=[], extra=[([], And(p, Not(p)), q)])
        assert not report.introduction
    for scheme in (ValidityScheme.TS, ValidityScheme.SS_AND_TT):
        report = deduction_theorem(LogicConfig("CC"), scheme, corpus=[], extra=[([], BOT, TOP)])
        assert not report.introduction


def test_render_is_deterministic():
    assert render_all() == render_all()
    assert "SS∩TT" in render_all()
