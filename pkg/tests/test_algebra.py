import itertools
from pathlib import Path

import numpy as np
import pytest

from trivalent.algebra import (CLASSES, FiniteAlgebra, algebra_entails, algebraizability_counterexample_check,
                               boolean2, canonical_cc3, canonical_df3, check_class, check_congruence,
                               check_equiv_transitivity, induced_order, pseudocomplement_table,
                               relative_pseudocomplement)
from trivalent.errors import FileFormatError, MissingElementError, NotALatticeError, NotPseudocomplementedError
from trivalent.semantics import CONDITIONAL_TABLES, HALF, ONE, ZERO, Inference, LogicConfig
from trivalent.syntax import BOT, TOP, Cond, Not

DATA = Path(__file__).parent / "data"


def test_canonical_tables():
    df3, cc3 = canonical_df3(), canonical_cc3()
    assert df3.carrier[df3.cond[0, 2]] == "1/2"
    assert cc3.carrier[cc3.cond[1, 2]] == "1"
    assert df3.carrier[df3.neg[1]] == "1/2"


def test_induced_order():
    leq = induced_order(canonical_df3())
    assert leq[0, 1] and leq[1, 2] and leq[0, 2] and not leq[2, 1]
    assert induced_order(boolean2()).tolist() == [[True, True], [False, True]]
    with pytest.raises(NotALatticeError):
        induced_order(FiniteAlgebra.from_file(DATA / "not_a_lattice.alg"))


def test_relative_pseudocomplement():
    df3 = canonical_df3()
    assert df3.carrier[relative_pseudocomplement(df3, "1", "0")] == "0"
    assert df3.carrier[relative_pseudocomplement(df3, "1/2", "1/2")] == "1"
    # w(1/2) = -1/2 ↣ 1/2 = 1
    assert df3.carrier[relative_pseudocomplement(df3, df3.neg[1], "1/2")] == "1"


def test_supplied_pseudo_table_is_cross_checked():
    df3 = canonical_df3()
    good = pseudocomplement_table(df3)
    FiniteAlgebra(df3.carrier, df3.meet, df3.join, df3.neg, df3.cond, 0, 2, 1, good)
    bad = good.copy()
    bad[2, 0] = 1
    wrong = FiniteAlgebra(df3.carrier, df3.meet, df3.join, df3.neg, df3.cond, 0, 2, 1, bad)
    with pytest.raises(NotPseudocomplementedError):
        relative_pseudocomplement(wrong, "1", "0")
    assert not check_class(wrong, "RelPseudo").holds


@pytest.mark.parametrize("cls", [c for c in CLASSES if c != "CooperCantwell"])
def test_df3_passes_every_class_up_to_definetti_and_lp(cls):
    report = check_class(canonical_df3(), cls)
    assert report.holds, [str(r) for r in report.failures()]


def test_df3_lp_filter():
    assert check_class(canonical_df3(), "LP").filter == ("1/2", "1")


def test_cc3_is_cooper_cantwell_and_recovers_cc_table():
    cc3 = canonical_cc3()
    assert check_class(cc3, "CooperCantwell").holds
    assert not check_class(cc3, "DeFinetti").holds
    pseudo = pseudocomplement_table(cc3)
    w = [pseudo[cc3.neg[a], 1] for a in range(3)]
    assert w == [1, 2, 2]
    for a, b in itertools.product(range(3), repeat=2):
        triangle = cc3.join[cc3.neg[w[a]], cc3.meet[w[a], b]]
        assert triangle == int(CONDITIONAL_TABLES["CC"][a][b])


def test_boolean_fails_definetti_without_half():
    report = check_class(boolean2(), "DeFinetti")
    assert not report.holds
    assert report.class_holds("L3")
    assert any("no element is fixed by negation" in r.note for r in report.failures())


def test_l3_axiom_on_three_elements():
    report = check_class(canonical_df3(), "L3")
    assert [r.holds for r in report.by_class("L3")] == [True]


def test_counterexamples_are_element_names():
    report = check_class(canonical_df3(), "CooperCantwell")
    failure = report.failures()[0]
    assert failure.counterexample == ("1/2", "0")


def test_missing_bounds_are_inferred():
    df3 = canonical_df3()
    bare = FiniteAlgebra(df3.carrier, df3.meet, df3.join, df3.neg, df3.cond, name="bare")
    assert bare.bounds() == (0, 2)
    report = check_class(bare, "DeFinetti")
    assert report.holds and report.half == "1/2"


def test_file_round_trip_and_errors():
    for name in ("df3", "cc3", "bool2"):
        a = FiniteAlgebra.from_file(DATA / f"{name}.alg")
        assert FiniteAlgebra.parse(a.to_text()).to_text() == a.to_text()
    with pytest.raises(FileFormatError) as info:
        FiniteAlgebra.from_file(DATA / "bad_table.alg")
    assert info.value.line == 3
    with pytest.raises(FileFormatError) as info:
        FiniteAlgebra.parse("meet: 0\n")
    assert "carrier" in str(info.value)
    with pytest.raises(FileFormatError):
        FiniteAlgebra.parse("stray\ncarrier: 0\n")


def test_algebra_entails():
    df3 = canonical_df3()
    mp = algebra_entails(Inference(["p", "p -> q"], "q"), df3, ["1/2", "1"])
    assert not mp and mp.countermodel == {"p": "1/2", "q": "0"}
    assert algebra_entails(Inference([], "p -> p"), df3, ["1/2", "1"])
    for a in (df3, canonical_cc3(), boolean2()):
        assert algebra_entails(Inference(["p"], "p"), a, a.carrier[-1:])


def test_algebra_entails_needs_bounds_for_constants():
    # two incomparable elements: neither a least nor a greatest element exists
    flat = FiniteAlgebra(("a", "b"), np.array([[0, 1], [0, 1]]), np.array([[0, 1], [0, 1]]), np.array([1, 0]),
                         np.array([[1, 1], [0, 1]]))
    assert flat.bounds() == (None, None)
    assert algebra_entails(Inference(["p"], "p"), flat, ["b"])
    with pytest.raises(MissingElementError):
        algebra_entails(Inference([], "F -> p"), flat, ["b"])
    with pytest.raises(MissingElementError):
        algebra_entails(Inference([], "T"), flat, ["b"])


def test_transitivity():
    df = check_equiv_transitivity(LogicConfig("DF"))
    assert not df.holds and df.witness == {"A": ONE, "B": HALF, "C": ZERO}
    assert check_equiv_transitivity(LogicConfig("CC")).holds
    mat = check_equiv_transitivity(LogicConfig("MAT"))
    assert not mat.holds and mat.witness == {"A": ONE, "B": HALF, "C": ZERO}


def test_congruence():
    for conditional in ("CC", "F"):
        report = check_congruence(LogicConfig(conditional), "neg")
        assert not report.holds
        a, b, context = report.witness
        assert (a, b) == (TOP, Cond(BOT, TOP)) and context == Not(TOP)
    for connective in ("neg", "and", "or", "cond"):
        assert check_congruence(LogicConfig("DF"), connective).holds
    with pytest.raises(ValueError):
        check_congruence(LogicConfig("DF"), "xor")


def test_congruence_pairs_are_certified():
    report = check_congruence(LogicConfig("DF"), "neg", random_pairs=50)
    assert report.pairs_checked + report.pairs_rejected == 10 + 50
    assert report.pairs_rejected == 0


def test_algebraizability_check():
    result = algebraizability_counterexample_check()
    assert result["confirmed"]
    cases = {(c["B"], c["C"]): c for c in result["cases"]}
    witness = cases["1", "1/2"]
    assert not witness["identity_holds"] and witness["translation_holds"] and witness["formula_designated"]
    assert cases["1", "1"]["identity_holds"] and cases["1", "1"]["translation_holds"]
    assert not cases["1", "0"]["identity_holds"] and not cases["1", "0"]["translation_holds"]
    assert (cases["1", "0"]["biconditional"], cases["1", "0"]["rhs"]) == ("0", "1/2")
