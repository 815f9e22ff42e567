"""Regenerate the golden proof files: ``python tests/make_golden.py``."""

import json
from pathlib import Path

from trivalent import sequent, tableau

GOLDEN = Path(__file__).parent / "golden"

TABLEAU_ROOTS = {
    "cc_commutation_tableau_1": ["~(A -> B):1", "A -> ~B:0"],
    "cc_commutation_tableau_2": ["~(A -> B):1/2", "A -> ~B:0"],
}
DERIVATION_ROOTS = {
    "cc_commutation_derivation_1": "~(A -> B) ; A -> ~B ; A -> ~B",
    "cc_commutation_derivation_2": "A -> ~B ; ~(A -> B) ; ~(A -> B)",
}


def build() -> dict[str, dict]:
    out = {}
    for name, labels in TABLEAU_ROOTS.items():
        t = tableau.build_tableau([tableau.Label.parse(x) for x in labels], "CC")
        out[name] = {"schema": 1, **tableau.tableau_to_json(t)}
    for name, text in DERIVATION_ROOTS.items():
        d = sequent.search(sequent.ThreeSidedSequent.parse(text), "CC")
        out[name] = {"schema": 1, **sequent.derivation_to_json(d)}
    return out


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, payload in build().items():
        (GOLDEN / f"{name}.json").write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
