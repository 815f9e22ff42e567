"""Independent brute-force oracle: truth tables typed in by hand, plain recursion,
Fraction values.  Shares nothing with the package beyond the formula classes."""

from __future__ import annotations

import itertools
from fractions import Fraction

from trivalent.syntax import And, Atom, Bot, Cond, Not, Or, Top

H = Fraction(1, 2)
VALUES = (Fraction(0), H, Fraction(1))

# rows: antecedent 0, 1/2, 1; columns: consequent 0, 1/2, 1
CONDITIONALS = {
    "DF": [[H, H, H], [H, H, H], [0, H, 1]],
    "CC": [[H, H, H], [0, H, 1], [0, H, 1]],
    "F": [[H, H, H], [0, H, H], [0, H, 1]],
    "J1": [[H, H, H], [0, 1, H], [0, H, 1]],
    "J2": [[H, H, H], [0, 1, 1], [0, H, 1]],
}
QUASI_AND = [[0, 0, 0], [0, H, 1], [0, 1, 1]]
QUASI_OR = [[0, 0, 1], [0, H, 1], [1, 1, 1]]


def _ix(x: Fraction) -> int:
    return int(x * 2)


def value(f, v: dict, cond: str = "DF", conn: str = "kleene") -> Fraction:
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Top):
        return Fraction(1)
    if isinstance(f, Bot):
        return Fraction(0)
    if isinstance(f, Not):
        return 1 - value(f.sub, v, cond, conn)
    if isinstance(f, (And, Or, Cond)):
        kids = (f.antecedent, f.consequent) if isinstance(f, Cond) else (f.left, f.right)
        a, b = (value(k, v, cond, conn) for k in kids)
        if isinstance(f, Cond):
            if cond == "MAT":
                neg_a = 1 - a
                return max(neg_a, b) if conn == "kleene" else Fraction(QUASI_OR[_ix(neg_a)][_ix(b)])
            return Fraction(CONDITIONALS[cond][_ix(a)][_ix(b)])
        if conn == "kleene":
            return min(a, b) if isinstance(f, And) else max(a, b)
        return Fraction((QUASI_AND if isinstance(f, And) else QUASI_OR)[_ix(a)][_ix(b)])
    raise TypeError(f)


def atom_names(*formulas) -> list[str]:
    out = set()
    stack = list(formulas)
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            out.add(f.name)
        elif isinstance(f, Not):
            stack.append(f.sub)
        elif isinstance(f, Cond):
            stack += [f.antecedent, f.consequent]
        elif isinstance(f, (And, Or)):
            stack += [f.left, f.right]
    return sorted(out)


DESIGNATED = {"S": {Fraction(1)}, "T": {H, Fraction(1)}}


def countermodels(premises, conclusions, cond="DF", conn="kleene", scheme="TT"):
    """Every refuting valuation, in the canonical order."""
    names = atom_names(*premises, *conclusions)
    schemes = ("SS", "TT") if scheme == "SSandTT" else (scheme,)
    for combo in itertools.product(VALUES, repeat=len(names)):
        v = dict(zip(names, combo))
        for s in schemes:
            good, target = DESIGNATED[s[0]], DESIGNATED[s[1]]
            if all(value(p, v, cond, conn) in good for p in premises) and \
                    all(value(c, v, cond, conn) not in target for c in conclusions):
                yield v
                break


def valid(premises, conclusions, cond="DF", conn="kleene", scheme="TT") -> bool:
    return next(countermodels(premises, conclusions, cond, conn, scheme), None) is None
