"""Finite algebras: axiom checks for the lattice-to-de-Finetti hierarchy, algebraic
consequence, and the congruence probes that decide whether provable
equivalence can be quotiented."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .corpus import random_formula
from .errors import AtomLimitError, FileFormatError, MissingElementError, NotALatticeError, \
    NotPseudocomplementedError
from .semantics import (CONDITIONAL_TABLES, HALF, ONE, ZERO, Conditional, Connectives, Inference, LogicConfig,
                        TruthValue, ValidityScheme, Verdict, entails, evaluate)
from .syntax import BOT, TOP, And, Atom, Bot, Cond, Formula, Not, Or, Top, iff, subformulas

__all__ = [
    "FiniteAlgebra", "AxiomResult", "ClassReport", "CLASSES",
    "induced_order", "relative_pseudocomplement", "pseudocomplement_table", "check_class",
    "canonical_df3", "canonical_cc3", "boolean2", "algebra_entails",
    "TransitivityReport", "check_equiv_transitivity", "CongruenceReport", "check_congruence",
    "algebraizability_counterexample_check", "TRANSLATION_TARGET",
]

MAX_ASSIGNMENTS = 3 ** 12


@dataclass(frozen=True)
class FiniteAlgebra:
    """Operation tables over ``carrier``; elements are referred to by index internally."""

    carrier: tuple[str, ...]
    meet: np.ndarray
    join: np.ndarray
    neg: np.ndarray
    cond: np.ndarray
    zero: int | None = None
    one: int | None = None
    half: int | None = None
    pseudo: np.ndarray | None = None
    name: str = ""

    @classmethod
    def from_tables(cls, carrier: Sequence[str], meet, join, neg, cond, *, zero=None, one=None, half=None,
                    pseudo=None, name: str = "") -> "FiniteAlgebra":
        """Build from tables whose entries are element names or indices."""
        carrier = tuple(str(c) for c in carrier)
        if len(set(carrier)) != len(carrier):
            raise ValueError("carrier elements must be distinct")
        index = {c: i for i, c in enumerate(carrier)}

        def element(x) -> int:
            if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
                if not 0 <= x < len(carrier):
                    raise ValueError(f"element index {x} outside the carrier")
                return int(x)
            if str(x) not in index:
                raise ValueError(f"{x!r} is not a carrier element")
            return index[str(x)]

        def table(rows, what: str) -> np.ndarray:
            out = np.array([[element(x) for x in row] for row in rows], dtype=np.int64)
            if out.shape != (len(carrier), len(carrier)):
                raise ValueError(f"{what} table must be {len(carrier)}x{len(carrier)}")
            return out

        unary = np.array([element(x) for x in neg], dtype=np.int64)
        if unary.shape != (len(carrier),):
            raise ValueError(f"neg table must list {len(carrier)} elements")
        opt = lambda x: None if x is None else element(x)
        return cls(carrier, table(meet, "meet"), table(join, "join"), unary, table(cond, "cond"),
                   opt(zero), opt(one), opt(half), None if pseudo is None else table(pseudo, "pseudo"), name)

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index(self, element) -> int:
        if isinstance(element, (int, np.integer)) and not isinstance(element, bool):
            return int(element)
        return self.carrier.index(str(element))

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x, y] == x

    def bounds(self) -> tuple[int | None, int | None]:
        """Zero and one, taken from the declared elements or else from the order."""
        zero, one = self.zero, self.one
        k = range(self.size)
        if zero is None:
            zero = next((z for z in k if all(self.leq(z, x) for x in k)), None)
        if one is None:
            one = next((o for o in k if all(self.leq(x, o) for x in k)), None)
        return zero, one

    def names(self, xs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.carrier[x] for x in xs)

    # ------------------------------------------------------------ file format

    @classmethod
    def parse(cls, text: str, name: str = "") -> "FiniteAlgebra":
        """Read the plain-text description: ``carrier:``, ``meet:``, ``join:``, ``neg:``, ``cond:``
        and optional ``pseudo:``, ``zero:``, ``one:``, ``half:`` sections; ``#`` comments."""
        known = ("carrier", "meet", "join", "neg", "cond", "pseudo", "zero", "one", "half")
        sections: dict[str, list[tuple[int, list[str]]]] = {}
        starts: dict[str, int] = {}
        current = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, sep, rest = line.partition(":")
            if sep and head.strip().lower() in known:
                current = head.strip().lower()
                if current in sections:
                    raise FileFormatError(f"section {current!r} appears twice", lineno)
                sections[current] = []
                starts[current] = lineno
                line = rest.strip()
                if not line:
                    continue
            if current is None:
                raise FileFormatError("content before the first section header", lineno)
            sections[current].append((lineno, line.replace(",", " ").split()))
        for required in ("carrier", "meet", "join", "neg", "cond"):
            if required not in sections:
                raise FileFormatError(f"missing section {required!r}")
        carrier = [tok for _, row in sections["carrier"] for tok in row]
        k = len(carrier)

        def rows(section: str) -> list[list[str]]:
            data = sections[section]
            if len(data) != k or any(len(r) != k for _, r in data):
                line = data[0][0] if data else starts[section]
                raise FileFormatError(f"{section} must be {k} rows of {k} elements", line)
            return [r for _, r in data]

        def single(section: str) -> str | None:
            if section not in sections:
                return None
            tokens = [t for _, r in sections[section] for t in r]
            if len(tokens) != 1:
                raise FileFormatError(f"{section} names exactly one element", starts[section])
            return tokens[0]

        neg = [t for _, r in sections["neg"] for t in r]
        try:
            return cls.from_tables(carrier, rows("meet"), rows("join"), neg, rows("cond"),
                                   zero=single("zero"), one=single("one"), half=single("half"),
                                   pseudo=rows("pseudo") if "pseudo" in sections else None, name=name)
        except FileFormatError:
            raise
        except ValueError as exc:
            raise FileFormatError(str(exc)) from None

    @classmethod
    def from_file(cls, path: str | Path) -> "FiniteAlgebra":
        path = Path(path)
        return cls.parse(path.read_text(encoding="utf-8"), name=path.stem)

    def to_text(self) -> str:
        out = [f"carrier: {' '.join(self.carrier)}"]
        for label, table in (("meet", self.meet), ("join", self.join), ("cond", self.cond), ("pseudo", self.pseudo)):
            if table is None:
                continue
            out.append(f"{label}:")
            out.extend("  " + " ".join(self.names(row)) for row in table)
            if label == "join":
                out.append(f"neg: {' '.join(self.names(self.neg))}")
        for label in ("zero", "one", "half"):
            value = getattr(self, label)
            if value is not None:
                out.append(f"{label}: {self.carrier[value]}")
        return "\n".join(out) + "\n"


# ---------------------------------------------------------------- canonical models

def _three_element(conditional: str, name: str) -> FiniteAlgebra:
    carrier = ("0", "1/2", "1")
    k = range(3)
    return FiniteAlgebra.from_tables(
        carrier,
        [[min(a, b) for b in k] for a in k],
        [[max(a, b) for b in k] for a in k],
        [2, 1, 0],
        [[int(CONDITIONAL_TABLES[conditional][a][b]) for b in k] for a in k],
        zero=0, one=2, half=1, name=name,
    )


def canonical_df3() -> FiniteAlgebra:
    """Three-element chain with the DF conditional as its conditional operation."""
    return _three_element("DF", "DF3")


def canonical_cc3() -> FiniteAlgebra:
    return _three_element("CC", "CC3")


def boolean2() -> FiniteAlgebra:
    """Two-element Boolean algebra; its conditional is the material one."""
    return FiniteAlgebra.from_tables(("0", "1"), [[0, 0], [0, 1]], [[0, 1], [1, 1]], [1, 0], [[1, 1], [0, 1]],
                                     zero=0, one=1, name="B2")


# ---------------------------------------------------------------- order and pseudocomplement

def induced_order(a: FiniteAlgebra) -> np.ndarray:
    """``leq[x, y]`` iff x ⊓ y = x; checked against x ⊔ y = y and the partial-order laws."""
    k = a.size
    by_meet = np.array([[a.meet[x, y] == x for y in range(k)] for x in range(k)])
    by_join = np.array([[a.join[x, y] == y for y in range(k)] for x in range(k)])
    if not np.array_equal(by_meet, by_join):
        x, y = map(int, np.argwhere(by_meet != by_join)[0])
        raise NotALatticeError(f"meet and join disagree on the order of {a.carrier[x]} and {a.carrier[y]}")
    leq = by_meet
    for x in range(k):
        if not leq[x, x]:
            raise NotALatticeError(f"order is not reflexive at {a.carrier[x]}")
        for y in range(k):
            if x != y and leq[x, y] and leq[y, x]:
                raise NotALatticeError(f"order is not antisymmetric on {a.carrier[x]}, {a.carrier[y]}")
            for z in range(k):
                if leq[x, y] and leq[y, z] and not leq[x, z]:
                    raise NotALatticeError(f"order is not transitive on {a.names((x, y, z))}")
    return leq


def relative_pseudocomplement(a: FiniteAlgebra, x, y) -> int:
    """The largest c with x ⊓ c ⊑ y, as an element index."""
    x, y = a.index(x), a.index(y)
    candidates = [c for c in range(a.size) if a.leq(int(a.meet[x, c]), y)]
    top = [c for c in candidates if all(a.leq(d, c) for d in candidates)]
    if not top:
        raise NotPseudocomplementedError(f"no largest c with {a.carrier[x]} ⊓ c ⊑ {a.carrier[y]}")
    result = top[0]
    if a.pseudo is not None and a.pseudo[x, y] != result:
        raise NotPseudocomplementedError(
            f"supplied pseudo table gives {a.carrier[x]} ↣ {a.carrier[y]} = {a.carrier[a.pseudo[x, y]]}, "
            f"but the order gives {a.carrier[result]}")
    return result


def pseudocomplement_table(a: FiniteAlgebra) -> np.ndarray:
    k = a.size
    return np.array([[relative_pseudocomplement(a, x, y) for y in range(k)] for x in range(k)], dtype=np.int64)


# ---------------------------------------------------------------- class checks

@dataclass(frozen=True)
class AxiomResult:
    cls: str
    axiom: str
    holds: bool
    counterexample: tuple[str, ...] | None = None
    note: str = ""

    def __str__(self) -> str:
        mark = "pass" if self.holds else "FAIL"
        extra = f"  counterexample {self.counterexample}" if self.counterexample else ""
        note = f"  ({self.note})" if self.note else ""
        return f"[{mark}] {self.cls}: {self.axiom}{extra}{note}"


@dataclass
class ClassReport:
    algebra: str
    requested: str
    results: list[AxiomResult]
    filter: tuple[str, ...] | None = None
    half: str | None = None

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.holds]

    def by_class(self, cls: str) -> list[AxiomResult]:
        return [r for r in self.results if r.cls == cls]

    def class_holds(self, cls: str) -> bool:
        return all(r.holds for r in self.by_class(cls))


@dataclass(frozen=True)
class Axiom:
    name: str
    arity: int
    law: Callable[..., bool]  # law(context, *elements)


class _Context:
    """Derived data shared by the laws of one check."""

    def __init__(self, a: FiniteAlgebra, half: int | None = None):
        self.a = a
        self.zero, self.one = a.bounds()
        self.half = half if half is not None else a.half
        self._pseudo = None

    @property
    def pseudo(self) -> np.ndarray:
        if self._pseudo is None:
            self._pseudo = pseudocomplement_table(self.a)
        return self._pseudo

    def w(self, x: int) -> int:
        return int(self.pseudo[self.a.neg[x], self.half])


def _l(c, x, y):
    return c.a.leq(x, y)


_LAWS: dict[str, list[Axiom]] = {
    "Lattice": [
        Axiom("a ⊓ b = b ⊓ a", 2, lambda c, x, y: c.a.meet[x, y] == c.a.meet[y, x]),
        Axiom("a ⊔ b = b ⊔ a", 2, lambda c, x, y: c.a.join[x, y] == c.a.join[y, x]),
        Axiom("a ⊓ (b ⊓ c) = (a ⊓ b) ⊓ c", 3,
              lambda c, x, y, z: c.a.meet[x, c.a.meet[y, z]] == c.a.meet[c.a.meet[x, y], z]),
        Axiom("a ⊔ (b ⊔ c) = (a ⊔ b) ⊔ c", 3,
              lambda c, x, y, z: c.a.join[x, c.a.join[y, z]] == c.a.join[c.a.join[x, y], z]),
        Axiom("a ⊔ (b ⊓ a) = a", 2, lambda c, x, y: c.a.join[x, c.a.meet[y, x]] == x),
        Axiom("a ⊓ (b ⊔ a) = a", 2, lambda c, x, y: c.a.meet[x, c.a.join[y, x]] == x),
    ],
    "Bounded": [
        Axiom("a ⊔ 0 = a", 1, lambda c, x: c.zero is not None and c.a.join[x, c.zero] == x),
        Axiom("a ⊓ 1 = a", 1, lambda c, x: c.one is not None and c.a.meet[x, c.one] == x),
    ],
    "Distributive": [
        Axiom("a ⊓ (b ⊔ c) = (a ⊓ b) ⊔ (a ⊓ c)", 3,
              lambda c, x, y, z: c.a.meet[x, c.a.join[y, z]] == c.a.join[c.a.meet[x, y], c.a.meet[x, z]]),
        Axiom("a ⊔ (b ⊓ c) = (a ⊔ b) ⊓ (a ⊔ c)", 3,
              lambda c, x, y, z: c.a.join[x, c.a.meet[y, z]] == c.a.meet[c.a.join[x, y], c.a.join[x, z]]),
    ],
    "Involutive": [
        Axiom("a ⊑ b implies −b ⊑ −a", 2, lambda c, x, y: not _l(c, x, y) or _l(c, c.a.neg[y], c.a.neg[x])),
        Axiom("−−a = a", 1, lambda c, x: c.a.neg[c.a.neg[x]] == x),
    ],
    "DeMorgan": [
        Axiom("−(a ⊓ b) = −a ⊔ −b", 2, lambda c, x, y: c.a.neg[c.a.meet[x, y]] == c.a.join[c.a.neg[x], c.a.neg[y]]),
        Axiom("−(a ⊔ b) = −a ⊓ −b", 2, lambda c, x, y: c.a.neg[c.a.join[x, y]] == c.a.meet[c.a.neg[x], c.a.neg[y]]),
    ],
    "Kleene": [
        Axiom("a ⊓ −a ⊑ b ⊔ −b", 2, lambda c, x, y: _l(c, c.a.meet[x, c.a.neg[x]], c.a.join[y, c.a.neg[y]])),
    ],
    "L3": [
        Axiom("(a ↣ 0) ⊔ (−a ↣ a) = 1", 1,
              lambda c, x: c.a.join[c.pseudo[x, c.zero], c.pseudo[c.a.neg[x], x]] == c.one),
    ],
    "DeFinetti": [
        Axiom("a ⇝ b = (½ ⊓ −a) ⊔ (a ⊓ b)", 2,
              lambda c, x, y: c.a.cond[x, y] == c.a.join[c.a.meet[c.half, c.a.neg[x]], c.a.meet[x, y]]),
    ],
    "CooperCantwell": [
        Axiom("a ▷ b = −w(a) ⊔ (w(a) ⊓ b), w(a) = −a ↣ ½", 2,
              lambda c, x, y: c.a.cond[x, y] == c.a.join[c.a.neg[c.w(x)], c.a.meet[c.w(x), y]]),
    ],
}

# each class with the classes it presupposes, in checking order
CLASSES: dict[str, tuple[str, ...]] = {
    "Lattice": ("Lattice",),
    "Bounded": ("Lattice", "Bounded"),
    "Distributive": ("Lattice", "Distributive"),
    "Involutive": ("Lattice", "Involutive"),
    "DeMorgan": ("Lattice", "Bounded", "Distributive", "Involutive", "DeMorgan"),
    "Kleene": ("Lattice", "Bounded", "Distributive", "Involutive", "DeMorgan", "Kleene"),
    "RelPseudo": ("Lattice", "RelPseudo"),
    "L3": ("Lattice", "Bounded", "Distributive", "Involutive", "DeMorgan", "Kleene", "RelPseudo", "L3"),
    "DeFinetti": ("Lattice", "Bounded", "Distributive", "Involutive", "DeMorgan", "Kleene", "RelPseudo", "L3",
                  "DeFinetti"),
    "CooperCantwell": ("Lattice", "Bounded", "Distributive", "Involutive", "DeMorgan", "Kleene", "RelPseudo", "L3",
                       "CooperCantwell"),
    "LP": ("Lattice", "Bounded", "Distributive", "Involutive", "DeMorgan", "Kleene", "LP"),
}

_CLASS_ALIASES = {name.lower(): name for name in CLASSES} | {
    "definetti": "DeFinetti", "de-finetti": "DeFinetti", "df": "DeFinetti", "cc": "CooperCantwell",
    "cooper-cantwell": "CooperCantwell", "ł3": "L3", "relpseudo": "RelPseudo", "demorgan": "DeMorgan",
}


def _resolve_class(name: str) -> str:
    key = name.strip().lower()
    if key not in _CLASS_ALIASES:
        raise ValueError(f"unknown class {name!r}; choose from {', '.join(CLASSES)}")
    return _CLASS_ALIASES[key]


def _check_laws(cls: str, laws: list[Axiom], ctx: _Context) -> list[AxiomResult]:
    results = []
    for law in laws:
        failure = None
        try:
            for xs in itertools.product(range(ctx.a.size), repeat=law.arity):
                if not law.law(ctx, *xs):
                    failure = xs
                    break
        except NotPseudocomplementedError as exc:
            results.append(AxiomResult(cls, law.name, False, note=str(exc)))
            continue
        if failure is None:
            results.append(AxiomResult(cls, law.name, True))
        else:
            results.append(AxiomResult(cls, law.name, False, ctx.a.names(failure)))
    return results


def _half_candidates(a: FiniteAlgebra) -> list[int]:
    if a.half is not None:
        return [a.half]
    return [x for x in range(a.size) if a.neg[x] == x]


def _check_half_class(cls: str, a: FiniteAlgebra) -> tuple[list[AxiomResult], int | None]:
    """DeFinetti and CooperCantwell: some negation-fixed ½ making the conditional law hold."""
    candidates = _half_candidates(a)
    fixed = [h for h in candidates if a.neg[h] == h]
    if not fixed:
        note = (f"declared ½ = {a.carrier[a.half]} but −½ = {a.carrier[a.neg[a.half]]}" if a.half is not None
                else "no element is fixed by negation")
        return [AxiomResult(cls, "−½ = ½ for a distinguished ½", False, note=note),
                AxiomResult(cls, _LAWS[cls][0].name, False, note="needs a distinguished ½")], None
    attempts = []
    for h in fixed:
        results = _check_laws(cls, _LAWS[cls], _Context(a, half=h))
        attempts.append((h, results))
        if all(r.holds for r in results):
            break
    h, results = attempts[-1] if all(r.holds for r in attempts[-1][1]) else attempts[0]
    return [AxiomResult(cls, "−½ = ½ for a distinguished ½", True, note=f"½ = {a.carrier[h]}")] + results, h


def _lp_filter(a: FiniteAlgebra, leq: np.ndarray) -> tuple[int, ...] | None:
    k = a.size

    def is_filter(members: frozenset[int]) -> bool:
        upward = all(y in members for x in members for y in range(k) if leq[x, y])
        closed = all(a.meet[x, y] in members for x in members for y in members)
        inconsistent = any(a.neg[c] in members for c in members)
        return upward and closed and inconsistent

    if k <= 6:
        for mask in range(1, 2 ** k - 1):
            members = frozenset(x for x in range(k) if mask >> x & 1)
            if is_filter(members):
                return tuple(sorted(members))
        return None
    for h in _half_candidates(a):
        members = frozenset(y for y in range(k) if leq[h, y])
        if len(members) < k and is_filter(members):
            return tuple(sorted(members))
    return None


def check_class(a: FiniteAlgebra, cls: str) -> ClassReport:
    """Check every axiom of ``cls`` and of the classes it presupposes, exhaustively."""
    cls = _resolve_class(cls)
    report = ClassReport(a.name or "algebra", cls, [])
    ctx = _Context(a)
    for part in CLASSES[cls]:
        if part == "Lattice":
            results = _check_laws(part, _LAWS[part], ctx)
            try:
                induced_order(a)
                results.append(AxiomResult(part, "meet order = join order, a partial order", True))
            except NotALatticeError as exc:
                results.append(AxiomResult(part, "meet order = join order, a partial order", False, note=str(exc)))
            report.results.extend(results)
        elif part == "Bounded":
            results = _check_laws(part, _LAWS[part], ctx)
            if ctx.zero is None or ctx.one is None:
                results = [AxiomResult(part, r.axiom, r.holds, r.counterexample, "no least or greatest element")
                           for r in results]
            report.results.extend(results)
        elif part == "RelPseudo":
            try:
                pseudocomplement_table(a)
                report.results.append(AxiomResult(part, "a ↣ b exists for all a, b", True,
                                                  note="cross-checked with supplied table" if a.pseudo is not None
                                                  else ""))
            except NotPseudocomplementedError as exc:
                report.results.append(AxiomResult(part, "a ↣ b exists for all a, b", False, note=str(exc)))
        elif part in ("DeFinetti", "CooperCantwell"):
            results, h = _check_half_class(part, a)
            report.results.extend(results)
            report.half = None if h is None else a.carrier[h]
        elif part == "LP":
            try:
                found = _lp_filter(a, induced_order(a))
            except NotALatticeError as exc:
                report.results.append(AxiomResult(part, "inconsistent proper filter exists", False, note=str(exc)))
                continue
            if found is None:
                report.results.append(AxiomResult(part, "inconsistent proper filter exists", False,
                                                  note="no proper, upward- and meet-closed set holds some c and −c"))
            else:
                report.filter = a.names(found)
                report.results.append(AxiomResult(part, "inconsistent proper filter exists", True,
                                                  note="filter {" + ", ".join(report.filter) + "}"))
        else:
            report.results.extend(_check_laws(part, _LAWS[part], ctx))
    return report


# ---------------------------------------------------------------- algebraic consequence

def _algebra_carrier(a: FiniteAlgebra, formulas: Sequence[Formula]) -> _kernels.Carrier:
    uses_top = any(isinstance(s, Top) for f in formulas for s in subformulas(f))
    uses_bot = any(isinstance(s, Bot) for f in formulas for s in subformulas(f))
    zero, one = a.bounds()
    if uses_top and one is None:
        raise MissingElementError("formula mentions T but the algebra has no top element")
    if uses_bot and zero is None:
        raise MissingElementError("formula mentions F but the algebra has no bottom element")
    binary = np.stack([a.meet, a.join, a.cond]).astype(np.int8)
    return _kernels.Carrier(a.size, a.neg.astype(np.int8), binary, top=one or 0, bot=zero or 0)


def algebra_entails(inf: Inference, a: FiniteAlgebra, designated: Iterable, *, backend: str | None = None) -> Verdict:
    """Designation preservation over every assignment of carrier elements to atoms.

    Multiple conclusions are read disjunctively.  A countermodel maps atoms to element names.
    """
    designated = {a.index(x) for x in designated}
    formulas = list(inf.premises) + list(inf.conclusions)
    names = inf.atoms
    if a.size ** len(names) > MAX_ASSIGNMENTS:
        raise AtomLimitError(f"{a.size}^{len(names)} assignments exceed the limit of {MAX_ASSIGNMENTS}")
    carrier = _algebra_carrier(a, formulas)
    program = _kernels.compile_formulas(formulas, names, carrier.top, carrier.bot)
    good = [x in designated for x in range(a.size)]
    bad = [not g for g in good]
    masks = np.array([good] * len(inf.premises) + [bad] * len(inf.conclusions), dtype=bool).reshape(-1, a.size)
    index = _kernels.first_hit(program, carrier, masks, backend)
    if index < 0:
        return Verdict(True)
    digits = _kernels.decode(index, len(names), a.size)
    return Verdict(False, {name: a.carrier[d] for name, d in zip(names, digits)})


# ---------------------------------------------------------------- Lindenbaum-Tarski preconditions

@dataclass
class TransitivityReport:
    """Whether A↔B and B↔C TT-entail A↔C; counterexamples list every failing (A, B, C)."""

    conditional: Conditional
    holds: bool
    counterexamples: list[dict[str, TruthValue]]

    @property
    def witness(self) -> dict[str, TruthValue] | None:
        return self.counterexamples[0] if self.counterexamples else None


def check_equiv_transitivity(cfg: LogicConfig) -> TransitivityReport:
    """Scan all 27 value triples, from 1 down to 0, for a failure of transitivity of ↔.

    The descending scan makes the first DF counterexample A=1, B=1/2, C=0.
    """
    if cfg.connectives is not Connectives.KLEENE:
        raise ValueError("transitivity is checked for the Strong Kleene connectives")
    A, B, C = Atom("A"), Atom("B"), Atom("C")
    ab, bc, ac = iff(A, B), iff(B, C), iff(A, C)
    failures = []
    for values in itertools.product((ONE, HALF, ZERO), repeat=3):
        v = dict(zip("ABC", values))
        if evaluate(ab, v, cfg) != ZERO and evaluate(bc, v, cfg) != ZERO and evaluate(ac, v, cfg) == ZERO:
            failures.append(v)
    verdict = entails(Inference([ab, bc], ac), cfg, ValidityScheme.TT)
    assert verdict.valid == (not failures)
    return TransitivityReport(cfg.conditional, not failures, failures)


@dataclass
class CongruenceReport:
    """Does TT-provable equivalence survive the given connective's contexts?"""

    conditional: Conditional
    connective: str
    holds: bool
    witness: tuple[Formula, Formula, Formula] | None  # (A, B, context with A) where s(A)↔s(B) fails
    pairs_checked: int
    instances_checked: int
    pairs_rejected: int = 0
    countermodel: dict[str, TruthValue] | None = None


WITNESS_PAIRS: tuple[tuple[Formula, Formula], ...] = (
    (TOP, Cond(BOT, TOP)),
    (Cond(BOT, TOP), Not(Cond(BOT, TOP))),
    (BOT, Not(TOP)),
    (Atom("p"), Not(Not(Atom("p")))),
    (Atom("p"), And(Atom("p"), Atom("p"))),
    (Not(Cond(Atom("p"), Atom("q"))), Cond(Atom("p"), Not(Atom("q")))),
    (Cond(Atom("p"), Cond(Atom("q"), Atom("r"))), Cond(And(Atom("p"), Atom("q")), Atom("r"))),
    (Cond(Atom("p"), Atom("q")), And(Cond(Atom("p"), Atom("q")), Cond(Atom("p"), Atom("q")))),
    (Cond(Atom("p"), Atom("p")), Cond(Atom("q"), Atom("q"))),
    (Or(Atom("p"), Not(Atom("p"))), TOP),
)

_FILLERS: tuple[Formula, ...] = (Atom("p"), Atom("q"), Atom("r"), TOP, BOT, Cond(BOT, TOP))

_SCHEMAS: tuple[Callable[[Formula, Formula, Formula], tuple[Formula, Formula]], ...] = (
    lambda x, y, z: (x, Not(Not(x))),
    lambda x, y, z: (Not(And(x, y)), Or(Not(x), Not(y))),
    lambda x, y, z: (Not(Or(x, y)), And(Not(x), Not(y))),
    lambda x, y, z: (Cond(x, Cond(y, z)), Cond(And(x, y), z)),
    lambda x, y, z: (And(x, y), And(y, x)),
    lambda x, y, z: (Or(x, y), Or(y, x)),
    lambda x, y, z: (x, And(x, x)),
    lambda x, y, z: (Not(Cond(x, y)), Cond(x, Not(y))),
    lambda x, y, z: (And(x, Or(y, z)), Or(And(x, y), And(x, z))),
)


def equivalent_pairs(count: int = 200, seed: int = 7) -> list[tuple[Formula, Formula]]:
    """Pairs produced by instantiating equivalence schemas with random subformulas."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        schema = rng.choice(_SCHEMAS)
        x, y, z = (random_formula(rng, ("p", "q"), 2) for _ in range(3))
        out.append(schema(x, y, z))
    return out


def _contexts(connective: str, hole: Formula) -> list[Formula]:
    if connective == "neg":
        return [Not(hole)]
    make = {"and": And, "or": Or, "cond": Cond}[connective]
    return [make(hole, f) for f in _FILLERS] + [make(f, hole) for f in _FILLERS]


def _plug(connective: str, context: Formula, hole: Formula, replacement: Formula) -> Formula:
    if connective == "neg":
        return Not(replacement)
    parts = list(_children(context))
    parts = [replacement if p is hole else p for p in parts]
    return type(context)(*parts)


def _children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Cond):
        return f.antecedent, f.consequent
    if isinstance(f, (And, Or)):
        return f.left, f.right
    return (f.sub,) if isinstance(f, Not) else ()


def check_congruence(cfg: LogicConfig, connective: str, *, random_pairs: int = 200, seed: int = 7) -> CongruenceReport:
    """Test whether ⊨ A↔B implies ⊨ s(A)↔s(B) for contexts s built from ``connective``.

    Candidate pairs are the witness battery followed by ``random_pairs`` schema
    instances; each pair is used only once the oracle certifies ⊨ A↔B.  Binary
    connectives get one-hole contexts with fixed fillers on either side, plus
    two-hole contexts over all certified witness-battery pairs.
    """
    if cfg.connectives is not Connectives.KLEENE:
        raise ValueError("congruence is checked for the Strong Kleene connectives")
    if connective not in ("neg", "and", "or", "cond"):
        raise ValueError("connective must be one of neg, and, or, cond")

    def valid(f: Formula) -> Verdict:
        return entails(Inference([], f), cfg, ValidityScheme.TT)

    candidates = list(WITNESS_PAIRS) + equivalent_pairs(random_pairs, seed)
    certified, rejected, instances = [], 0, 0
    for left, right in candidates:
        if valid(iff(left, right)):
            certified.append((left, right))
        else:
            rejected += 1

    def fail(a, b, context, verdict) -> CongruenceReport:
        return CongruenceReport(cfg.conditional, connective, False, (a, b, context), len(certified), instances,
                                rejected, verdict.countermodel)

    for left, right in certified:
        for context in _contexts(connective, left):
            instances += 1
            verdict = valid(iff(context, _plug(connective, context, left, right)))
            if not verdict:
                return fail(left, right, context, verdict)
    if connective != "neg":
        make = {"and": And, "or": Or, "cond": Cond}[connective]
        battery = [p for p in certified if p in WITNESS_PAIRS]
        for (a, b), (c, d) in itertools.product(battery, repeat=2):
            instances += 1
            verdict = valid(iff(make(a, c), make(b, d)))
            if not verdict:
                return fail(a, b, make(a, c), verdict)
    return CongruenceReport(cfg.conditional, connective, True, None, len(certified), instances, rejected)


TRANSLATION_TARGET = "(B <-> C) <-> (((B <-> C) <-> T) | ((B <-> C) <-> (F -> T)))"


def algebraizability_counterexample_check(a: FiniteAlgebra | None = None) -> dict:
    """Evaluate the candidate identity translation on every (e(B), e(C)) over DF3.

    For each assignment the report gives whether e(B) = e(C), the value of
    B↔C and of the right-hand side ((B↔C)↔⊤) ∨ ((B↔C)↔(⊥→⊤)), whether the
    equation between them holds, and the value of the biconditional formula
    joining them.  The "counterexample" entry is the assignment e(B)=1, e(C)=1/2.
    """
    a = a or canonical_df3()
    B, C = Atom("B"), Atom("C")
    bc = iff(B, C)
    rhs = Or(iff(bc, TOP), iff(bc, Cond(BOT, TOP)))
    formula = iff(bc, rhs)
    carrier = _algebra_carrier(a, [formula])
    program = _kernels.compile_formulas([bc, rhs, formula], ["B", "C"], carrier.top, carrier.bot)
    table = _kernels.evaluate_all(program, carrier, "numpy")
    designated = {x for x in range(a.size) if a.half is not None and a.leq(a.half, x)}
    cases = []
    for index, row in enumerate(table):
        b, c = _kernels.decode(index, 2, a.size)
        cases.append({
            "B": a.carrier[b], "C": a.carrier[c],
            "identity_holds": b == c,
            "biconditional": a.carrier[row[0]],
            "rhs": a.carrier[row[1]],
            "translation_holds": bool(row[0] == row[1]),
            "formula_value": a.carrier[row[2]],
            "formula_designated": int(row[2]) in designated,
        })
    witness = next(c for c in cases if (c["B"], c["C"]) == ("1", "1/2"))
    return {
        "formula": TRANSLATION_TARGET,
        "cases": cases,
        "counterexample": witness,
        "confirmed": witness["translation_holds"] and witness["formula_designated"] and not witness["identity_holds"],
    }
