"""Truth tables, the five consequence schemes, equivalence and assertability.

Everything here is decided by brute force over all valuations.  Both proof
calculi are tested against these functions.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from . import _kernels
from .errors import AtomLimitError, FileFormatError, SchemeError, UnboundAtomError, UndefinedAssertabilityError
from .syntax import And, Atom, Bot, Cond, Formula, FormulaLike, Not, Or, Top, as_formula, atoms

__all__ = [
    "TruthValue", "ZERO", "HALF", "ONE", "Conditional", "Connectives", "LogicConfig",
    "ValidityScheme", "Inference", "Verdict", "WorldDistribution",
    "CONDITIONAL_TABLES", "CONJUNCTION_TABLES", "DISJUNCTION_TABLES", "NEGATION_TABLE",
    "evaluate", "entails", "equivalent", "assertability", "truth_table", "valuations",
    "coerce_value", "coerce_valuation", "DEFAULT_ATOM_LIMIT",
]

DEFAULT_ATOM_LIMIT = 12


class TruthValue(enum.IntEnum):
    """The three truth values, ordered 0 < 1/2 < 1.  The integer codes are 0, 1, 2."""

    ZERO = 0
    HALF = 1
    ONE = 2

    @property
    def numeric(self) -> Fraction:
        return Fraction(int(self), 2)

    def __str__(self) -> str:
        return ("0", "1/2", "1")[self]

    @classmethod
    def parse(cls, text: str) -> "TruthValue":
        key = text.strip()
        table = {"0": cls.ZERO, "1/2": cls.HALF, "0.5": cls.HALF, ".5": cls.HALF, "½": cls.HALF, "1": cls.ONE}
        if key not in table:
            raise ValueError(f"not a truth value: {text!r} (use 0, 1/2, 0.5 or 1)")
        return table[key]


ZERO, HALF, ONE = TruthValue.ZERO, TruthValue.HALF, TruthValue.ONE

ValueLike = Union[TruthValue, int, float, Fraction, str]


def coerce_value(value: ValueLike) -> TruthValue:
    """Accept a TruthValue, a number in {0, 1/2, 1}, or its textual form.

    Plain numbers are read by magnitude, so ``1`` means true, not the code of 1/2.
    """
    if isinstance(value, TruthValue):
        return value
    if isinstance(value, str):
        return TruthValue.parse(value)
    if isinstance(value, (int, float, Fraction)) and not isinstance(value, bool):
        doubled = value * 2
        if doubled in (0, 1, 2):
            return TruthValue(int(doubled))
    raise ValueError(f"not a truth value: {value!r}")


def coerce_valuation(v: Mapping[str, ValueLike]) -> dict[str, TruthValue]:
    return {name: coerce_value(x) for name, x in v.items()}


# ---------------------------------------------------------------- tables
# Indexed [a][b] by value code.

_Z, _H, _O = ZERO, HALF, ONE

NEGATION_TABLE = (_O, _H, _Z)

CONDITIONAL_TABLES: dict[str, tuple[tuple[TruthValue, ...], ...]] = {
    "DF": ((_H, _H, _H), (_H, _H, _H), (_Z, _H, _O)),
    "CC": ((_H, _H, _H), (_Z, _H, _O), (_Z, _H, _O)),
    "F": ((_H, _H, _H), (_Z, _H, _H), (_Z, _H, _O)),
    "J1": ((_H, _H, _H), (_Z, _O, _H), (_Z, _H, _O)),
    "J2": ((_H, _H, _H), (_Z, _O, _O), (_Z, _H, _O)),
}

CONJUNCTION_TABLES = {
    "KLEENE": tuple(tuple(TruthValue(min(a, b)) for b in range(3)) for a in range(3)),
    "COOPER": ((_Z, _Z, _Z), (_Z, _H, _O), (_Z, _O, _O)),
}

DISJUNCTION_TABLES = {
    "KLEENE": tuple(tuple(TruthValue(max(a, b)) for b in range(3)) for a in range(3)),
    "COOPER": ((_Z, _Z, _O), (_Z, _H, _O), (_O, _O, _O)),
}


class Conditional(enum.Enum):
    DF = "DF"
    CC = "CC"
    F = "F"
    J1 = "J1"
    J2 = "J2"
    MAT = "MAT"

    @property
    def is_jeffrey(self) -> bool:
        table = self.table(Connectives.KLEENE)
        return table[_O][_Z] == _Z and table[_H][_Z] == _Z

    def table(self, connectives: "Connectives") -> tuple[tuple[TruthValue, ...], ...]:
        if self is Conditional.MAT:
            disj = DISJUNCTION_TABLES[connectives.value]
            return tuple(tuple(disj[NEGATION_TABLE[a]][b] for b in range(3)) for a in range(3))
        return CONDITIONAL_TABLES[self.value]

    @classmethod
    def parse(cls, text: str) -> "Conditional":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown conditional {text!r}; choose from df, cc, f, j1, j2, mat") from None


class Connectives(enum.Enum):
    KLEENE = "KLEENE"
    COOPER = "COOPER"

    @classmethod
    def parse(cls, text: str) -> "Connectives":
        key = text.strip().upper()
        aliases = {"KLEENE": cls.KLEENE, "K3": cls.KLEENE, "COOPER": cls.COOPER, "QUASI": cls.COOPER,
                   "COOPERQUASI": cls.COOPER}
        if key not in aliases:
            raise ValueError(f"unknown connective suite {text!r}; choose kleene or cooper")
        return aliases[key]


@dataclass(frozen=True)
class LogicConfig:
    conditional: Conditional = Conditional.DF
    connectives: Connectives = Connectives.KLEENE
    _carrier: _kernels.Carrier = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if isinstance(self.conditional, str):
            object.__setattr__(self, "conditional", Conditional.parse(self.conditional))
        if isinstance(self.connectives, str):
            object.__setattr__(self, "connectives", Connectives.parse(self.connectives))
        binary = np.array(
            [CONJUNCTION_TABLES[self.connectives.value], DISJUNCTION_TABLES[self.connectives.value],
             self.conditional.table(self.connectives)],
            dtype=np.int8,
        )
        carrier = _kernels.Carrier(3, np.array(NEGATION_TABLE, dtype=np.int8), binary, top=2, bot=0)
        object.__setattr__(self, "_carrier", carrier)

    @property
    def carrier(self) -> _kernels.Carrier:
        return self._carrier

    def neg(self, a: TruthValue) -> TruthValue:
        return NEGATION_TABLE[a]

    def conj(self, a: TruthValue, b: TruthValue) -> TruthValue:
        return CONJUNCTION_TABLES[self.connectives.value][a][b]

    def disj(self, a: TruthValue, b: TruthValue) -> TruthValue:
        return DISJUNCTION_TABLES[self.connectives.value][a][b]

    def cond(self, a: TruthValue, b: TruthValue) -> TruthValue:
        return self.conditional.table(self.connectives)[a][b]

    def __str__(self) -> str:
        return f"{self.conditional.value}/{self.connectives.value.lower()}"


DF_KLEENE = LogicConfig(Conditional.DF)
CC_KLEENE = LogicConfig(Conditional.CC)


class ValidityScheme(enum.Enum):
    SS = "SS"
    TT = "TT"
    ST = "ST"
    TS = "TS"
    SS_AND_TT = "SSandTT"

    @property
    def premise_designated(self) -> frozenset[TruthValue]:
        return _DESIGNATED[self.value[0]]

    @property
    def conclusion_designated(self) -> frozenset[TruthValue]:
        return _DESIGNATED[self.value[1]]

    @classmethod
    def parse(cls, text: str) -> "ValidityScheme":
        key = text.strip().upper().replace("∩", "AND").replace("_", "").replace("&", "AND")
        for member in cls:
            if member.value.upper() == key:
                return member
        raise ValueError(f"unknown validity scheme {text!r}; choose ss, tt, st, ts or ssandtt")

    def __str__(self) -> str:
        return "SS∩TT" if self is ValidityScheme.SS_AND_TT else self.value


_DESIGNATED = {"S": frozenset({ONE}), "T": frozenset({HALF, ONE})}


@dataclass(frozen=True)
class Inference:
    """Premises entailing at least one of the conclusions."""

    premises: tuple[Formula, ...]
    conclusions: tuple[Formula, ...]

    def __init__(self, premises: Iterable[FormulaLike], conclusions: Iterable[FormulaLike] | FormulaLike):
        if isinstance(conclusions, (str, Formula)):
            conclusions = [conclusions]
        object.__setattr__(self, "premises", tuple(as_formula(p) for p in premises))
        object.__setattr__(self, "conclusions", tuple(as_formula(c) for c in conclusions))
        if not self.conclusions:
            raise SchemeError("an inference needs at least one conclusion")

    @property
    def atoms(self) -> list[str]:
        return atoms(*self.premises, *self.conclusions)

    def __str__(self) -> str:
        left = ", ".join(map(str, self.premises))
        right = ", ".join(map(str, self.conclusions))
        return f"{left} ⊢ {right}" if left else f"⊢ {right}"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity check.  Truthy exactly when the inference is valid."""

    valid: bool
    countermodel: dict[str, TruthValue] | None = None

    def __bool__(self) -> bool:
        return self.valid


# ---------------------------------------------------------------- evaluation

def evaluate(f: FormulaLike, v: Mapping[str, ValueLike], cfg: LogicConfig = DF_KLEENE) -> TruthValue:
    """Value of ``f`` under valuation ``v``."""
    f = as_formula(f)
    v = coerce_valuation(v)
    return _evaluate(f, v, cfg)


def _evaluate(f: Formula, v: Mapping[str, TruthValue], cfg: LogicConfig) -> TruthValue:
    if isinstance(f, Atom):
        if f.name not in v:
            raise UnboundAtomError(f.name)
        return v[f.name]
    if isinstance(f, Top):
        return ONE
    if isinstance(f, Bot):
        return ZERO
    if isinstance(f, Not):
        return cfg.neg(_evaluate(f.sub, v, cfg))
    if isinstance(f, And):
        return cfg.conj(_evaluate(f.left, v, cfg), _evaluate(f.right, v, cfg))
    if isinstance(f, Or):
        return cfg.disj(_evaluate(f.left, v, cfg), _evaluate(f.right, v, cfg))
    if isinstance(f, Cond):
        return cfg.cond(_evaluate(f.antecedent, v, cfg), _evaluate(f.consequent, v, cfg))
    raise TypeError(f"not a formula: {f!r}")


def valuations(names: Sequence[str]) -> Iterable[dict[str, TruthValue]]:
    """All valuations over ``names`` in the canonical enumeration order."""
    for combo in itertools.product(TruthValue, repeat=len(names)):
        yield dict(zip(names, combo))


def _check_limit(names: Sequence[str], limit: int) -> None:
    if len(names) > limit:
        raise AtomLimitError(f"{len(names)} atoms exceed the enumeration limit of {limit}")


def _mask(allowed: Iterable[TruthValue]) -> list[bool]:
    allowed = set(allowed)
    return [value in allowed for value in TruthValue]


def _first_countermodel(inf: Inference, cfg: LogicConfig, prem: frozenset, concl: frozenset,
                        names: list[str], backend: str | None) -> int:
    formulas = list(inf.premises) + list(inf.conclusions)
    program = _kernels.compile_formulas(formulas, names, cfg.carrier.top, cfg.carrier.bot)
    rows = [_mask(prem)] * len(inf.premises) + [_mask(set(TruthValue) - concl)] * len(inf.conclusions)
    masks = np.array(rows, dtype=bool).reshape(len(formulas), 3)
    return _kernels.first_hit(program, cfg.carrier, masks, backend)


def entails(inf: Inference, cfg: LogicConfig = DF_KLEENE, scheme: ValidityScheme = ValidityScheme.TT, *,
            max_atoms: int = DEFAULT_ATOM_LIMIT, backend: str | None = None) -> Verdict:
    """Decide ``inf`` by enumerating every valuation of its atoms.

    Returns the lexicographically first countermodel (atoms sorted, values 0, 1/2, 1)
    when the inference is invalid.
    """
    if isinstance(scheme, str):
        scheme = ValidityScheme.parse(scheme)
    if len(inf.conclusions) > 1 and scheme is not ValidityScheme.TT:
        raise SchemeError(f"multiple conclusions are only defined for TT, not {scheme}")
    names = inf.atoms
    _check_limit(names, max_atoms)
    if scheme is ValidityScheme.SS_AND_TT:
        hits = [
            _first_countermodel(inf, cfg, s.premise_designated, s.conclusion_designated, names, backend)
            for s in (ValidityScheme.SS, ValidityScheme.TT)
        ]
        hits = [h for h in hits if h >= 0]
        index = min(hits) if hits else -1
    else:
        index = _first_countermodel(inf, cfg, scheme.premise_designated, scheme.conclusion_designated,
                                    names, backend)
    if index < 0:
        return Verdict(True)
    digits = _kernels.decode(index, len(names), 3)
    return Verdict(False, {name: TruthValue(d) for name, d in zip(names, digits)})


def truth_table(formulas: Sequence[FormulaLike], cfg: LogicConfig = DF_KLEENE, names: Sequence[str] | None = None,
                *, max_atoms: int = DEFAULT_ATOM_LIMIT, backend: str | None = None) -> np.ndarray:
    """Value codes of each formula under every valuation, shape (3**n, len(formulas))."""
    formulas = [as_formula(f) for f in formulas]
    names = list(names) if names is not None else atoms(*formulas)
    _check_limit(names, max_atoms)
    program = _kernels.compile_formulas(formulas, names, cfg.carrier.top, cfg.carrier.bot)
    return _kernels.evaluate_all(program, cfg.carrier, backend)


def equivalent(a: FormulaLike, b: FormulaLike, cfg: LogicConfig = DF_KLEENE, *,
               max_atoms: int = DEFAULT_ATOM_LIMIT, backend: str | None = None) -> bool:
    """Pointwise identity of the two truth tables."""
    table = truth_table([a, b], cfg, max_atoms=max_atoms, backend=backend)
    return bool(np.array_equal(table[:, 0], table[:, 1]))


def equivalence_witness(a: FormulaLike, b: FormulaLike, cfg: LogicConfig = DF_KLEENE) -> dict[str, TruthValue] | None:
    """First valuation on which the two formulas differ, or None."""
    a, b = as_formula(a), as_formula(b)
    names = atoms(a, b)
    table = truth_table([a, b], cfg, names)
    differ = np.flatnonzero(table[:, 0] != table[:, 1])
    if differ.size == 0:
        return None
    digits = _kernels.decode(int(differ[0]), len(names), 3)
    return {name: TruthValue(d) for name, d in zip(names, digits)}


# ---------------------------------------------------------------- assertability

Weight = Union[Fraction, float]


@dataclass(frozen=True)
class WorldDistribution:
    """Weights on classical worlds; each world maps atoms to 0 or 1."""

    worlds: tuple[tuple[tuple[tuple[str, int], ...], Weight], ...]

    def __init__(self, worlds: Iterable[tuple[Mapping[str, int], Weight]]):
        normalised = []
        total: Weight = 0
        for world, weight in worlds:
            if weight < 0:
                raise ValueError(f"negative weight {weight}")
            for name, bit in world.items():
                if bit not in (0, 1):
                    raise ValueError(f"world assigns {name}={bit}; classical worlds use 0 or 1")
            normalised.append((tuple(sorted((k, int(b)) for k, b in world.items())), weight))
            total += weight
        if abs(total - 1) > 1e-12:
            raise ValueError(f"weights sum to {float(total)!r}, not 1")
        object.__setattr__(self, "worlds", tuple(normalised))

    @property
    def exact(self) -> bool:
        return all(isinstance(w, (int, Fraction)) for _, w in self.worlds)

    def probability(self, predicate) -> Weight:
        total: Weight = Fraction(0) if self.exact else 0.0
        for world, weight in self.worlds:
            if predicate(dict(world)):
                total += weight
        return total

    @classmethod
    def parse(cls, text: str) -> "WorldDistribution":
        """Read ``atom=0/1`` pairs separated by commas, whitespace, then a weight; ``#`` starts a comment."""
        worlds = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                assignment, weight_text = line.rsplit(None, 1)
            except ValueError:
                raise FileFormatError("expected '<atom>=<0|1>,... <weight>'", lineno) from None
            world = {}
            for pair in assignment.split(","):
                pair = pair.strip()
                if not pair:
                    continue
                name, sep, bit = pair.partition("=")
                if not sep or bit.strip() not in ("0", "1") or not name.strip().isidentifier():
                    raise FileFormatError(f"bad assignment {pair!r}", lineno)
                world[name.strip()] = int(bit.strip())
            try:
                weight: Weight = Fraction(weight_text) if "." not in weight_text and "e" not in weight_text.lower() \
                    else float(weight_text)
            except (ValueError, ZeroDivisionError):
                raise FileFormatError(f"bad weight {weight_text!r}", lineno) from None
            worlds.append((world, weight))
        try:
            return cls(worlds)
        except ValueError as exc:
            raise FileFormatError(str(exc)) from None

    @classmethod
    def from_file(cls, path: str | Path) -> "WorldDistribution":
        return cls.parse(Path(path).read_text(encoding="utf-8"))


def assertability(x: FormulaLike, d: WorldDistribution, cfg: LogicConfig = DF_KLEENE) -> Weight:
    """Probability that ``x`` is true, conditional on ``x`` having a classical value.

    Exact when every weight is rational, a float otherwise.
    """
    x = as_formula(x)
    value = {}
    for world, _ in d.worlds:
        w = dict(world)
        value[world] = _evaluate(x, {k: ONE if b else ZERO for k, b in w.items()}, cfg)
    true = d.probability(lambda w: value[tuple(sorted(w.items()))] == ONE)
    classical = d.probability(lambda w: value[tuple(sorted(w.items()))] != HALF)
    if math.isclose(float(classical), 0.0, abs_tol=1e-12):
        raise UndefinedAssertabilityError(f"{x} has no classical value in any world of positive weight")
    return true / classical
