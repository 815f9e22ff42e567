"""Exhaustive-enumeration kernels shared by the semantics and algebra modules.

Formulas are compiled into a flat straight-line program (one instruction per
distinct subformula, children before parents) over a carrier of ``base``
elements encoded as small integers.  Assignments are enumerated in
odometer order with the first atom as the most significant digit, so index
``i`` is the ``i``-th assignment in lexicographic order.

Two interchangeable implementations exist: a numba-compiled scalar loop that
can stop at the first hit, and a vectorised numpy version that evaluates all
assignments at once.  Set ``TRIVALENT_DISABLE_NUMBA=1`` to force the numpy
path; it is also used when numba cannot be imported.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .syntax import And, Atom, Bot, Cond, Formula, Not, Or, Top

OP_ATOM, OP_CONST, OP_NOT, OP_AND, OP_OR, OP_COND = range(6)
BIN_AND, BIN_OR, BIN_COND = 0, 1, 2

_DISABLED = os.environ.get("TRIVALENT_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by TRIVALENT_DISABLE_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


@dataclass(frozen=True)
class Program:
    ops: np.ndarray      # int8, one opcode per node
    lhs: np.ndarray      # int32, atom index / constant code / first operand node
    rhs: np.ndarray      # int32, second operand node (unused for unary ops)
    roots: tuple[int, ...]
    atom_names: tuple[str, ...]


def compile_formulas(formulas: Sequence[Formula], atom_names: Sequence[str], top: int, bot: int) -> Program:
    """Compile formulas into one program, sharing common subformulas."""
    index_of_atom = {name: i for i, name in enumerate(atom_names)}
    memo: dict[Formula, int] = {}
    ops: list[int] = []
    lhs: list[int] = []
    rhs: list[int] = []

    def emit(op: int, a: int, b: int = 0) -> int:
        ops.append(op)
        lhs.append(a)
        rhs.append(b)
        return len(ops) - 1

    def visit(f: Formula) -> int:
        slot = memo.get(f)
        if slot is not None:
            return slot
        if isinstance(f, Atom):
            slot = emit(OP_ATOM, index_of_atom[f.name])
        elif isinstance(f, Top):
            slot = emit(OP_CONST, top)
        elif isinstance(f, Bot):
            slot = emit(OP_CONST, bot)
        elif isinstance(f, Not):
            slot = emit(OP_NOT, visit(f.sub))
        elif isinstance(f, And):
            slot = emit(OP_AND, visit(f.left), visit(f.right))
        elif isinstance(f, Or):
            slot = emit(OP_OR, visit(f.left), visit(f.right))
        elif isinstance(f, Cond):
            slot = emit(OP_COND, visit(f.antecedent), visit(f.consequent))
        else:
            raise TypeError(f"not a formula: {f!r}")
        memo[f] = slot
        return slot

    roots = tuple(visit(f) for f in formulas)
    return Program(
        np.asarray(ops, dtype=np.int8),
        np.asarray(lhs, dtype=np.int32),
        np.asarray(rhs, dtype=np.int32),
        roots,
        tuple(atom_names),
    )


# ---------------------------------------------------------------- numpy

def _numpy_values(ops, lhs, rhs, n_atoms, base, neg, binary, slots) -> np.ndarray:
    total = base ** n_atoms
    index = np.arange(total, dtype=np.int64)
    digits = [((index // base ** (n_atoms - 1 - i)) % base).astype(np.int8) for i in range(n_atoms)]
    values: list[np.ndarray] = []
    for k in range(len(ops)):
        op = ops[k]
        if op == OP_ATOM:
            values.append(digits[lhs[k]])
        elif op == OP_CONST:
            values.append(np.full(total, lhs[k], dtype=np.int8))
        elif op == OP_NOT:
            values.append(neg[values[lhs[k]]])
        else:
            values.append(binary[op - OP_AND][values[lhs[k]], values[rhs[k]]])
    if len(slots) == 0:
        return np.zeros((total, 0), dtype=np.int8)
    return np.stack([values[s] for s in slots], axis=1)


def numpy_first_hit(ops, lhs, rhs, n_atoms, base, neg, binary, slots, masks) -> int:
    values = _numpy_values(ops, lhs, rhs, n_atoms, base, neg, binary, slots)
    hit = np.ones(values.shape[0], dtype=bool)
    for c in range(len(slots)):
        hit &= masks[c][values[:, c]]
    found = np.flatnonzero(hit)
    return int(found[0]) if found.size else -1


def numpy_evaluate_all(ops, lhs, rhs, n_atoms, base, neg, binary, slots) -> np.ndarray:
    return _numpy_values(ops, lhs, rhs, n_atoms, base, neg, binary, slots)


# ---------------------------------------------------------------- numba

def _scalar_first_hit(ops, lhs, rhs, n_atoms, base, neg, binary, slots, masks):
    n_nodes = ops.shape[0]
    digits = np.zeros(max(n_atoms, 1), dtype=np.int64)
    values = np.zeros(max(n_nodes, 1), dtype=np.int64)
    total = 1
    for _ in range(n_atoms):
        total *= base
    for idx in range(total):
        for k in range(n_nodes):
            op = ops[k]
            if op == 0:
                values[k] = digits[lhs[k]]
            elif op == 1:
                values[k] = lhs[k]
            elif op == 2:
                values[k] = neg[values[lhs[k]]]
            else:
                values[k] = binary[op - 3, values[lhs[k]], values[rhs[k]]]
        ok = True
        for c in range(slots.shape[0]):
            if not masks[c, values[slots[c]]]:
                ok = False
                break
        if ok:
            return idx
        pos = n_atoms - 1
        while pos >= 0:
            digits[pos] += 1
            if digits[pos] < base:
                break
            digits[pos] = 0
            pos -= 1
    return -1


def _scalar_evaluate_all(ops, lhs, rhs, n_atoms, base, neg, binary, slots):
    n_nodes = ops.shape[0]
    digits = np.zeros(max(n_atoms, 1), dtype=np.int64)
    values = np.zeros(max(n_nodes, 1), dtype=np.int64)
    total = 1
    for _ in range(n_atoms):
        total *= base
    out = np.empty((total, slots.shape[0]), dtype=np.int8)
    for idx in range(total):
        for k in range(n_nodes):
            op = ops[k]
            if op == 0:
                values[k] = digits[lhs[k]]
            elif op == 1:
                values[k] = lhs[k]
            elif op == 2:
                values[k] = neg[values[lhs[k]]]
            else:
                values[k] = binary[op - 3, values[lhs[k]], values[rhs[k]]]
        for c in range(slots.shape[0]):
            out[idx, c] = values[slots[c]]
        pos = n_atoms - 1
        while pos >= 0:
            digits[pos] += 1
            if digits[pos] < base:
                break
            digits[pos] = 0
            pos -= 1
    return out


if HAVE_NUMBA:
    numba_first_hit = njit(cache=True, nogil=True)(_scalar_first_hit)
    numba_evaluate_all = njit(cache=True, nogil=True)(_scalar_evaluate_all)
else:
    numba_first_hit = None
    numba_evaluate_all = None


# ---------------------------------------------------------------- dispatch

@dataclass(frozen=True)
class Carrier:
    """Operation tables of a finite carrier, encoded for the kernels."""

    base: int
    neg: np.ndarray       # (base,) int8
    binary: np.ndarray    # (3, base, base) int8: meet/and, join/or, conditional
    top: int
    bot: int


def _pick(backend: str | None) -> tuple[Callable, Callable]:
    chosen = backend or BACKEND
    if chosen == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return numba_first_hit, numba_evaluate_all
    if chosen == "numpy":
        return numpy_first_hit, numpy_evaluate_all
    raise ValueError(f"unknown backend {chosen!r}")


def first_hit(program: Program, carrier: Carrier, masks: np.ndarray, backend: str | None = None) -> int:
    """Index of the first assignment putting every root's value inside its mask row, or -1.

    ``masks`` has one boolean row of length ``carrier.base`` per program root.
    """
    first, _ = _pick(backend)
    slots = np.asarray(program.roots, dtype=np.int64)
    return int(first(program.ops, program.lhs, program.rhs, len(program.atom_names), carrier.base,
                     carrier.neg, carrier.binary, slots, np.ascontiguousarray(masks, dtype=np.bool_)))


def evaluate_all(program: Program, carrier: Carrier, backend: str | None = None) -> np.ndarray:
    """Values of every root under every assignment, shape (base**n_atoms, n_roots)."""
    _, every = _pick(backend)
    slots = np.asarray(program.roots, dtype=np.int64)
    return np.asarray(every(program.ops, program.lhs, program.rhs, len(program.atom_names), carrier.base,
                            carrier.neg, carrier.binary, slots))


def decode(index: int, n_atoms: int, base: int) -> list[int]:
    """Digits of an assignment index, first atom first."""
    digits = []
    for _ in range(n_atoms):
        index, digit = divmod(index, base)
        digits.append(digit)
    return digits[::-1]
