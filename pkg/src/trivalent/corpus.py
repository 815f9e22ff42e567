"""Deterministic inference corpora used to cross-check the engines."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Sequence

from .semantics import Inference
from .syntax import BOT, TOP, And, Atom, Cond, Formula, Not, Or

CONNECTIVES = (And, Or, Cond)


def formulas_up_to_depth(leaves: Sequence[Formula], max_depth: int) -> list[Formula]:
    """Every formula over ``leaves`` with ¬, ∧, ∨, → of depth at most ``max_depth``."""
    layer = list(leaves)
    for _ in range(max_depth):
        previous = layer
        layer = list(leaves) + [Not(f) for f in previous] + \
            [op(a, b) for op in CONNECTIVES for a in previous for b in previous]
    return layer


@lru_cache(maxsize=None)
def exhaustive_inferences() -> tuple[Inference, ...]:
    """Small exhaustive grammar over p, q and the constants.

    Theoremhood questions ``⊢ A`` for every formula of depth ≤ 2, plus every
    single-premise question ``A ⊢ B`` with A and B of depth ≤ 1.
    """
    leaves = (Atom("p"), Atom("q"), TOP, BOT)
    deep = formulas_up_to_depth(leaves, 2)
    shallow = formulas_up_to_depth(leaves, 1)
    return tuple([Inference([], f) for f in deep] + [Inference([a], b) for a in shallow for b in shallow])


def random_formula(rng: random.Random, names: Sequence[str], max_depth: int, constant_rate: float = 0.1) -> Formula:
    if max_depth == 0 or rng.random() < 0.25:
        if rng.random() < constant_rate:
            return rng.choice((TOP, BOT))
        return Atom(rng.choice(names))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(random_formula(rng, names, max_depth - 1, constant_rate))
    op = CONNECTIVES[kind - 1]
    return op(random_formula(rng, names, max_depth - 1, constant_rate),
              random_formula(rng, names, max_depth - 1, constant_rate))


@lru_cache(maxsize=None)
def random_inferences(count: int = 500, seed: int = 20240613, max_atoms: int = 3, max_depth: int = 3,
                      max_premises: int = 2) -> tuple[Inference, ...]:
    rng = random.Random(seed)
    names = ["p", "q", "r"][:max_atoms]
    out = []
    for _ in range(count):
        premises = [random_formula(rng, names, max_depth) for _ in range(rng.randint(0, max_premises))]
        out.append(Inference(premises, random_formula(rng, names, max_depth)))
    return tuple(out)


def oracle_corpus() -> Iterator[Inference]:
    """The exhaustive grammar followed by 500 seeded random inferences."""
    yield from exhaustive_inferences()
    yield from random_inferences()
