"""Time the numba and numpy enumeration kernels on growing atom counts.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.  Each row checks
that both backends agree before reporting timings.
"""

from __future__ import annotations

import argparse
import random
from timeit import default_timer as timer

import numpy as np

from trivalent import _kernels
from trivalent.corpus import random_formula
from trivalent.semantics import DF_KLEENE


def workload(n_atoms: int, seed: int = 1):
    rng = random.Random(seed)
    names = [f"p{i}" for i in range(n_atoms)]
    formulas = [random_formula(rng, names, 6, constant_rate=0.0) for _ in range(3)]
    program = _kernels.compile_formulas(formulas, names, DF_KLEENE.carrier.top, DF_KLEENE.carrier.bot)
    # an unsatisfiable mask forces a full scan in first_hit
    masks = np.zeros((len(formulas), 3), dtype=bool)
    return program, masks


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = timer()
        fn()
        times.append(timer() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--max-atoms", type=int, default=12)
    args = parser.parse_args()
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    carrier = DF_KLEENE.carrier
    print(f"{'atoms':>5} {'rows':>8} " + " ".join(f"{b + ' full':>12} {b + ' scan':>12}" for b in backends))
    for n in range(4, args.max_atoms + 1, 2):
        program, masks = workload(n)
        tables = [_kernels.evaluate_all(program, carrier, b) for b in backends]
        assert all(np.array_equal(tables[0], t) for t in tables[1:])
        cols = []
        for b in backends:
            cols.append(best_of(lambda: _kernels.evaluate_all(program, carrier, b), args.repeat))
            cols.append(best_of(lambda: _kernels.first_hit(program, carrier, masks, b), args.repeat))
        print(f"{n:>5} {3 ** n:>8} " + " ".join(f"{t * 1e3:>10.2f}ms" for t in cols))
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled; numpy timings only")


if __name__ == "__main__":
    main()
