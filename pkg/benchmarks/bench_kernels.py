"""Compare the compiled search kernels against the pure-Python fallback.

Both backends are imported directly and timed on the same instances: pivot-box
enumeration of real modular data, one larger synthetic box, and the
constraint-pruned support search used by the exhaustive cross-check.  The
support search grows combinatorially (su2 level 7 already runs for minutes in
pure Python), so its instances stay small.  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from mmk import _kernels_py
from mmk.invariants import commutant_basis, entry_bounds, oracle_instance
from mmk.kernels import HAVE_COMPILED
from mmk.modular_data import minimal_data, su2_data

if HAVE_COMPILED:
    from mmk import _kernels

BUDGET = 1.0 + 1e-9


def simplex_instance(d):
    cb = commutant_basis(d)
    bounds = entry_bounds(d, cb.cells)
    s0 = d.S[0]
    w = np.array([s0[i] * s0[j] for i, j in cb.cells])
    piv = np.array(cb.pivot_cells, dtype=np.intp)
    return (w[piv], bounds[piv], BUDGET)


def synthetic_simplex(ndim=8, bound=8, weight=0.07):
    return (np.full(ndim, weight), np.full(ndim, bound, dtype=np.int64), 1.0)


def support_instance(d):
    w, bounds, grp_ptr, row_ptr, ent_cell, ent_coef, _, _ = oracle_instance(d)
    return (w, bounds, BUDGET, grp_ptr, row_ptr, ent_cell, ent_coef, 1e-7)


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = [
        ("enumerate_simplex su2 k=28 pivots", "enumerate_simplex",
         simplex_instance(su2_data(28))),
        ("enumerate_simplex minimal m=12 pivots", "enumerate_simplex",
         simplex_instance(minimal_data(12))),
        ("enumerate_simplex synthetic 8-dim box", "enumerate_simplex",
         synthetic_simplex()),
        ("search_support su2 k=6", "search_support",
         support_instance(su2_data(6))),
        ("search_support minimal m=5", "search_support",
         support_instance(minimal_data(5))),
    ]

    print(f"{'case':42s} {'rows':>8s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, kernel, inst in cases:
        t_py, out_py = best_of(getattr(_kernels_py, kernel), inst, args.repeat)
        if HAVE_COMPILED:
            t_c, out_c = best_of(getattr(_kernels, kernel), inst, args.repeat)
            assert np.array_equal(out_py, out_c), f"backends disagree on {name}"
            print(f"{name:42s} {len(out_py):8d} {t_py:9.4f}s {t_c:9.4f}s {t_py / t_c:7.1f}x")
        else:
            print(f"{name:42s} {len(out_py):8d} {t_py:9.4f}s {'-':>10s} {'-':>8s}")
    if not HAVE_COMPILED:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
