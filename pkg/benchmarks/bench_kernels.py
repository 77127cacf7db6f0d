"""Compare the numba kernels with their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Reports the best-of-N wall time per kernel and checks the two backends
agree on every input.  Compilation is triggered once before timing.
"""

import argparse
import time

import numpy as np

from algcoh import _kernels as K
from algcoh import fixtures
from algcoh.field import Field


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def rref_cases(rng):
    # shapes typical of Leibniz systems: many rows, n^2 or (n+m)^2 columns
    for p, rows, cols in [(2, 512, 64), (3, 512, 64), (5, 1000, 100), (7, 2000, 144)]:
        yield f"rref F{p} {rows}x{cols}", rng.integers(0, p, size=(rows, cols)), p


def scan_cases():
    for name, p in [("m2_self", 2), ("m2_self", 3), ("tri_self", 5), ("iterated_SN", 7)]:
        alg = fixtures.build(name, p).base
        yield f"idempotents {alg.name} (p^n = {p ** alg.dim})", np.asarray(alg.mul, dtype=np.int64), p
    alg = fixtures.build("m2_self", 3).total
    yield f"idempotents {alg.name} (p^n = {3 ** alg.dim})", np.asarray(alg.mul, dtype=np.int64), 3


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K._HAVE_NUMBA:
        print("numba is not importable; only the numpy path exists")
        return
    rng = np.random.default_rng(0)
    # compile outside the timed region
    K.rref_modp_numba(np.eye(2, dtype=np.int64), 2)
    K.idempotent_scan_numba(np.asarray(Field(2).zeros((1, 1, 1)), dtype=np.int64), 2)

    print(f"{'case':44s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for label, mat, p in rref_cases(rng):
        Rn, pn = K.rref_modp_numpy(mat, p)
        Rb, pb = K.rref_modp_numba(mat, p)
        assert np.array_equal(Rn, Rb) and np.array_equal(pn, pb), label
        tn = best_of(lambda: K.rref_modp_numpy(mat, p), args.repeat)
        tb = best_of(lambda: K.rref_modp_numba(mat, p), args.repeat)
        print(f"{label:44s} {tn * 1e3:9.2f}ms {tb * 1e3:9.2f}ms {tn / tb:7.1f}x")
    for label, mul, p in scan_cases():
        a = K.idempotent_scan_numpy(mul, p)
        b = K.idempotent_scan_numba(mul, p)
        assert np.array_equal(a, b), label
        tn = best_of(lambda: K.idempotent_scan_numpy(mul, p), args.repeat)
        tb = best_of(lambda: K.idempotent_scan_numba(mul, p), args.repeat)
        print(f"{label:44s} {tn * 1e3:9.2f}ms {tb * 1e3:9.2f}ms {tn / tb:7.1f}x")


if __name__ == "__main__":
    main()
