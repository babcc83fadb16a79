"""Benchmark the permutation-sum kernel: numba @njit versus pure numpy.

Run from the repository root:

    python benchmarks/bench_wick.py [--nmin 4] [--nmax 8] [--repeats 5]

Both backends are exercised directly, so the FERMIGAS_DISABLE_NUMBA flag
is irrelevant here; it only selects which backend the library calls.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from fermigas._kernels import (
    NUMBA_ENABLED,
    accumulate_numba,
    accumulate_numpy,
    permutation_table,
)


def time_backend(fn, n: int, repeats: int) -> float:
    rng = np.random.default_rng(n)
    F = np.eye(n) + 0.0
    r = rng.uniform(-0.5, 0.5, (n, n))
    F += r + r.T
    np.fill_diagonal(F, 1.0)
    perms, signs, _ = permutation_table(n)
    weights = signs * F[np.arange(n), perms].prod(axis=1)
    out = np.zeros((1 << n, 1 << n))
    fn(perms, weights, out)  # warm-up (JIT compile / cache touch)
    best = float("inf")
    for _ in range(repeats):
        out = np.zeros((1 << n, 1 << n))
        t0 = time.perf_counter()
        fn(perms, weights, out)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmin", type=int, default=4)
    parser.add_argument("--nmax", type=int, default=8)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print(f"numba available: {NUMBA_ENABLED}")
    header = f"{'n':>2} {'n!*2^n':>12} {'numpy [ms]':>12}"
    if NUMBA_ENABLED:
        header += f" {'numba [ms]':>12} {'speedup':>8}"
    print(header)
    for n in range(args.nmin, args.nmax + 1):
        perms, _, _ = permutation_table(n)
        work = len(perms) * (1 << n)
        t_np = time_backend(accumulate_numpy, n, args.repeats)
        line = f"{n:>2} {work:>12} {t_np * 1e3:>12.3f}"
        if NUMBA_ENABLED:
            t_nb = time_backend(accumulate_numba, n, args.repeats)
            line += f" {t_nb * 1e3:>12.3f} {t_np / t_nb:>8.1f}"
        print(line)


if __name__ == "__main__":
    main()
