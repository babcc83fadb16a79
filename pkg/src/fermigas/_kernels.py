"""Hot kernel for the permutation-sum assembly of spin density matrices.

The inner loop scatters n! signed kernel products into a 2^n x 2^n array
(O(n! 2^n) scalar accumulations, the dominant cost for n >= 6). A numba
@njit build is used when available; set FERMIGAS_DISABLE_NUMBA=1 to force
the pure-numpy fallback. Both paths produce bit-identical output.

Basis convention: state index s holds the spin of fermion i (1-based) in
bit (n - i), i.e. fermion 1 is the most significant bit; bit 0 means up.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

_flag = os.environ.get("FERMIGAS_DISABLE_NUMBA", "").strip().lower()
_want_numba = _flag not in ("1", "true", "yes")


@lru_cache(maxsize=None)
def permutation_table(n: int):
    """All permutations of range(n) with signs and cycle counts.

    Returns (perms, signs, cycles): perms has shape (n!, n) and lists the
    images perms[k][i] = P(i); signs[k] = sgn(P) as +-1.0; cycles[k]
    counts cycles of P, fixed points included. Arrays are read-only and
    cached per n.
    """
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    signs = np.empty(len(perms), dtype=np.float64)
    cycles = np.empty(len(perms), dtype=np.int64)
    for k, p in enumerate(perms):
        seen = [False] * n
        c = 0
        for i in range(n):
            if not seen[i]:
                c += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = int(p[j])
        cycles[k] = c
        signs[k] = 1.0 if (n - c) % 2 == 0 else -1.0
    for a in (perms, signs, cycles):
        a.setflags(write=False)
    return perms, signs, cycles


def accumulate_numpy(perms: np.ndarray, weights: np.ndarray,
                     out: np.ndarray) -> None:
    """out[s, t] += weights[k], t the image of basis state s under perms[k].

    The image permutes spins: bit i of t is bit perms[k][i] of s (in the
    fermion-1-is-MSB layout). Within one permutation the map s -> t is a
    bijection, so plain fancy-index addition is collision-free.
    """
    nperm, n = perms.shape
    dim = out.shape[0]
    s = np.arange(dim)
    bits = [(s >> (n - 1 - i)) & 1 for i in range(n)]
    for k in range(nperm):
        t = np.zeros(dim, dtype=np.int64)
        for i in range(n):
            t |= bits[perms[k, i]] << (n - 1 - i)
        out[s, t] += weights[k]


accumulate_numba = None

if _want_numba:
    try:
        from numba import njit
    except ImportError:
        _want_numba = False

if _want_numba:

    @njit(cache=True)
    def _accumulate_jit(perms, weights, out):  # pragma: no cover - jitted
        nperm, n = perms.shape
        dim = out.shape[0]
        for k in range(nperm):
            w = weights[k]
            for s in range(dim):
                t = 0
                for i in range(n):
                    bit = (s >> (n - 1 - perms[k, i])) & 1
                    t |= bit << (n - 1 - i)
                out[s, t] += w

    def accumulate_numba(perms, weights, out):
        _accumulate_jit(np.ascontiguousarray(perms),
                        np.ascontiguousarray(weights), out)


NUMBA_ENABLED = accumulate_numba is not None
accumulate = accumulate_numba if NUMBA_ENABLED else accumulate_numpy
