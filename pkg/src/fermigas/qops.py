"""Operator toolkit on n-spin systems (real symmetric matrices, dim 2^n).

Index convention, shared by every module: fermion label i (1-based) lives
on tensor factor i, with factor 1 slowest-varying (most significant bit)
in the 2^n basis index; bit value 0 is spin up.
"""

from __future__ import annotations

import math

import numpy as np

SYMMETRY_TOL = 1e-12

# Eigenvalues of a density matrix down to -CLAMP are treated as roundoff
# from the n! permutation sum and clamped to zero; anything below is an
# input error.
EIGENVALUE_CLAMP = 1e-10


def num_spins(M: np.ndarray) -> int:
    """Number of spin-1/2 factors of a 2^n x 2^n operator."""
    dim = M.shape[0]
    if M.ndim != 2 or M.shape[1] != dim:
        raise ValueError(f"operator must be square, got {M.shape}")
    n = dim.bit_length() - 1
    if dim != 1 << n or n < 1:
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    return n


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    num_spins(M)
    scale = max(1.0, float(np.max(np.abs(M))))
    if np.max(np.abs(M - M.T)) > SYMMETRY_TOL * scale:
        raise ValueError("operator must be symmetric")
    return M


def _labels_to_indices(labels, n: int) -> list[int]:
    idx = sorted({int(l) for l in labels})
    if not idx:
        raise ValueError("label set must be non-empty")
    if idx[0] < 1 or idx[-1] > n:
        raise ValueError(f"labels must lie in 1..{n}, got {idx}")
    return [i - 1 for i in idx]


def spectrum(M: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric operator, ascending."""
    return np.linalg.eigvalsh(_check_symmetric(M))


def partial_transpose(M: np.ndarray, part) -> np.ndarray:
    """Transpose the factors named in part (1-based labels).

    Involutive, trace- and symmetry-preserving. part must be a non-empty
    proper subset of {1..n}.
    """
    M = _check_symmetric(M)
    n = num_spins(M)
    idx = _labels_to_indices(part, n)
    if len(idx) == n:
        raise ValueError("part must be a proper subset of the fermion labels")
    t = M.reshape((2,) * (2 * n))
    for i in idx:
        t = np.swapaxes(t, i, n + i)
    return t.reshape(M.shape).copy()


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Reduced operator on the factors in keep (1-based), in label order."""
    rho = np.asarray(rho, dtype=float)
    n = num_spins(rho)
    kept = _labels_to_indices(keep, n)
    traced = [i for i in range(n) if i not in kept]
    t = rho.reshape((2,) * (2 * n))
    for cnt, i in enumerate(traced):
        t = np.trace(t, axis1=i - cnt, axis2=i - cnt + n - cnt)
    dim = 1 << len(kept)
    return t.reshape(dim, dim)


def trace_norm(M: np.ndarray) -> float:
    """Sum of absolute eigenvalues; 1 for any density matrix."""
    return float(np.sum(np.abs(spectrum(M))))


def von_neumann_entropy(rho: np.ndarray, base: float = math.e) -> float:
    """-Tr rho log rho with 0 log 0 := 0; base 2 gives bits, e gives nats.

    Eigenvalues within EIGENVALUE_CLAMP below zero are clamped; anything
    more negative raises ValueError (not a density matrix).
    """
    if base <= 1:
        raise ValueError("base must exceed 1")
    lam = spectrum(rho)
    if lam[0] < -EIGENVALUE_CLAMP:
        raise ValueError(
            f"eigenvalue {lam[0]:.3e} below -{EIGENVALUE_CLAMP:.0e}; "
            "input is not positive semidefinite")
    lam = np.clip(lam, 0.0, 1.0)
    nz = lam[lam > 0.0]
    return float(-np.sum(nz * np.log(nz)) / math.log(base))


def permutation_operator(perm) -> np.ndarray:
    """Relabeling operator U for a permutation of fermion labels.

    perm maps new labels to old: perm[k] (1-based) is the old label whose
    spin ends up on factor k+1. If rho_old is the state of positions
    `pos` and rho_new the state of `pos[perm]`, then
    rho_new = U rho_old U^T.
    """
    order = [int(p) - 1 for p in perm]
    n = len(order)
    if sorted(order) != list(range(n)):
        raise ValueError("perm must be a permutation of 1..n")
    dim = 1 << n
    U = np.zeros((dim, dim))
    for s in range(dim):
        t = 0
        for k in range(n):
            bit = (s >> (n - 1 - order[k])) & 1
            t |= bit << (n - 1 - k)
        U[t, s] = 1.0
    return U
