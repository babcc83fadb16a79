"""Exact n-fermion reduced spin density matrix from the exchange matrix.

At zero temperature the n-point correlators of the non-interacting gas
contract into pairwise kernel values, leaving a signed sum over the
symmetric group: each permutation P contributes sgn(P) * prod_i F[i][P(i)]
times the operator permuting the n spin-1/2 factors by P. Normalizing the
sum by its trace yields the physical state.
"""

from __future__ import annotations

import numpy as np

from ._kernels import accumulate, permutation_table
from .configuration import MAX_FERMIONS

# Below this the normalization trace is treated as zero: three or more
# effectively coincident fermions are Pauli-forbidden. Probe coincident
# limits with small finite separations instead.
DEGENERACY_THRESHOLD = 1e-10


class DegenerateConfiguration(ValueError):
    """Raised when the normalization trace vanishes (Pauli-forbidden)."""


def _check_exchange(F) -> np.ndarray:
    F = np.asarray(F, dtype=float)
    if F.ndim != 2 or F.shape[0] != F.shape[1]:
        raise ValueError(f"exchange matrix must be square, got {F.shape}")
    n = F.shape[0]
    if not 2 <= n <= MAX_FERMIONS:
        raise ValueError(f"need 2 <= n <= {MAX_FERMIONS}, got {n}")
    if np.max(np.abs(F - F.T)) > 1e-12:
        raise ValueError("exchange matrix must be symmetric")
    if np.max(np.abs(np.diag(F) - 1.0)) > 1e-12:
        raise ValueError("exchange matrix must have unit diagonal")
    if np.max(np.abs(F)) > 1.0 + 1e-12:
        raise ValueError("exchange matrix entries must lie in [-1, 1]")
    return F


def _kernel_products(F: np.ndarray):
    n = F.shape[0]
    perms, signs, cycles = permutation_table(n)
    fprod = F[np.arange(n), perms].prod(axis=1)
    return perms, signs, cycles, fprod


def spin_density_matrix(F) -> np.ndarray:
    """Unit-trace 2^n x 2^n spin state of n fermions with exchange matrix F.

    Real, symmetric and positive semidefinite. Fermion i occupies tensor
    factor i with factor 1 slowest-varying (most significant bit); bit 0
    is spin up.

    Raises DegenerateConfiguration when the normalization trace falls
    below DEGENERACY_THRESHOLD (three or more coincident fermions).
    """
    F = _check_exchange(F)
    n = F.shape[0]
    perms, signs, _, fprod = _kernel_products(F)
    rho = np.zeros((1 << n, 1 << n))
    accumulate(perms, signs * fprod, rho)
    trace = float(np.trace(rho))
    if trace < DEGENERACY_THRESHOLD:
        raise DegenerateConfiguration(
            f"normalization trace {trace:.3e} below {DEGENERACY_THRESHOLD:.0e}; "
            "configuration is Pauli-forbidden (too many coincident fermions)")
    rho /= trace
    # exact symmetry: P and P^-1 enter with equal weight up to rounding
    return 0.5 * (rho + rho.T)


def normalization_trace(F) -> float:
    """Trace of the unnormalized permutation sum.

    Computed directly as sum_P sgn(P) 2^cycles(P) prod_i F[i][P(i)], an
    independent route from tracing the assembled matrix; for n = 2 it is
    4 - 2 f^2, for n = 3 it is 8 - 4 (f12^2 + f13^2 + f23^2)
    + 4 f12 f13 f23.
    """
    F = _check_exchange(F)
    _, signs, cycles, fprod = _kernel_products(F)
    return float(np.dot(signs * np.exp2(cycles.astype(float)), fprod))
