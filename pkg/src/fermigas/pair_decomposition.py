"""Identity-plus-pair-singlet decomposition of Fermi-gas spin states.

Any of these states can be compared against the mixture

    w0 * I / 2^n  +  sum_{i<j} w_ij * |S_ij><S_ij| (x) I / 2^(n-2)

with |S_ij> the spin singlet of the pair (i, j). The decomposition is
exact for n = 2 and n = 3 (closed forms below); for n >= 4 the library
reports the least-squares residual instead of assuming exactness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import wick
from .configuration import MAX_FERMIONS

# |S> = (|ud> - |du>)/sqrt(2) in the fermion-1-is-MSB basis (up = bit 0).
SINGLET_STATE = np.zeros(4)
SINGLET_STATE[0b01] = 1.0 / np.sqrt(2.0)
SINGLET_STATE[0b10] = -1.0 / np.sqrt(2.0)
SINGLET_STATE.setflags(write=False)

SINGLET_PROJECTOR = np.outer(SINGLET_STATE, SINGLET_STATE)
SINGLET_PROJECTOR.setflags(write=False)

GRAM_CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class PairWeights:
    """Singlet weight per unordered pair plus the derived background weight.

    w0 = 1 - sum(w) keeps the reconstruction at unit trace. residual is
    the Frobenius norm of the state minus its reconstruction.
    """

    n: int
    w: dict = field(repr=False)
    residual: float

    def __post_init__(self):
        pairs = list(itertools.combinations(range(1, self.n + 1), 2))
        if sorted(self.w) != pairs:
            raise ValueError(f"weights must cover exactly the pairs {pairs}")

    @property
    def w0(self) -> float:
        return 1.0 - sum(self.w.values())


def _pair_key(i: int, j: int, n: int) -> tuple[int, int]:
    i, j = int(i), int(j)
    if i == j:
        raise ValueError("pair labels must differ")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"pair labels must lie in 1..{n}, got ({i}, {j})")
    return (i, j) if i < j else (j, i)


@lru_cache(maxsize=None)
def _singlet_component_cached(n: int, i: int, j: int) -> np.ndarray:
    dim = 1 << n
    s = np.arange(dim)
    bi, bj = n - i, n - j
    rest = s & ~((1 << bi) | (1 << bj))
    pair = 2 * ((s >> bi) & 1) + ((s >> bj) & 1)
    equal_rest = rest[:, None] == rest[None, :]
    out = SINGLET_PROJECTOR[pair[:, None], pair[None, :]] * equal_rest
    out /= float(1 << (n - 2))
    out.setflags(write=False)
    return out


def singlet_component(n: int, i: int, j: int) -> np.ndarray:
    """Singlet projector of pair (i, j) tensored with I/2^(n-2).

    Unit trace, PSD; tracing out everything but the pair returns the bare
    singlet projector. The returned array is cached and read-only.
    """
    if not 2 <= n <= MAX_FERMIONS:
        raise ValueError(f"need 2 <= n <= {MAX_FERMIONS}, got {n}")
    i, j = _pair_key(i, j, n)
    return _singlet_component_cached(n, i, j)


def _pair_basis(n: int):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    return pairs, [_singlet_component_cached(n, a, b) for a, b in pairs]


def reconstruct(weights: PairWeights) -> np.ndarray:
    """Assemble w0 I/2^n + sum w_ij singlet_component(i, j).

    Unit trace by construction. Negative weights are permitted; the
    result may then fail positivity, which callers can check via the
    spectrum.
    """
    n = weights.n
    out = weights.w0 * np.eye(1 << n) / float(1 << n)
    for (a, b), w in weights.w.items():
        out = out + w * _singlet_component_cached(n, a, b)
    return out


def closed_form_weights(F) -> PairWeights:
    """Exact singlet weights from the exchange matrix, n in {2, 3} only.

    n = 2: w_12 = f^2 / (2 - f^2) (so the background weight w0 equals the
    familiar (2 - 2 f^2)/(2 - f^2) mixing probability).

    n = 3: w_ij = (-f_ij^2 + f_ij f_ik f_jk)
                  / (-2 + f_ij^2 + f_ik^2 + f_jk^2 - f_ij f_ik f_jk).

    The residual is measured against the exact state of the same F and is
    zero to roundoff. Raises DegenerateConfiguration when the denominator
    vanishes (coincident limit; probe with small finite separations).
    """
    F = np.asarray(F, dtype=float)
    n = F.shape[0]
    if n == 2:
        f2 = F[0, 1] ** 2
        den = 2.0 - f2
        if abs(den) < 1e-12:
            raise wick.DegenerateConfiguration("coincident-limit denominator")
        w = {(1, 2): f2 / den}
    elif n == 3:
        f12, f13, f23 = F[0, 1], F[0, 2], F[1, 2]
        den = -2.0 + f12**2 + f13**2 + f23**2 - f12 * f13 * f23
        if abs(den) < 1e-12:
            raise wick.DegenerateConfiguration("coincident-limit denominator")
        w = {(1, 2): (-f12**2 + f12 * f13 * f23) / den,
             (1, 3): (-f13**2 + f13 * f12 * f23) / den,
             (2, 3): (-f23**2 + f23 * f12 * f13) / den}
    else:
        raise ValueError(f"closed forms exist for n in {{2, 3}} only, got {n}")
    rho = wick.spin_density_matrix(F)
    resid = _reconstruction_residual(rho, n, w)
    return PairWeights(n=n, w=w, residual=resid)


def _reconstruction_residual(rho: np.ndarray, n: int, w: dict) -> float:
    recon = (1.0 - sum(w.values())) * np.eye(1 << n) / float(1 << n)
    for (a, b), wv in w.items():
        recon = recon + wv * _singlet_component_cached(n, a, b)
    return float(np.linalg.norm(rho - recon))


def fit_weights(rho) -> PairWeights:
    """Least-squares projection of a state onto the singlet-pair family.

    Minimizes the Frobenius distance to w0 I/2^n + sum w_ij B_ij under
    the built-in trace-1 constraint (w0 = 1 - sum w). Solves the Gram
    normal equations over the traceless differences B_ij - I/2^n.

    Raises np.linalg.LinAlgError when the Gram matrix is numerically
    singular, naming the pairs involved in the dependency.
    """
    rho = np.asarray(rho, dtype=float)
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    if rho.shape != (dim, dim) or dim != 1 << n or not 2 <= n <= MAX_FERMIONS:
        raise ValueError(f"state must be 2^n x 2^n with 2 <= n <= {MAX_FERMIONS}")
    mixed = np.eye(dim) / float(dim)
    pairs, basis = _pair_basis(n)
    diffs = [b - mixed for b in basis]
    gram = np.array([[float(np.tensordot(a, b)) for b in diffs] for a in diffs])
    target = rho - mixed
    rhs = np.array([float(np.tensordot(a, target)) for a in diffs])
    cond = np.linalg.cond(gram)
    if not np.isfinite(cond) or cond > GRAM_CONDITION_LIMIT:
        null = np.linalg.svd(gram)[2][-1]
        worst = [p for p, c in zip(pairs, null) if abs(c) > 0.1]
        raise np.linalg.LinAlgError(
            f"singlet basis is numerically dependent (cond {cond:.2e}); "
            f"pairs {worst} dominate the null direction")
    w = dict(zip(pairs, np.linalg.solve(gram, rhs)))
    resid = _reconstruction_residual(rho, n, w)
    return PairWeights(n=n, w=w, residual=resid)
