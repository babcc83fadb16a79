"""Entanglement diagnostics: negativity, PPT tests, witnesses, entropies."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exchange import exchange_function
from .qops import num_spins, partial_transpose, spectrum, trace_norm, von_neumann_entropy

# Suppresses eigensolver noise right at the PPT boundary.
NEGATIVITY_CLAMP = 1e-12
PPT_TOL = 1e-10

# Three-spin states in the fermion-1-is-MSB basis (up = bit 0):
# GHZ = (|uuu> + |ddd>)/sqrt(2), W3 = (|udu> + |duu> + |uud>)/sqrt(3).
GHZ_STATE = np.zeros(8)
GHZ_STATE[0b000] = GHZ_STATE[0b111] = 1.0 / np.sqrt(2.0)
GHZ_STATE.setflags(write=False)

W3_STATE = np.zeros(8)
W3_STATE[0b010] = W3_STATE[0b100] = W3_STATE[0b001] = 1.0 / np.sqrt(3.0)
W3_STATE.setflags(write=False)

# Witnesses: non-negative expectation on every state lacking genuine
# tripartite entanglement of the matching class.
WITNESS_GHZ = 0.5 * np.eye(8) - np.outer(GHZ_STATE, GHZ_STATE)
WITNESS_GHZ.setflags(write=False)
WITNESS_W3 = (2.0 / 3.0) * np.eye(8) - np.outer(W3_STATE, W3_STATE)
WITNESS_W3.setflags(write=False)

_WITNESSES = {"ghz": WITNESS_GHZ, "w3": WITNESS_W3}


@dataclass(frozen=True)
class EntanglementReport:
    """Diagnostics for one state: negativities per bipartition (keyed by
    the tuple of labels on one side), the corresponding negative
    partial-transpose eigenvalues and PPT flags, entropies in both units,
    and witness expectations when n = 3."""

    n: int
    negativities: dict = field(repr=False)
    negative_eigenvalues: dict = field(repr=False)
    ppt_flags: dict = field(repr=False)
    entropy_bits: float
    entropy_nats: float
    witness_ghz: float | None = None
    witness_w3: float | None = None


def negative_eigenvalues(rho: np.ndarray, part) -> np.ndarray:
    """Eigenvalues of the partial transpose below -NEGATIVITY_CLAMP, ascending."""
    lam = spectrum(partial_transpose(rho, part))
    return lam[lam < -NEGATIVITY_CLAMP]


def negativity(rho: np.ndarray, part) -> float:
    """(||rho^T_part||_1 - 1) / 2, clamped to zero within NEGATIVITY_CLAMP.

    Equals the sum of absolute negative partial-transpose eigenvalues;
    ranges from 0 (PPT) to 1/2 (maximal for one spin against the rest).
    """
    N = 0.5 * (trace_norm(partial_transpose(rho, part)) - 1.0)
    return 0.0 if abs(N) < NEGATIVITY_CLAMP else float(N)


def two_fermion_negativity(x):
    """Pair negativity at separation x, in closed form.

    The two-fermion state is a singlet/maximally-mixed mixture, giving
    N(x) = max(0, (2 f(x)^2 - 1) / (2 (2 - f(x)^2))). Positive exactly
    where f(x)^2 > 1/2, i.e. below the pair entanglement threshold.
    Accepts scalars or arrays.
    """
    f2 = np.square(exchange_function(x))
    N = (2.0 * f2 - 1.0) / (2.0 * (2.0 - f2))
    out = np.maximum(0.0, N)
    return float(out) if np.isscalar(out) or np.ndim(out) == 0 else out


def witness_expectation(rho: np.ndarray, kind: str) -> float:
    """Tr(rho Pi_kind) for kind 'ghz' or 'w3' on a three-spin state.

    Non-negative for every Fermi-gas state; a negative value would
    certify genuine tripartite entanglement of that class.
    """
    key = str(kind).lower()
    if key not in _WITNESSES:
        raise ValueError(f"kind must be 'ghz' or 'w3', got {kind!r}")
    rho = np.asarray(rho, dtype=float)
    if num_spins(rho) != 3:
        raise ValueError("witnesses are defined for three spins only")
    return float(np.tensordot(rho, _WITNESSES[key]))


def coincident_entropy_bound(n: int, base: float = math.e) -> float:
    """log(2^n - (n + 1)): entropy of a uniform mixture of all
    non-symmetric n-spin states, the counting value for n fermions
    squeezed into a vanishing volume."""
    if n < 2:
        raise ValueError("need n >= 2")
    if base <= 1:
        raise ValueError("base must exceed 1")
    return math.log(2**n - (n + 1)) / math.log(base)


def single_fermion_bipartitions(n: int) -> list[tuple[int, ...]]:
    """The bipartitions (i,) vs rest; just (1,) for n = 2 (its mirror is
    the same split)."""
    if n == 2:
        return [(1,)]
    return [(i,) for i in range(1, n + 1)]


def entanglement_report(rho: np.ndarray, parts=None) -> EntanglementReport:
    """Full diagnostics for one state.

    parts defaults to every single-fermion bipartition. Witness
    expectations are filled in for n = 3 and left None otherwise.
    """
    rho = np.asarray(rho, dtype=float)
    n = num_spins(rho)
    if parts is None:
        parts = single_fermion_bipartitions(n)
    parts = [tuple(sorted(int(i) for i in p)) for p in parts]
    negs, neg_eigs, ppt = {}, {}, {}
    for p in parts:
        negs[p] = negativity(rho, p)
        neg_eigs[p] = tuple(float(v) for v in negative_eigenvalues(rho, p))
        ppt[p] = negs[p] < PPT_TOL
    nats = von_neumann_entropy(rho, base=math.e)
    return EntanglementReport(
        n=n,
        negativities=negs,
        negative_eigenvalues=neg_eigs,
        ppt_flags=ppt,
        entropy_bits=nats / math.log(2.0),
        entropy_nats=nats,
        witness_ghz=witness_expectation(rho, "ghz") if n == 3 else None,
        witness_w3=witness_expectation(rho, "w3") if n == 3 else None,
    )


def bipartition_label(part, n: int) -> str:
    """Column label for a bipartition, e.g. (2,) of 3 spins -> 'N_2_13'."""
    part = sorted(int(i) for i in part)
    rest = [i for i in range(1, n + 1) if i not in part]
    return "N_{}_{}".format("".join(map(str, part)), "".join(map(str, rest)))
