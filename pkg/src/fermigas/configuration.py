"""Fermion spatial configurations and the standard sweep geometries.

Positions are dimensionless (units of 1/k_F). Ordering is significant:
fermion labels 1..n follow list order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exchange import exchange_function

# The permutation expansion costs O(n! 2^n); n = 8 is still desk-scale.
MAX_FERMIONS = 8


@dataclass(frozen=True, eq=False)
class Configuration:
    """Ordered positions of n fermions, 2 <= n <= MAX_FERMIONS."""

    positions: np.ndarray = field(repr=False)

    def __post_init__(self):
        pos = np.array(self.positions, dtype=float)
        if pos.ndim != 2 or pos.shape[1] != 3:
            raise ValueError(f"positions must have shape (n, 3), got {pos.shape}")
        n = pos.shape[0]
        if not 2 <= n <= MAX_FERMIONS:
            raise ValueError(f"need 2 <= n <= {MAX_FERMIONS} fermions, got {n}")
        if not np.all(np.isfinite(pos)):
            raise ValueError("positions must be finite")
        pos.setflags(write=False)
        object.__setattr__(self, "positions", pos)

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    def scaled(self, factor: float) -> "Configuration":
        """Same shape with every coordinate multiplied by factor >= 0."""
        if factor < 0:
            raise ValueError("scale factor must be non-negative")
        return Configuration(self.positions * factor)

    def relabeled(self, order) -> "Configuration":
        """Configuration with new fermion i at old position order[i] (1-based)."""
        idx = [int(i) - 1 for i in order]
        if sorted(idx) != list(range(self.n)):
            raise ValueError("order must be a permutation of 1..n")
        return Configuration(self.positions[idx])


def exchange_matrix(config: Configuration) -> np.ndarray:
    """Symmetric n x n matrix F with F[i][j] = f(|x_i - x_j|), unit diagonal."""
    pos = config.positions
    diff = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt(np.sum(diff * diff, axis=-1))
    F = exchange_function(dist.ravel()).reshape(dist.shape)
    np.fill_diagonal(F, 1.0)
    return 0.5 * (F + F.T)


def line_configuration(x_max: float, x: float) -> Configuration:
    """Three collinear fermions: 1 at the origin, 3 at x_max, 2 at x from 1."""
    if not 0 <= x <= x_max:
        raise ValueError(f"x must lie in [0, {x_max}], got {x}")
    return Configuration(np.array([[0.0, 0.0, 0.0],
                                   [float(x), 0.0, 0.0],
                                   [float(x_max), 0.0, 0.0]]))


def isosceles_configuration(base: float, height: float) -> Configuration:
    """Fermion 1 at (0, height, 0); fermions 2, 3 at (-+ base/2, 0, 0)."""
    if base <= 0:
        raise ValueError("base must be positive")
    if height < 0:
        raise ValueError("height must be non-negative")
    b = float(base) / 2.0
    return Configuration(np.array([[0.0, float(height), 0.0],
                                   [-b, 0.0, 0.0],
                                   [b, 0.0, 0.0]]))


def regular_simplex_configuration(n: int, edge: float) -> Configuration:
    """n fermions with all pairwise distances equal to edge.

    Segment (n=2), equilateral triangle (n=3) or regular tetrahedron (n=4).
    """
    if edge < 0:
        raise ValueError("edge must be non-negative")
    e = float(edge)
    if n == 2:
        pts = [[0.0, 0.0, 0.0], [e, 0.0, 0.0]]
    elif n == 3:
        pts = [[0.0, 0.0, 0.0], [e, 0.0, 0.0],
               [e / 2.0, e * np.sqrt(3.0) / 2.0, 0.0]]
    elif n == 4:
        pts = [[0.0, 0.0, 0.0], [e, 0.0, 0.0],
               [e / 2.0, e * np.sqrt(3.0) / 2.0, 0.0],
               [e / 2.0, e * np.sqrt(3.0) / 6.0, e * np.sqrt(2.0 / 3.0)]]
    else:
        raise ValueError(f"regular simplex supports n in {{2, 3, 4}}, got {n}")
    return Configuration(np.array(pts))


def random_configuration(n: int, box: float, seed: int) -> Configuration:
    """n fermions uniform in [0, box]^3, deterministic per seed."""
    if n < 2:
        raise ValueError("need at least two fermions")
    if box <= 0:
        raise ValueError("box must be positive")
    rng = np.random.default_rng(seed)
    return Configuration(rng.uniform(0.0, float(box), size=(n, 3)))
