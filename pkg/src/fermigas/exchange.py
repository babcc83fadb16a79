"""Zero-temperature exchange kernel of the ideal 3D Fermi gas.

All distances are dimensionless, x = k_F * r, so the Fermi momentum never
appears as a runtime parameter.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import bisect

# Below this the closed form loses digits to cancellation; switch to the
# Taylor series (exact to float64 precision for x < ~0.1).
SERIES_CUTOFF = 1e-2

# f(x)^2 - 1/2 changes sign exactly once on this interval.
THRESHOLD_BRACKET = (1.0, 3.0)


def _series(x: np.ndarray) -> np.ndarray:
    x2 = x * x
    return 1.0 - x2 / 10.0 + x2 * x2 / 280.0 - x2 * x2 * x2 / 15120.0 \
        + x2 * x2 * x2 * x2 / 1330560.0


def _closed(x: np.ndarray) -> np.ndarray:
    return 3.0 * (np.sin(x) - x * np.cos(x)) / (x * x * x)


def exchange_function(x):
    """Exchange kernel f(x) = 3 (sin x - x cos x) / x^3.

    This is 3 j1(x)/x with j1 the first spherical Bessel function,
    normalized so that f(0) = 1 (the bare j1(x)/x form is 1/3 at the
    origin). f decays like 3 cos(x)/x^2 for large x and |f| <= 1
    everywhere on x >= 0.

    Accepts a scalar or an array; returns the same shape. Raises
    ValueError for negative or non-finite input.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("separation must be finite")
    if np.any(arr < 0):
        raise ValueError("separation must be non-negative")
    small = arr < SERIES_CUTOFF
    out = np.empty_like(arr)
    out[small] = _series(arr[small])
    out[~small] = _closed(arr[~small])
    if np.isscalar(x) or arr.ndim == 0:
        return float(out)
    return out


def pair_entanglement_threshold(tolerance: float = 1e-8) -> float:
    """Smallest x* > 0 with f(x*)^2 = 1/2, located by bisection.

    Two fermions are spin-entangled iff their separation is below x*
    (about 1.815, commonly rounded to 1.8). Bisection runs on the fixed
    bracket [1, 3]; a missing sign change there would mean the kernel
    itself is wrong and raises ValueError.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = THRESHOLD_BRACKET
    return float(bisect(lambda x: exchange_function(x) ** 2 - 0.5, lo, hi,
                        xtol=tolerance))
