import numpy as np
import pytest
from hypothesis import given, strategies as st

from fermigas.exchange import (
    SERIES_CUTOFF,
    _closed,
    _series,
    exchange_function,
    pair_entanglement_threshold,
)
from oracles import SERIES_ORACLE, XSTAR


def test_unity_at_origin():
    assert exchange_function(0.0) == 1.0


def test_value_at_pi():
    # sin(pi) = 0, cos(pi) = -1, so f(pi) = 3/pi^2 exactly
    assert exchange_function(np.pi) == pytest.approx(3.0 / np.pi**2, abs=1e-15)


def test_strictly_below_one_away_from_origin():
    x = np.linspace(1e-6, 50.0, 5001)
    f = exchange_function(x)
    assert np.all(np.abs(f) < 1.0)


def test_large_x_decay():
    # |sin x - x cos x| <= 1 + x, so |f| <= 3 (1 + x) / x^3
    for x in (20.0, 50.0, 100.0, 200.0):
        assert abs(exchange_function(x)) <= 3.0 * (1.0 + x) / x**3
    assert abs(exchange_function(100.0)) < 1e-3


def test_series_branch_matches_frozen_oracle():
    # 40-digit reference values; the closed form is useless this small.
    # The final row sits exactly at the switch point and exercises the
    # closed branch, whose cancellation error there is ~1e-12.
    for x, expected in SERIES_ORACLE:
        tol = 1e-15 if x < SERIES_CUTOFF else 1e-11
        assert exchange_function(x) == pytest.approx(expected, abs=tol)


def test_branches_agree_above_the_switch():
    # below ~0.02 the closed form itself carries > 1e-12 cancellation error
    x = np.linspace(2.0 * SERIES_CUTOFF, 0.1, 500)
    assert np.max(np.abs(_series(x) - _closed(x))) < 1e-12


def test_scalar_and_array_shapes():
    assert isinstance(exchange_function(1.5), float)
    out = exchange_function(np.array([0.0, 1.0, 2.0]))
    assert out.shape == (3,)
    assert out[0] == 1.0


def test_rejects_negative_and_nonfinite():
    with pytest.raises(ValueError):
        exchange_function(-0.5)
    with pytest.raises(ValueError):
        exchange_function(np.nan)
    with pytest.raises(ValueError):
        exchange_function(np.array([1.0, -2.0]))


@given(st.floats(min_value=0.0, max_value=1e6, allow_nan=False))
def test_bounded_kernel_property(x):
    f = exchange_function(x)
    assert np.isfinite(f)
    assert abs(f) <= 1.0


def test_threshold_location():
    xstar = pair_entanglement_threshold(tolerance=1e-8)
    assert 1.795 <= xstar <= 1.835
    assert xstar == pytest.approx(XSTAR, abs=1e-7)
    assert round(xstar, 1) == 1.8


def test_threshold_defining_property():
    xstar = pair_entanglement_threshold(tolerance=1e-8)
    assert abs(exchange_function(xstar) ** 2 - 0.5) < 1e-7


def test_threshold_coarse_tolerance():
    xstar = pair_entanglement_threshold(tolerance=1e-6)
    assert xstar == pytest.approx(XSTAR, abs=1e-5)


def test_threshold_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        pair_entanglement_threshold(tolerance=0.0)
