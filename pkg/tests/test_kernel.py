import math

import numpy as np
import pytest
from scipy import integrate

from lapbound.experiments import (
    closed_kernel,
    kernel_experiment,
    neumann_green,
    prime_kernel,
    series_kernel,
)


def test_prime_value():
    assert prime_kernel(0.25, 0.25) == 0.25


def test_series_value():
    assert series_kernel(0.25, [0.25], 10_000)[0] == pytest.approx(0.072917, abs=1e-4)
    assert closed_kernel(0.25, 0.25) == pytest.approx(0.5 * (0.0625 - 0.25 + 1 / 3))


def test_green_function_oracle():
    # -G'' = delta_x - 1 away from x, zero mean, zero slope at both ends, kink of -1 at x
    x0 = 0.3
    y = np.linspace(0, 1, 100_001)
    G = neumann_green(x0, y)
    h = y[1] - y[0]
    d2 = (G[2:] - 2 * G[1:-1] + G[:-2]) / h**2
    away = np.abs(y[1:-1] - x0) > 2 * h
    assert np.allclose(d2[away], 1.0, atol=1e-6)
    assert abs(integrate.trapezoid(G, y)) <= 1e-9
    assert (G[1] - G[0]) / h == pytest.approx(0, abs=1e-4)
    assert (G[-1] - G[-2]) / h == pytest.approx(0, abs=1e-4)
    i = int(round(x0 / h))
    jump = (G[i + 1] - G[i]) / h - (G[i] - G[i - 1]) / h
    assert jump == pytest.approx(-1.0, abs=1e-4)


@pytest.mark.parametrize("kmax", [100, 1000])
def test_truncation_bound(kmax):
    y = np.linspace(0, 1, 101)
    for x0 in (0.0, 0.25, 0.6):
        gap = np.abs(series_kernel(x0, y, kmax) - closed_kernel(x0, y)).max()
        assert gap <= 2 / (math.pi**2 * kmax)


def test_series_blocking_invariant():
    y = np.linspace(0, 1, 17)
    assert np.allclose(series_kernel(0.4, y, 5000, block=7), series_kernel(0.4, y, 5000), atol=1e-14)


def test_pinv_row():
    rep = kernel_experiment(n=501, t=1e-4, x0=0.25, k_max=2000)
    assert rep.pinv_discrepancy <= 0.05
    assert rep.scale > 0
    assert rep.prime_gap >= 0.05


def test_x0_must_be_sample():
    with pytest.raises(ValueError):
        kernel_experiment(n=10, x0=0.25)
