"""Reproducing kernel of the Neumann Laplacian on ``[0, 1]``.

Three routes to the same kernel: the cosine series, the closed-form
Neumann Green's function, and a row of the graph Laplacian pseudoinverse.
The boundary-free kernel ``1/4 - |x - y|/2`` is included for contrast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..graph import FullGaussian, build_graph
from ..laplacian import laplacian_matrix
from ..manifold import Interval, Uniform, sample
from ..numerics import pseudoinverse

__all__ = [
    "KernelReport",
    "series_kernel",
    "neumann_green",
    "closed_kernel",
    "prime_kernel",
    "kernel_experiment",
]


def series_kernel(x0, y, k_max=10_000, block=2_000):
    """``sum_{k=1}^{k_max} cos(k pi x0) cos(k pi y) / (k pi)^2``.

    The cosines are not normalized, so the sum is half the Green's function.
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    out = np.zeros_like(y)
    for start in range(1, k_max + 1, block):
        k = np.arange(start, min(start + block, k_max + 1), dtype=float)
        kp = k * math.pi
        coef = np.cos(kp * x0) / kp**2
        out += np.cos(np.outer(y, kp)) @ coef
    return out


def neumann_green(x, y):
    """Green's function of ``-d^2/dy^2`` on ``[0, 1]`` with Neumann ends.

    Zero mean in ``y``; ``-G'' = delta_x - 1``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (x * x + y * y) / 2 - np.maximum(x, y) + 1.0 / 3.0


def closed_kernel(x0, y):
    return 0.5 * neumann_green(x0, y)


def prime_kernel(x0, y):
    return 0.25 - 0.5 * np.abs(x0 - np.asarray(y, dtype=float))


@dataclass(frozen=True)
class KernelReport:
    x0: float
    y: np.ndarray
    k_series: np.ndarray
    k_closed: np.ndarray
    k_pinv: np.ndarray
    k_prime: np.ndarray
    scale: float
    series_vs_closed: float
    pinv_discrepancy: float
    prime_gap: float

    @property
    def k_pinv_aligned(self):
        return self.k_pinv / self.scale


def kernel_experiment(n=1001, t=1e-4, alpha=0.0, x0=0.25, k_max=10_000, null_tol=1e-9):
    """Compare the pseudoinverse row at ``x0`` with the analytic kernels.

    ``scale`` is the least-squares ``c`` in ``K_pinv ~ c K_series``;
    ``pinv_discrepancy`` is ``|K_pinv - c K_series| / |c K_series|``.
    ``series_vs_closed`` and ``prime_gap`` are sup-norm gaps on the samples.
    """
    if k_max < 100:
        raise ValueError("k_max should be at least 100")
    cloud = sample(Interval(0.0, 1.0), Uniform(), n, mode="equispaced")
    y = cloud.coords
    hits = np.flatnonzero(np.isclose(y, x0, rtol=0, atol=1e-12))
    if hits.size == 0:
        raise ValueError(f"x0={x0} is not a sample point of the {n}-point grid")
    i0 = int(hits[0])
    x0 = float(y[i0])

    g = build_graph(cloud, FullGaussian(t), alpha)
    P = pseudoinverse(laplacian_matrix(g, "u"), null_tol=null_tol)
    k_pinv = P[i0].copy()

    k_series = series_kernel(x0, y, k_max)
    k_closed = closed_kernel(x0, y)
    k_prime = prime_kernel(x0, y)
    c = float(k_pinv @ k_series / (k_series @ k_series))
    resid = np.linalg.norm(k_pinv - c * k_series) / np.linalg.norm(c * k_series)
    return KernelReport(
        x0=x0,
        y=y,
        k_series=k_series,
        k_closed=k_closed,
        k_pinv=k_pinv,
        k_prime=k_prime,
        scale=c,
        series_vs_closed=float(np.abs(k_series - k_closed).max()),
        pinv_discrepancy=float(resid),
        prime_gap=float(np.abs(k_series - k_prime).max()),
    )
