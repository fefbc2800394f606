"""Limit of the graph regularizer ``f^T L^u_alpha f / (n^2 t)``.

On ``[0, 1]`` with uniform density the ratio to ``int |f'|^2`` should
approach ``(1/4) pi^{1/2 - alpha}`` for any smooth ``f``; the table keeps
the largest value seen over the bandwidth grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..graph import FullGaussian, build_graph
from ..laplacian import quadratic_form
from ..manifold import CATALOGUE, TABLE_FUNCTIONS, Interval, Uniform, sample

__all__ = [
    "CoefficientReport",
    "theory_coefficient",
    "quadform_experiment",
    "quadform_table",
    "log_grid",
]


def theory_coefficient(alpha, d=1):
    return 0.25 * math.pi ** (d * (0.5 - alpha))


def log_grid(start, stop, count):
    """Geometric grid from ``start`` to ``stop`` inclusive."""
    return np.geomspace(start, stop, int(count))


@dataclass(frozen=True)
class CoefficientReport:
    function: str
    alpha: float
    t: np.ndarray
    coefficient: np.ndarray
    theory: float

    @property
    def max_coefficient(self):
        return float(np.nanmax(self.coefficient))

    @property
    def argmax_t(self):
        return float(self.t[int(np.nanargmax(self.coefficient))])


def _cloud(n):
    return sample(Interval(0.0, 1.0), Uniform(), n, mode="equispaced")


def quadform_table(n=1001, alphas=(0.0,), functions=TABLE_FUNCTIONS, t_grid=None):
    """Coefficient reports for every ``(alpha, function)`` pair.

    One graph is built per ``(alpha, t)`` and shared across functions.
    """
    if t_grid is None:
        t_grid = log_grid(1.0, 1e-7, 29)
    t_grid = np.asarray(t_grid, dtype=float)
    fns = [CATALOGUE[f] if isinstance(f, str) else f for f in functions]
    for fn in fns:
        if not fn.grad_sq_integral:
            raise ValueError(f"{fn.name}: the gradient energy is zero")
    cloud = _cloud(n)
    values = [fn.values(cloud) for fn in fns]
    reports = []
    for alpha in alphas:
        coef = np.empty((len(fns), len(t_grid)))
        for j, t in enumerate(t_grid):
            g = build_graph(cloud, FullGaussian(t), alpha)
            for i, (fn, fv) in enumerate(zip(fns, values)):
                # uniform density on [0, 1]: p^{2 - 2 alpha} = 1
                coef[i, j] = quadratic_form(g, fv) / (n * n * t) / fn.grad_sq_integral
        theory = theory_coefficient(alpha)
        reports.extend(
            CoefficientReport(fn.name, float(alpha), t_grid, coef[i], theory)
            for i, fn in enumerate(fns)
        )
    return reports


def quadform_experiment(n, alpha, fn, t_grid=None, density=None):
    """Single-function version of :func:`quadform_table`."""
    if density is not None and not isinstance(density, Uniform):
        raise ValueError("the coefficient study uses the uniform density on [0, 1]")
    (report,) = quadform_table(n, (alpha,), (fn,), t_grid)
    return report
