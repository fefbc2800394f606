"""Boundary blow-up of the random-walk Laplacian.

On an interval, ``(1/t) L^r f`` stays bounded inside the domain but grows
like ``t^{-1/2}`` at the end points.  On the hemisphere the ``sqrt(t)``
scaled operator approaches ``-(C4/C3) d_n f`` along the equator.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..graph import FullGaussian, build_graph
from ..laplacian import apply_at_samples, apply_pointwise
from ..manifold import XZ, Hemisphere, Interval, boundary_band, sample
from ..numerics import linear_fit, make_rng
from .constants import constants

__all__ = [
    "ScalingReport",
    "BoundaryReport",
    "scaling_experiment",
    "boundary_ratio",
    "halfsphere_boundary_experiment",
    "halfsphere_table",
    "MIN_NEIGHBOUR_SPACINGS",
]

log = logging.getLogger(__name__)

# A rung is trusted only when sqrt(t) covers this many sample spacings.
MIN_NEIGHBOUR_SPACINGS = 2.0


@dataclass(frozen=True)
class ScalingReport:
    point: np.ndarray
    t: np.ndarray
    values: np.ndarray
    safe: np.ndarray
    underflow: np.ndarray
    fit: object = None
    alpha: float = 0.0
    kind: str = "r"

    @property
    def used(self):
        """Rungs that entered the log-log fit."""
        return self.safe & ~self.underflow & (self.values != 0)


def _ladder(t_ladder):
    t = np.asarray(t_ladder, dtype=float)
    if t.ndim != 1 or len(t) < 4:
        raise ValueError("the t ladder needs at least 4 rungs")
    if not np.all(np.diff(t) < 0):
        raise ValueError("the t ladder must be strictly decreasing")
    if (t <= 0).any():
        raise ValueError("bandwidths must be positive")
    return t


def _point(x):
    return np.atleast_1d(np.asarray(x, dtype=float))


def scaling_experiment(cloud, fn, x, t_ladder, alpha=0.0, kind="r"):
    """``(1/t) L f(x)`` along a ladder of bandwidths, with a log-log fit.

    Rungs with ``sqrt(t) < 2 h`` (``h`` the sample spacing) are flagged as
    unsafe and kept out of the fit, as are rungs where the value underflows
    to zero.  The fit is ``log|value|`` against ``log t``; it is ``None``
    when fewer than two rungs survive (e.g. for constant ``f``).
    """
    t = _ladder(t_ladder)
    x = _point(x)
    if not cloud.manifold.contains(x, tol=1e-9):
        raise ValueError(f"point {x} is not on the domain")
    h = cloud.spacing()
    fs = fn.values(cloud)
    vals = np.empty(len(t))
    for i, ti in enumerate(t):
        g = build_graph(cloud, FullGaussian(ti), alpha)
        vals[i] = apply_pointwise(g, kind, fn, x, sample_values=fs).scaled("1/t").value
    safe = np.sqrt(t) >= MIN_NEIGHBOUR_SPACINGS * h
    underflow = ~np.isfinite(vals) | ((vals == 0) & (np.abs(fs - fs[0]).max() > 0))
    if (~safe).any():
        log.info("rungs %s flagged: sqrt(t) < %g h", t[~safe], MIN_NEIGHBOUR_SPACINGS)
    if underflow.any():
        log.warning("rungs %s underflowed and were dropped", t[underflow])
    report = ScalingReport(x, t, vals, safe, underflow, None, alpha, kind)
    use = report.used
    fit = None
    if use.sum() >= 2:
        fit = linear_fit(np.log(t[use]), np.log(np.abs(vals[use])))
    return ScalingReport(x, t, vals, safe, underflow, fit, alpha, kind)


def boundary_ratio(cloud, fn, alpha=0.0, t=1e-5, kind="r"):
    """``|(1/t) L f(b)| / |(1/t) L f(a)|`` on an interval ``[a, b]``."""
    m = cloud.manifold
    if not isinstance(m, Interval):
        raise ValueError("boundary_ratio needs an Interval cloud")
    g = build_graph(cloud, FullGaussian(t), alpha)
    fs = fn.values(cloud)
    right = apply_pointwise(g, kind, fn, [m.b], sample_values=fs).scaled("1/t").value
    left = apply_pointwise(g, kind, fn, [m.a], sample_values=fs).scaled("1/t").value
    if left == 0:
        raise ZeroDivisionError("the Laplacian vanishes at the left end point")
    return abs(right) / abs(left)


@dataclass(frozen=True)
class BoundaryReport:
    band: np.ndarray
    points: np.ndarray
    values: np.ndarray
    target: np.ndarray
    fit: object
    mse_raw: float
    mse_scaled: float
    n: int
    t: float
    seed: int | None = None
    extras: dict = field(default_factory=dict)

    @property
    def mse_best(self):
        return min(self.mse_raw, self.mse_scaled)


def _rim_normal_derivative(fn, pts):
    """``<grad f, e_3>`` at each of ``pts``; ``e_3`` is the inward normal on the rim."""
    return np.asarray(fn.grad(pts))[:, 2]


def halfsphere_boundary_experiment(
    n=2000, t=0.25, band_width=0.05, seed=0, fn=XZ, target_fn=None, alpha=0.0
):
    """Compare ``(1/sqrt t) L^r f`` with ``-d_n f`` near the hemisphere rim.

    The target is ``-<grad g, e_3>`` at each band point, with ``g`` the
    ``target_fn`` (default: ``fn``); for ``f = xz`` this is ``-x``.  Two errors are reported: against
    the raw target and against the target times ``C4/C3``.
    """
    if n < 100:
        raise ValueError("use at least 100 points")
    cloud = sample(Hemisphere(), n=n, rng=make_rng(seed), seed=seed)
    band = boundary_band(cloud, band_width)
    if band.size == 0:
        raise ValueError("no samples fall inside the boundary band")
    g = build_graph(cloud, FullGaussian(t), alpha)
    vals = apply_at_samples(g, "r", fn.values(cloud))[band] / math.sqrt(t)
    pts = cloud.points[band]
    target = -_rim_normal_derivative(target_fn or fn, pts)
    ratio = constants(2).boundary_ratio
    mse_raw = float(np.mean((vals - target) ** 2))
    mse_scaled = float(np.mean((vals - ratio * target) ** 2))
    fit = linear_fit(pts[:, 0], vals)
    return BoundaryReport(band, pts, vals, target, fit, mse_raw, mse_scaled, n, t, seed)


def halfsphere_table(n_list, t_list, band_width=0.05, seed=0):
    """Grid of half-sphere runs, one report per ``(n, t)`` cell."""
    return [
        halfsphere_boundary_experiment(n, t, band_width, seed)
        for n in n_list
        for t in t_list
    ]
