"""Sample-to-sample spread of the scaled Laplacian as ``n`` grows."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import FullGaussian, build_graph
from ..laplacian import apply_pointwise
from ..manifold import CATALOGUE, Interval, Uniform, sample
from ..numerics import linear_fit, make_rng

__all__ = ["ConcentrationReport", "concentration_experiment", "default_t_rule", "MIN_REPS"]

MIN_REPS = 20


def default_t_rule(n, d=1):
    return n ** (-1.0 / (d + 3))


@dataclass(frozen=True)
class ConcentrationReport:
    n: np.ndarray
    t: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    reps: int
    fit: object

    @property
    def strictly_decreasing(self):
        return bool(np.all(np.diff(self.std) < 0))


def concentration_experiment(
    n_list=(250, 500, 1000, 2000),
    reps=50,
    t_rule=0.01,
    fn=None,
    x=0.5,
    seed=0,
    alpha=0.0,
):
    """Standard deviation of ``(1/sqrt t) L^r f(x)`` over repeated iid draws.

    ``t_rule`` is either a fixed bandwidth or a callable ``n -> t``.  All
    draws come from one generator seeded with ``seed``.
    """
    if reps < MIN_REPS:
        raise ValueError(f"need at least {MIN_REPS} repetitions to estimate a spread")
    fn = CATALOGUE["x2"] if fn is None else fn
    rule = t_rule if callable(t_rule) else (lambda n: float(t_rule))
    rng = make_rng(seed)
    domain = Interval(0.0, 1.0)
    ns = np.asarray(n_list, dtype=int)
    ts = np.array([rule(int(n)) for n in ns])
    means, stds = [], []
    for n, t in zip(ns, ts):
        vals = np.empty(reps)
        for r in range(reps):
            cloud = sample(domain, Uniform(), int(n), rng=rng)
            g = build_graph(cloud, FullGaussian(t), alpha)
            vals[r] = apply_pointwise(g, "r", fn, [x]).scaled("1/sqrt(t)").value
        means.append(vals.mean())
        stds.append(vals.std(ddof=1))
    stds = np.array(stds)
    fit = linear_fit(np.log(ns), np.log(stds)) if len(ns) >= 2 else None
    return ConcentrationReport(ns, ts, np.array(means), stds, reps, fit)
