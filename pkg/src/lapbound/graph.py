"""Weighted graphs on point clouds and the alpha-normalization of weights.

Degrees follow the averaged convention ``d(X_i) = (1/n) sum_j W[i, j]``.
The normalized weights are ``W_alpha[i, j] = W[i, j] / (d_i d_j)^alpha`` and
``d_alpha`` is the averaged row sum of ``W_alpha``.  Self-edges are always
present (weight ``t^{-d/2}`` for the Gaussian kernel, 1 otherwise).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

__all__ = [
    "KernelConfig",
    "FullGaussian",
    "EpsilonNN",
    "SymmetricKNN",
    "WeightedGraph",
    "IsolatedVertexError",
    "gaussian_weight",
    "squared_distances",
    "build_graph",
    "degree_at",
    "parse_scheme",
    "dump_weights_csv",
]


class IsolatedVertexError(ValueError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has zero degree")
        self.vertex = vertex


@dataclass(frozen=True)
class KernelConfig:
    t: float
    dim: int = 1

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError(f"bandwidth must be positive, got {self.t}")

    @property
    def prefactor(self):
        return self.t ** (-self.dim / 2)


@dataclass(frozen=True)
class FullGaussian:
    """Dense Gaussian kernel with bandwidth ``t``.

    ``dim`` sets the ``t^{-dim/2}`` prefactor; by default the intrinsic
    dimension of the cloud's manifold is used.
    """

    t: float
    dim: int | None = None


@dataclass(frozen=True)
class EpsilonNN:
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("epsilon must be positive")


@dataclass(frozen=True)
class SymmetricKNN:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")


def parse_scheme(text, t=None):
    """Parse ``full``, ``eps:<radius>`` or ``knn:<k>``."""
    kind, _, arg = text.partition(":")
    if kind == "full":
        if t is None:
            raise ValueError("the full Gaussian graph needs a bandwidth t")
        return FullGaussian(float(t))
    if kind == "eps":
        return EpsilonNN(float(arg))
    if kind == "knn":
        return SymmetricKNN(int(arg))
    raise ValueError(f"unknown graph scheme {text!r}")


def gaussian_weight(x, y, cfg):
    """``t^{-d/2} exp(-|x - y|^2 / t)`` with the Euclidean ambient distance."""
    diff = np.ravel(x).astype(float) - np.ravel(y).astype(float)
    return cfg.prefactor * math.exp(-float(diff @ diff) / cfg.t)


def squared_distances(points):
    """Pairwise squared distances, computed once per unordered pair."""
    pts = np.asarray(points, dtype=float)
    return squareform(pdist(pts, "sqeuclidean"))


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Weights, degrees and their alpha-normalized counterparts.

    Attributes
    ----------
    W : ndarray
        Raw symmetric weights including self-edges.
    degree : ndarray
        ``(1/n) * W.sum(1)``.
    alpha : float
    W_alpha : ndarray
        ``D^{-alpha} W D^{-alpha}``; identical to ``W`` when ``alpha == 0``.
    degree_alpha : ndarray
        ``(1/n) * W_alpha.sum(1)``.
    """

    W: np.ndarray
    degree: np.ndarray
    alpha: float
    W_alpha: np.ndarray
    degree_alpha: np.ndarray
    cloud: object = None
    scheme: object = None
    kernel: KernelConfig | None = None
    points: np.ndarray | None = None

    @property
    def n(self):
        return self.W.shape[0]

    @classmethod
    def from_weights(cls, W, alpha=0.0, cloud=None, scheme=None, kernel=None, points=None):
        W = np.asarray(W, dtype=float)
        if W.ndim != 2 or W.shape[0] != W.shape[1]:
            raise ValueError("weight matrix must be square")
        if not np.array_equal(W, W.T):
            raise ValueError("weight matrix must be symmetric")
        if (W < 0).any():
            raise ValueError("weights must be non-negative")
        n = W.shape[0]
        deg = W.sum(axis=1) / n
        bad = np.flatnonzero(deg <= 0)
        if bad.size:
            raise IsolatedVertexError(int(bad[0]))
        if alpha == 0:
            Wa = W
            dega = deg
        else:
            s = deg ** (-alpha)
            # s_i * s_j is commutative in floating point, so W_alpha stays symmetric
            Wa = W * np.outer(s, s)
            dega = Wa.sum(axis=1) / n
        for arr in (W, deg, Wa, dega):
            arr.setflags(write=False)
        if points is None and cloud is not None:
            points = cloud.points
        return cls(W, deg, float(alpha), Wa, dega, cloud, scheme, kernel, points)


def _knn_adjacency(D2, k):
    n = D2.shape[0]
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n, got k={k}, n={n}")
    A = np.zeros((n, n))
    idx = np.arange(n)
    for i in range(n):
        d = D2[i].copy()
        d[i] = np.inf
        # stable sort: equal distances keep index order, so smaller index wins
        nbrs = np.argsort(d, kind="stable")[:k]
        A[i, nbrs] = 1.0
    A = np.maximum(A, A.T)
    A[idx, idx] = 1.0
    return A


def build_graph(cloud, scheme, alpha=0.0):
    """Assemble a :class:`WeightedGraph` on ``cloud``.

    Parameters
    ----------
    cloud : PointCloud or array_like of shape (n, N)
    scheme : FullGaussian, EpsilonNN or SymmetricKNN
        Gaussian weights for ``FullGaussian``; 0/1 weights otherwise.  The
        kNN graph is symmetrized by union.
    alpha : float
        Normalization exponent.
    """
    points = np.asarray(getattr(cloud, "points", cloud), dtype=float)
    if points.ndim == 1:
        points = points[:, None]
    n = points.shape[0]
    if n < 2:
        raise ValueError("need at least two points")
    D2 = squared_distances(points)
    kernel = None
    if isinstance(scheme, FullGaussian):
        dim = scheme.dim
        if dim is None:
            manifold = getattr(cloud, "manifold", None)
            dim = manifold.intrinsic_dim if manifold is not None else points.shape[1]
        kernel = KernelConfig(scheme.t, dim)
        W = kernel.prefactor * np.exp(-D2 / kernel.t)
    elif isinstance(scheme, EpsilonNN):
        W = (D2 <= scheme.radius**2).astype(float)
    elif isinstance(scheme, SymmetricKNN):
        W = _knn_adjacency(D2, scheme.k)
    else:
        raise TypeError(f"unknown graph scheme {scheme!r}")
    return WeightedGraph.from_weights(
        W,
        alpha,
        cloud=cloud if hasattr(cloud, "points") else None,
        scheme=scheme,
        kernel=kernel,
        points=points,
    )


def _sample_points(graph):
    if graph.points is None:
        raise ValueError("graph has no sample points attached")
    return graph.points


def degree_at(graph, x):
    """Degrees ``(d_{t,n}(x), d_{alpha,t,n}(x))`` at an arbitrary point.

    ``x`` interacts with the samples but is not added to their degrees.
    Only defined for the full Gaussian graph.
    """
    w, wa = _kernel_row(graph, x)
    n = graph.n
    return float(w.sum() / n), float(wa.sum() / n)


def _kernel_row(graph, x):
    """Raw and alpha-normalized weights between ``x`` and every sample."""
    if not isinstance(graph.scheme, FullGaussian):
        raise ValueError("out-of-sample degrees need the full Gaussian scheme")
    pts = _sample_points(graph)
    x = np.asarray(x, dtype=float).reshape(-1)
    diff = pts - x
    r2 = np.einsum("ij,ij->i", diff, diff)
    cfg = graph.kernel
    w = cfg.prefactor * np.exp(-r2 / cfg.t)
    if graph.alpha == 0:
        return w, w
    dx = w.sum() / graph.n
    wa = w / (dx * graph.degree) ** graph.alpha
    return w, wa


def dump_weights_csv(graph, path, which="W"):
    """Dense, header-free dump of ``W`` or ``W_alpha`` for debugging."""
    M = graph.W if which == "W" else graph.W_alpha
    with open(path, "w", encoding="utf-8") as fh:
        for row in M:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
