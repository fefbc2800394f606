"""The unnormalized, random-walk and symmetric graph Laplacians.

Two conventions coexist and are kept apart on purpose:

* matrix form, where ``D_alpha`` holds plain row sums of ``W_alpha``;
* pointwise form, where degrees are averaged by ``1/n``.

They agree for the random-walk and symmetric operators.  For the
unnormalized operator ``laplacian_matrix(g, "u") @ f == n * L^u f`` at the
sample points.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .graph import _kernel_row
from .numerics import eigh_symmetric

__all__ = [
    "KINDS",
    "PointwiseApplication",
    "RandomWalkSpectrum",
    "laplacian_matrix",
    "apply_pointwise",
    "apply_at_samples",
    "quadratic_form",
    "random_walk_spectrum",
]

KINDS = {
    "u": "u", "unnormalized": "u",
    "r": "r", "rw": "r", "random_walk": "r",
    "s": "s", "sym": "s", "symmetric": "s",
}


def _kind(kind):
    try:
        return KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown Laplacian kind {kind!r}") from None


@dataclass(frozen=True)
class PointwiseApplication:
    """One value of ``L f(x)`` and the bandwidth normalization applied to it."""

    value: float
    t: float
    normalization: str = "none"

    def scaled(self, how):
        """Return a copy divided by ``t`` (``"1/t"``) or ``sqrt(t)`` (``"1/sqrt(t)"``)."""
        if self.normalization != "none":
            raise ValueError(f"already normalized by {self.normalization}")
        if how == "1/t":
            return replace(self, value=self.value / self.t, normalization=how)
        if how == "1/sqrt(t)":
            return replace(self, value=self.value / np.sqrt(self.t), normalization=how)
        raise ValueError(f"unknown normalization {how!r}")


def _row_sums(graph):
    D = graph.W_alpha.sum(axis=1)
    if (D <= 0).any():
        raise ValueError(f"vertex {int(np.argmin(D))} has zero degree")
    return D


def laplacian_matrix(graph, kind="u"):
    """Dense Laplacian matrix of the requested kind.

    ``u``: ``D - W``; ``r``: ``I - D^{-1} W``; ``s``: ``I - D^{-1/2} W D^{-1/2}``,
    all built from ``W_alpha`` and its row sums.
    """
    k = _kind(kind)
    Wa = graph.W_alpha
    D = _row_sums(graph)
    n = graph.n
    if k == "u":
        L = -Wa.copy()
        L[np.diag_indices(n)] += D
        return L
    if k == "r":
        L = -(Wa / D[:, None])
        L[np.diag_indices(n)] += 1.0
        return L
    r = 1.0 / np.sqrt(D)
    L = -(Wa * np.outer(r, r))
    L[np.diag_indices(n)] += 1.0
    return L


def _evaluate(f, points):
    return np.asarray(f(points), dtype=float).reshape(-1)


def apply_at_samples(graph, kind, values):
    """Pointwise ``L f`` at every sample, given the sample values of ``f``."""
    k = _kind(kind)
    f = np.asarray(values, dtype=float)
    n = graph.n
    Wa = graph.W_alpha
    da = graph.degree_alpha
    if k == "s":
        f = f / np.sqrt(da)
    lu = (da * f) - (Wa @ f) / n
    if k == "u":
        return lu
    if k == "r":
        return lu / da
    return lu / np.sqrt(da)


def _sample_index(graph, x):
    hits = np.flatnonzero(np.all(graph.points == x, axis=1))
    if hits.size == 0:
        raise ValueError("the symmetric Laplacian is only defined at sample points")
    return int(hits[0])


def apply_pointwise(graph, kind, f, x, sample_values=None):
    """Evaluate ``L f(x)`` at any point ``x`` (samples or unseen points).

    ``L^u f(x) = (1/n) sum_j w_alpha(x, X_j) (f(x) - f(X_j))`` and
    ``L^r f(x) = L^u f(x) / d_alpha(x)``, with ``w_alpha`` and ``d_alpha``
    built from the out-of-sample degree of ``x``.  The symmetric form needs
    sample degrees on both sides, so ``x`` must be one of the samples.

    Parameters
    ----------
    graph : WeightedGraph
        Full Gaussian graph.
    kind : {"u", "r", "s"}
    f : callable
        Maps an ``(m, N)`` array of points to ``m`` values.
    x : array_like
        Evaluation point in ambient coordinates.
    sample_values : array_like, optional
        ``f`` at the samples, if already computed.

    Returns
    -------
    PointwiseApplication
        Un-normalized value; call ``.scaled("1/t")`` or ``.scaled("1/sqrt(t)")``.
    """
    k = _kind(kind)
    x = np.asarray(x, dtype=float).reshape(-1)
    fs = _evaluate(f, graph.points) if sample_values is None else np.asarray(sample_values, float)
    t = graph.kernel.t if graph.kernel is not None else float("nan")
    if k == "s":
        i = _sample_index(graph, x)
        return PointwiseApplication(float(apply_at_samples(graph, "s", fs)[i]), t)
    _, wa = _kernel_row(graph, x)
    fx = float(_evaluate(f, x[None, :])[0])
    n = graph.n
    lu = float(wa @ (fx - fs)) / n
    if k == "u":
        return PointwiseApplication(lu, t)
    return PointwiseApplication(lu / (wa.sum() / n), t)


def quadratic_form(graph, values, chunk=512):
    """``(1/2) sum_{i,j} W_alpha[i, j] (f_i - f_j)^2`` as an explicit pair sum.

    Equals ``f @ laplacian_matrix(graph, "u") @ f`` up to rounding.
    """
    f = np.asarray(values, dtype=float)
    Wa = graph.W_alpha
    total = 0.0
    for s in range(0, len(f), chunk):
        diff = f[s : s + chunk, None] - f[None, :]
        total += float(np.sum(Wa[s : s + chunk] * diff * diff))
    return 0.5 * total


@dataclass(frozen=True)
class RandomWalkSpectrum:
    """Eigenpairs shared by ``L^s`` (``psi``) and ``L^r`` (``phi``).

    ``phi[:, i] = psi[:, i] / sqrt(D)`` with ``D`` the matrix row sums of
    ``W_alpha``, so ``psi = D^{1/2} phi`` holds by construction.
    """

    eigenvalues: np.ndarray
    psi: np.ndarray
    phi: np.ndarray
    row_sums: np.ndarray


def random_walk_spectrum(graph, k=None, tol_eig=1e-10):
    """Smallest ``k`` eigenpairs of ``L^r`` through the symmetric ``L^s``."""
    Ls = laplacian_matrix(graph, "s")
    dec = eigh_symmetric(Ls, tol_eig=tol_eig)
    k = len(dec) if k is None else k
    D = _row_sums(graph)
    psi = dec.eigenvectors[:, :k]
    return RandomWalkSpectrum(dec.eigenvalues[:k], psi, psi / np.sqrt(D)[:, None], D)
