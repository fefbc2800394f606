"""Low eigenvectors of the random-walk and symmetric Laplacians.

Random-walk eigenvectors flatten at the boundary (Neumann behaviour); the
symmetric ones are the same vectors multiplied by ``sqrt(degree)`` and bend
toward zero wherever the degree drops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..graph import FullGaussian, build_graph
from ..laplacian import laplacian_matrix, random_walk_spectrum
from ..manifold import GaussianMixture, Interval, RealLine, Uniform, sample
from ..numerics import linear_fit, make_rng

__all__ = [
    "EigenReport",
    "eigenfunction_experiment",
    "boundary_slopes",
    "identity_error",
    "MIN_BAND_POINTS",
]

MIN_BAND_POINTS = 3


@dataclass(frozen=True)
class EigenReport:
    """Eigenpairs plus boundary diagnostics.

    ``vectors`` are the eigenvectors of the requested kind (``phi`` for
    ``r``, ``psi`` for ``s``), sign-aligned and sorted by sample position.
    Column ``i`` belongs to ``eigenvalues[i]``; column 0 is the constant
    mode.  ``boundary_slope[i]`` holds the band-fit slopes at the lower and
    upper end, measured along the inward direction.
    """

    x: np.ndarray
    eigenvalues: np.ndarray
    phi: np.ndarray
    psi: np.ndarray
    vectors: np.ndarray
    degree: np.ndarray
    degree_alpha: np.ndarray
    boundary_slope: np.ndarray
    max_interior_slope: np.ndarray
    correlation: np.ndarray
    identity_error: np.ndarray
    band_width: float
    kind: str

    @property
    def neumann_ratio(self):
        """Largest boundary slope over the largest interior slope, per vector."""
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.abs(self.boundary_slope).max(axis=1) / self.max_interior_slope


def _band_masks(x, lo, hi, width):
    left = x - lo <= width
    right = hi - x <= width
    # iid tails can leave a band nearly empty; widen to the nearest points
    order = np.argsort(x, kind="stable")
    left[order[:MIN_BAND_POINTS]] = True
    right[order[-MIN_BAND_POINTS:]] = True
    return left, right


def boundary_slopes(x, v, lo, hi, width):
    """Least-squares slopes of ``v`` against distance from ``lo`` and ``hi``.

    Returns ``(left_slope, right_slope, max_interior_slope)``.  Both slopes
    are derivatives along the inward direction.  The interior slope is the
    largest ``|dv/dx|`` outside both bands.
    """
    left, right = _band_masks(x, lo, hi, width)
    s_left = linear_fit(x[left] - lo, v[left]).slope
    s_right = linear_fit(hi - x[right], v[right]).slope
    inner = ~(left | right)
    xi, vi = x[inner], v[inner]
    order = np.argsort(xi, kind="stable")
    xi, vi = xi[order], vi[order]
    keep = np.concatenate([[True], np.diff(xi) > 0])
    grad = np.gradient(vi[keep], xi[keep]) if keep.sum() >= 2 else np.array([np.nan])
    return s_left, s_right, float(np.abs(grad).max())


def identity_error(graph, spectrum, count=5):
    """Max componentwise gap between ``psi`` and ``D^{1/2} phi``.

    ``phi`` comes from an independent nonsymmetric solve of ``L^r``; each
    vector is rescaled to unit ``D^{1/2}`` norm and sign-matched to ``psi``.
    """
    Lr = laplacian_matrix(graph, "r")
    lam, V = scipy.linalg.eig(Lr)
    lam = lam.real
    sqrtD = np.sqrt(spectrum.row_sums)
    out = []
    for i in range(min(count, len(spectrum.eigenvalues))):
        j = int(np.argmin(np.abs(lam - spectrum.eigenvalues[i])))
        phi = V[:, j].real
        cand = sqrtD * phi
        cand /= np.linalg.norm(cand)
        psi = spectrum.psi[:, i]
        if cand @ psi < 0:
            cand = -cand
        out.append(float(np.abs(cand - psi).max()))
    return np.array(out)


def _reference(x, lo, hi, k):
    return np.cos(k * math.pi * (x - lo) / (hi - lo))


def eigenfunction_experiment(
    density=None,
    n=1000,
    alpha=0.5,
    t=1e-4,
    graph_scheme=None,
    kind="r",
    k_eigs=5,
    seed=0,
    band_width=None,
    check_identity=True,
):
    """Eigenvectors of ``L^r`` or ``L^s`` with boundary-derivative estimates.

    Parameters
    ----------
    density : Uniform or GaussianMixture
        Uniform gives an equispaced cloud on ``[0, 1]``; the mixture gives
        ``n`` iid samples on the real line, whose extremes act as boundary.
    n, alpha, t : graph size, normalization and bandwidth.
    graph_scheme : FullGaussian, EpsilonNN or SymmetricKNN, optional
        Defaults to ``FullGaussian(t)``.
    kind : {"r", "s"}
    k_eigs : int
        Number of eigenpairs kept, counting the constant mode; at least 3.
    band_width : float, optional
        Width of the boundary band; ``2 sqrt(t)`` by default.
    """
    if kind not in ("r", "s"):
        raise ValueError("kind must be 'r' or 's'")
    if k_eigs < 3:
        raise ValueError("ask for at least 3 eigenpairs")
    density = Uniform() if density is None else density
    if isinstance(density, GaussianMixture):
        cloud = sample(RealLine(), density, n, rng=make_rng(seed), seed=seed)
    else:
        cloud = sample(Interval(0.0, 1.0), density, n, mode="equispaced")
    scheme = FullGaussian(t) if graph_scheme is None else graph_scheme
    graph = build_graph(cloud, scheme, alpha)
    spec = random_walk_spectrum(graph, k_eigs)

    x = cloud.coords
    if isinstance(cloud.manifold, Interval):
        lo, hi = cloud.manifold.a, cloud.manifold.b
    else:
        lo, hi = float(x.min()), float(x.max())
    width = 2.0 * math.sqrt(t) if band_width is None else band_width

    phi = spec.phi.copy()
    psi = spec.psi.copy()
    corr = np.full(k_eigs, np.nan)
    for i in range(k_eigs):
        ref = _reference(x, lo, hi, i)
        if isinstance(cloud.manifold, Interval) and i > 0:
            c = np.corrcoef(phi[:, i], ref)[0, 1]
            s = 1.0 if c >= 0 else -1.0
            corr[i] = abs(c)
        else:
            # no reference shape: make the lower end non-negative
            s = 1.0 if phi[np.argmin(x), i] >= 0 else -1.0
        phi[:, i] *= s
        psi[:, i] *= s
    vectors = phi if kind == "r" else psi

    slopes = np.zeros((k_eigs, 2))
    interior = np.zeros(k_eigs)
    for i in range(k_eigs):
        a, b, m = boundary_slopes(x, vectors[:, i], lo, hi, width)
        slopes[i] = (a, b)
        interior[i] = m
    ident = identity_error(graph, spec) if check_identity else np.array([])

    return EigenReport(
        x=x,
        eigenvalues=spec.eigenvalues,
        phi=phi,
        psi=psi,
        vectors=vectors,
        degree=graph.degree,
        degree_alpha=graph.degree_alpha,
        boundary_slope=slopes,
        max_interior_slope=interior,
        correlation=corr,
        identity_error=ident,
        band_width=width,
        kind=kind,
    )
