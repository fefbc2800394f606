"""Dense linear algebra, special functions, randomness and fitting helpers.

Everything here works on dense ``numpy`` arrays; the package never needs
more than a few thousand points, so sparse storage is not supported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

__all__ = [
    "EigenSolverError",
    "SpectralDecomposition",
    "LinearFit",
    "MAX_DENSE_SIZE",
    "make_rng",
    "is_symmetric",
    "eigh_symmetric",
    "pseudoinverse",
    "linear_fit",
    "erf",
    "mc_integrate",
    "INTEGRANDS",
]

MAX_DENSE_SIZE = 4000


class EigenSolverError(RuntimeError):
    """Raised when a symmetric eigendecomposition misses its tolerance."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues with orthonormal eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual_bound: float

    def __len__(self):
        return len(self.eigenvalues)


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r_squared: float

    def __iter__(self):
        return iter((self.slope, self.intercept, self.r_squared))


def make_rng(seed):
    """Seeded PCG64 generator; the stream is platform independent."""
    return np.random.Generator(np.random.PCG64(seed))


def is_symmetric(A):
    A = np.asarray(A)
    return A.ndim == 2 and A.shape[0] == A.shape[1] and np.array_equal(A, A.T)


def eigh_symmetric(A, tol_eig=1e-10, max_size=MAX_DENSE_SIZE):
    """Full eigendecomposition of a real symmetric matrix.

    LAPACK's divide-and-conquer driver does the work; the result is then
    checked against the residual and orthogonality contract.

    Parameters
    ----------
    A : array_like, shape (n, n)
        Exactly symmetric matrix with finite entries.
    tol_eig : float
        Per-pair bound ``||A v - lam v|| <= tol_eig * ||A||_F`` and bound on
        ``|v_i . v_j - delta_ij|``.
    max_size : int
        Largest accepted ``n``.

    Returns
    -------
    SpectralDecomposition

    Raises
    ------
    ValueError
        If ``A`` is not square, not symmetric, too large or non-finite.
    EigenSolverError
        If the solver fails or the computed pairs miss the tolerance.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n > max_size:
        raise ValueError(f"matrix of size {n} exceeds the dense limit {max_size}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")

    try:
        lam, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigensolver did not converge: {exc}") from exc

    scale = max(np.linalg.norm(A), np.finfo(float).tiny)
    residual = float(np.linalg.norm(A @ V - V * lam, axis=0).max(initial=0.0))
    if residual > tol_eig * scale:
        raise EigenSolverError(
            f"eigenpair residual {residual:.3e} exceeds {tol_eig:.1e}*||A||_F",
            residual=residual,
        )
    ortho = float(np.abs(V.T @ V - np.eye(n)).max(initial=0.0))
    if ortho > tol_eig:
        raise EigenSolverError(
            f"eigenvectors lost orthogonality ({ortho:.3e})", residual=residual
        )
    return SpectralDecomposition(lam, V, residual / scale)


def pseudoinverse(A, null_tol=1e-9):
    """Moore-Penrose inverse of a symmetric matrix via its eigenpairs.

    Eigenvalues with ``|lam| <= null_tol * max|lam|`` are treated as zero.
    """
    dec = eigh_symmetric(A)
    lam = dec.eigenvalues
    cutoff = null_tol * np.abs(lam).max(initial=0.0)
    keep = np.abs(lam) > cutoff
    if not keep.any():
        raise ValueError("every eigenvalue is below the null threshold")
    V = dec.eigenvectors[:, keep]
    P = (V / lam[keep]) @ V.T
    # symmetrize to the bit; the product above is symmetric only up to rounding
    return 0.5 * (P + P.T)


def linear_fit(xs, ys):
    """Ordinary least squares line through ``(xs, ys)``.

    ``r_squared`` is 1 when the residuals vanish (including constant ``ys``).
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("xs and ys must be 1-d arrays of equal length")
    if len(x) < 2 or np.all(x == x[0]):
        raise ValueError("need at least two distinct xs")
    xm, ym = x.mean(), y.mean()
    dx, dy = x - xm, y - ym
    slope = float(dx @ dy / (dx @ dx))
    intercept = float(ym - slope * xm)
    ss_res = float(np.sum((y - (slope * x + intercept)) ** 2))
    ss_tot = float(dy @ dy)
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return LinearFit(slope, intercept, r2)


def erf(x):
    """Error function; scalar or array."""
    if np.ndim(x) == 0:
        return math.erf(float(x))
    return special.erf(np.asarray(x, dtype=float))


INTEGRANDS = {
    "gauss": lambda u: np.ones(len(u)),
    "gauss_u1": lambda u: u[:, 0],
    "gauss_u1sq": lambda u: u[:, 0] ** 2,
}


def mc_integrate(dim, integrand, samples, rng, z_offset=None):
    """Monte-Carlo estimate of ``int exp(-|u|^2) g(u) du``.

    ``g`` is one of ``INTEGRANDS`` (1, ``u_1`` or ``u_1^2``).  The region is
    all of R^dim, or the half space ``u_1 >= -z_offset`` when ``z_offset`` is
    given.  Points are drawn from a standard normal and reweighted, which is
    unbiased and has finite variance for all three integrands.

    Returns
    -------
    (estimate, std_error)
    """
    if integrand not in INTEGRANDS:
        raise ValueError(f"unknown integrand {integrand!r}; choose from {sorted(INTEGRANDS)}")
    if samples < 10_000:
        raise ValueError("mc_integrate needs at least 1e4 samples")
    u = rng.standard_normal((samples, dim))
    r2 = np.einsum("ij,ij->i", u, u)
    # exp(-|u|^2) / N(0, I) density
    weight = (2.0 * np.pi) ** (dim / 2) * np.exp(-0.5 * r2)
    vals = weight * INTEGRANDS[integrand](u)
    if z_offset is not None:
        vals = np.where(u[:, 0] >= -z_offset, vals, 0.0)
    est = float(vals.mean())
    err = float(vals.std(ddof=1) / math.sqrt(samples))
    return est, err
