"""Sampled domains, densities, test functions and boundary geometry.

Three domains are supported: a closed interval, the closed upper unit
hemisphere in R^3 and the real line (used only with a two-component
Gaussian mixture, whose "boundary" is wherever the samples stop).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "Interval",
    "Hemisphere",
    "RealLine",
    "Uniform",
    "GaussianMixture",
    "PointCloud",
    "TestFunction",
    "CATALOGUE",
    "XZ",
    "constant_function",
    "sample",
    "boundary_info",
    "boundary_band",
    "weighted_laplacian",
    "save_cloud_csv",
    "load_cloud_csv",
]


# ---------------------------------------------------------------- domains


@dataclass(frozen=True)
class Interval:
    a: float = 0.0
    b: float = 1.0
    intrinsic_dim: int = field(default=1, init=False)
    ambient_dim: int = field(default=1, init=False)

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"Interval needs a < b, got ({self.a}, {self.b})")

    @property
    def length(self):
        return self.b - self.a

    def contains(self, point, tol=1e-12):
        x = float(np.asarray(point).reshape(-1)[0])
        return self.a - tol <= x <= self.b + tol


@dataclass(frozen=True)
class Hemisphere:
    """Upper unit hemisphere ``{|x| = 1, x_3 >= 0}``; boundary is the equator."""

    intrinsic_dim: int = field(default=2, init=False)
    ambient_dim: int = field(default=3, init=False)

    def contains(self, point, tol=1e-12):
        p = np.asarray(point, dtype=float).reshape(-1)
        return p.shape == (3,) and abs(np.linalg.norm(p) - 1.0) <= tol and p[2] >= -tol


@dataclass(frozen=True)
class RealLine:
    intrinsic_dim: int = field(default=1, init=False)
    ambient_dim: int = field(default=1, init=False)

    def contains(self, point, tol=0.0):
        return bool(np.isfinite(np.asarray(point, dtype=float)).all())


# -------------------------------------------------------------- densities


@dataclass(frozen=True)
class Uniform:
    def pdf(self, manifold, x):
        if isinstance(manifold, Interval):
            return 1.0 / manifold.length
        if isinstance(manifold, Hemisphere):
            return 1.0 / (2.0 * math.pi)
        raise ValueError("no uniform density on the real line")

    def grad(self, manifold, x):
        return np.zeros(manifold.ambient_dim)


@dataclass(frozen=True)
class GaussianMixture:
    """Equal-weight mixture of normals; defaults to centres +-1.5, unit variance."""

    centers: tuple = (-1.5, 1.5)
    variance: float = 1.0

    def _components(self, x):
        x = float(np.asarray(x).reshape(-1)[0])
        s2 = self.variance
        w = 1.0 / len(self.centers)
        return [
            (c, w * math.exp(-((x - c) ** 2) / (2 * s2)) / math.sqrt(2 * math.pi * s2))
            for c in self.centers
        ], x

    def pdf(self, manifold, x):
        comps, _ = self._components(x)
        return sum(v for _, v in comps)

    def grad(self, manifold, x):
        comps, xv = self._components(x)
        return np.array([sum(-(xv - c) / self.variance * v for c, v in comps)])

    def pdf_array(self, x):
        x = np.asarray(x, dtype=float)
        s2 = self.variance
        out = np.zeros_like(x)
        for c in self.centers:
            out += np.exp(-((x - c) ** 2) / (2 * s2)) / math.sqrt(2 * math.pi * s2)
        return out / len(self.centers)


# ----------------------------------------------------------- point clouds


@dataclass(frozen=True)
class PointCloud:
    points: np.ndarray
    manifold: object
    seed: int | None = None
    mode: str = "iid"

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != self.manifold.ambient_dim:
            raise ValueError(
                f"points must have shape (n, {self.manifold.ambient_dim}), got {pts.shape}"
            )
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def coords(self):
        """First ambient coordinate; handy for the 1-d domains."""
        return self.points[:, 0]

    def spacing(self):
        """Typical gap between neighbouring samples (exact for equispaced clouds)."""
        if isinstance(self.manifold, Interval) and self.mode == "equispaced":
            return self.manifold.length / (self.n - 1)
        if self.manifold.ambient_dim == 1:
            return float(np.median(np.diff(np.sort(self.coords))))
        from scipy.spatial import cKDTree

        dist, _ = cKDTree(self.points).query(self.points, k=2)
        return float(np.median(dist[:, 1]))


def sample(manifold, density=None, n=1000, mode="iid", rng=None, seed=None):
    """Draw a point cloud.

    Parameters
    ----------
    manifold : Interval, Hemisphere or RealLine
    density : Uniform or GaussianMixture
        Defaults to ``Uniform`` (``GaussianMixture`` on the real line).
    n : int
    mode : {"iid", "equispaced"}
        Equispaced clouds exist only on intervals and include both ends.
    rng : numpy.random.Generator, optional
        Source of randomness; built from ``seed`` when omitted.
    seed : int, optional
    """
    if density is None:
        density = GaussianMixture() if isinstance(manifold, RealLine) else Uniform()
    if n < 2:
        raise ValueError("need at least two points")
    if mode not in ("iid", "equispaced"):
        raise ValueError(f"unknown sampler mode {mode!r}")
    if isinstance(density, GaussianMixture) and not isinstance(manifold, RealLine):
        raise ValueError("GaussianMixture is only defined on the real line")
    if isinstance(density, Uniform) and isinstance(manifold, RealLine):
        raise ValueError("no uniform density on the real line")
    if mode == "equispaced":
        if not isinstance(manifold, Interval):
            raise ValueError("equispaced sampling is only available on an Interval")
        pts = np.linspace(manifold.a, manifold.b, n)[:, None]
        return PointCloud(pts, manifold, seed, mode)

    if rng is None:
        from .numerics import make_rng

        rng = make_rng(0 if seed is None else seed)
    if isinstance(manifold, Interval):
        pts = rng.uniform(manifold.a, manifold.b, size=n)[:, None]
    elif isinstance(manifold, Hemisphere):
        # Archimedes: height uniform on [0, 1], azimuth uniform
        h = rng.uniform(0.0, 1.0, size=n)
        phi = rng.uniform(0.0, 2.0 * math.pi, size=n)
        r = np.sqrt(1.0 - h * h)
        pts = np.column_stack([r * np.cos(phi), r * np.sin(phi), h])
    elif isinstance(manifold, RealLine):
        centers = np.asarray(density.centers, dtype=float)
        pick = rng.integers(0, len(centers), size=n)
        pts = (centers[pick] + math.sqrt(density.variance) * rng.standard_normal(n))[:, None]
    else:
        raise TypeError(f"unsupported manifold {manifold!r}")
    return PointCloud(pts, manifold, seed, mode)


# ------------------------------------------------------- boundary geometry


def boundary_info(manifold, point):
    """Distance to the boundary and inward unit normal at ``point``.

    Interval: ``z = min(x - a, b - x)``, normal ``+1`` in the left half and
    ``-1`` in the right half (returned as a length-1 array).

    Hemisphere: ``z`` is the geodesic distance to the equator,
    ``arcsin(x_3)``; the normal is the unit tangent pointing to the pole,
    which equals ``(0, 0, 1)`` on the equator itself.
    """
    if isinstance(manifold, RealLine):
        raise ValueError("the real line has no boundary")
    p = np.asarray(point, dtype=float).reshape(-1)
    if not manifold.contains(p, tol=1e-9):
        raise ValueError(f"point {p} is not on {manifold}")
    if isinstance(manifold, Interval):
        x = p[0]
        left, right = x - manifold.a, manifold.b - x
        if left <= right:
            return max(left, 0.0), np.array([1.0])
        return max(right, 0.0), np.array([-1.0])
    if isinstance(manifold, Hemisphere):
        p = p / np.linalg.norm(p)
        z = math.asin(min(max(p[2], 0.0), 1.0))
        pole = np.array([0.0, 0.0, 1.0])
        tangent = pole - p[2] * p
        norm = np.linalg.norm(tangent)
        if norm < 1e-15:
            raise ValueError("inward normal is undefined at the pole")
        return z, tangent / norm
    raise TypeError(f"unsupported manifold {manifold!r}")


def boundary_band(cloud, width):
    """Indices of cloud points within ``width`` of the boundary.

    On the hemisphere the test is ``0 <= x_3 <= width`` on the ambient
    height, not the geodesic distance.
    """
    m = cloud.manifold
    if isinstance(m, RealLine):
        raise ValueError("the real line has no boundary")
    if width < 0:
        raise ValueError("band width must be non-negative")
    if isinstance(m, Interval):
        x = cloud.coords
        z = np.minimum(x - m.a, m.b - x)
        return np.flatnonzero(z <= width + 1e-12 * m.length)
    if isinstance(m, Hemisphere):
        h = cloud.points[:, 2]
        return np.flatnonzero((h >= 0.0) & (h <= width))
    raise TypeError(f"unsupported manifold {m!r}")


# --------------------------------------------------------- test functions


@dataclass(frozen=True)
class TestFunction:
    """A smooth function with analytic derivatives.

    ``grad`` returns the ambient gradient.  ``laplacian`` is the intrinsic
    (Laplace-Beltrami) Laplacian on the domain the function is meant for.
    ``grad_sq_integral`` is ``int_0^1 |f'|^2 dx`` for the 1-d catalogue.
    """

    __test__ = False  # keep pytest from collecting this class

    name: str
    f: Callable
    grad: Callable
    laplacian: Callable
    grad_sq_integral: float | None = None

    def __call__(self, x):
        return self.f(x)

    def values(self, cloud_or_points):
        pts = getattr(cloud_or_points, "points", cloud_or_points)
        return np.asarray(self.f(np.asarray(pts, dtype=float)), dtype=float).reshape(-1)

    def bound(self, points):
        """Sup of ``|f|`` over the given points (a sampled stand-in for M)."""
        return float(np.abs(self.values(points)).max())


def _one_d(name, f, df, d2f, integral):
    return TestFunction(
        name,
        f=lambda x: f(np.asarray(x, dtype=float)[..., 0]),
        grad=lambda x: np.asarray(df(np.asarray(x, dtype=float)[..., 0]), dtype=float)[..., None],
        laplacian=lambda x: d2f(np.asarray(x, dtype=float)[..., 0]),
        grad_sq_integral=integral,
    )


CATALOGUE = {
    "sqrt": _one_d(
        "sqrt", lambda x: np.sqrt(x + 1), lambda x: 0.5 / np.sqrt(x + 1),
        lambda x: -0.25 * (x + 1) ** -1.5, math.log(2) / 4,
    ),
    "x": _one_d("x", lambda x: x, lambda x: np.ones_like(x), lambda x: np.zeros_like(x), 1.0),
    "x2+10x": _one_d(
        "x2+10x", lambda x: x * x + 10 * x, lambda x: 2 * x + 10,
        lambda x: 2.0 * np.ones_like(x), 4 / 3 + 20 + 100,
    ),
    "x2": _one_d("x2", lambda x: x * x, lambda x: 2 * x, lambda x: 2.0 * np.ones_like(x), 4 / 3),
    "x3": _one_d("x3", lambda x: x**3, lambda x: 3 * x * x, lambda x: 6 * x, 9 / 5),
    "exp": _one_d("exp", np.exp, np.exp, np.exp, (math.e**2 - 1) / 2),
    "sin": _one_d("sin", np.sin, np.cos, lambda x: -np.sin(x), 0.5 + math.sin(2) / 4),
    "cos": _one_d("cos", np.cos, lambda x: -np.sin(x), lambda x: -np.cos(x), 0.5 - math.sin(2) / 4),
    "cos10x": _one_d(
        "cos10x", lambda x: np.cos(10 * x), lambda x: -10 * np.sin(10 * x),
        lambda x: -100 * np.cos(10 * x), 100 * (0.5 - math.sin(20) / 40),
    ),
}

# Columns of the regularizer coefficient table, in order.
TABLE_FUNCTIONS = ("sqrt", "x", "x2+10x", "x3", "exp", "sin", "cos", "cos10x")

# f(x, y, z) = x z restricted to the unit sphere is a degree-2 spherical
# harmonic, so its Laplace-Beltrami value is -6 x z.
XZ = TestFunction(
    "xz",
    f=lambda p: np.asarray(p, dtype=float)[..., 0] * np.asarray(p, dtype=float)[..., 2],
    grad=lambda p: np.stack(
        [np.asarray(p, dtype=float)[..., 2],
         np.zeros_like(np.asarray(p, dtype=float)[..., 0]),
         np.asarray(p, dtype=float)[..., 0]],
        axis=-1,
    ),
    laplacian=lambda p: -6.0 * np.asarray(p, dtype=float)[..., 0] * np.asarray(p, dtype=float)[..., 2],
)


def constant_function(c=1.0, ambient_dim=1):
    return TestFunction(
        f"const{c:g}",
        f=lambda x: np.full(np.shape(x)[:-1], float(c)),
        grad=lambda x: np.zeros(np.shape(x)[:-1] + (ambient_dim,)),
        laplacian=lambda x: np.zeros(np.shape(x)[:-1]),
        grad_sq_integral=0.0,
    )


def weighted_laplacian(fn, density, s, point, manifold=None):
    """``Delta f + (s / p) <grad p, grad f>`` at ``point``.

    ``s = 2 (1 - alpha)``.  Uses the stored analytic derivatives.
    """
    if manifold is None:
        manifold = RealLine() if isinstance(density, GaussianMixture) else Interval(0.0, 1.0)
    p = np.asarray(point, dtype=float).reshape(-1)
    if not manifold.contains(p, tol=1e-9):
        raise ValueError(f"point {p} is not on {manifold}")
    lap = float(np.asarray(fn.laplacian(p[None, :])).reshape(-1)[0])
    gp = np.asarray(density.grad(manifold, p), dtype=float).reshape(-1)
    if not np.any(gp):
        return lap
    gf = np.asarray(fn.grad(p[None, :]), dtype=float).reshape(-1)
    return lap + s / density.pdf(manifold, p) * float(gp @ gf)


# ---------------------------------------------------------------- CSV I/O


def save_cloud_csv(cloud, path):
    """One row per point, header ``x0,x1,...``; floats in round-trip form."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f"x{i}" for i in range(cloud.points.shape[1])])
        for row in cloud.points:
            w.writerow([repr(float(v)) for v in row])


def load_cloud_csv(path, manifold):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    if header != [f"x{i}" for i in range(manifold.ambient_dim)]:
        raise ValueError(f"unexpected header {header}")
    return PointCloud(np.array(body, dtype=float).reshape(-1, len(header)), manifold)
