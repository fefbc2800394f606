import math

import numpy as np
import pytest
from scipy import integrate

from lapbound.manifold import (
    CATALOGUE,
    TABLE_FUNCTIONS,
    XZ,
    GaussianMixture,
    Hemisphere,
    Interval,
    PointCloud,
    RealLine,
    Uniform,
    boundary_band,
    boundary_info,
    constant_function,
    load_cloud_csv,
    sample,
    save_cloud_csv,
    weighted_laplacian,
)
from lapbound.numerics import make_rng


def test_dimensions():
    assert (Interval(0, 1).intrinsic_dim, Interval(0, 1).ambient_dim) == (1, 1)
    assert (Hemisphere().intrinsic_dim, Hemisphere().ambient_dim) == (2, 3)
    assert (RealLine().intrinsic_dim, RealLine().ambient_dim) == (1, 1)
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_uniform_pdf():
    assert Uniform().pdf(Interval(1, 3), [2.0]) == 0.5
    assert Uniform().pdf(Hemisphere(), [0, 0, 1.0]) == pytest.approx(1 / (2 * math.pi))


def test_mixture_normalized():
    g = GaussianMixture()
    val, _ = integrate.quad(lambda x: float(g.pdf_array(np.array([x]))[0]), -np.inf, np.inf, epsabs=1e-12)
    assert abs(val - 1) <= 1e-8


def test_mixture_grad_matches_fd():
    g = GaussianMixture()
    h = 1e-5
    for x in (-2.0, -0.3, 0.0, 0.7, 3.1):
        fd = (g.pdf(RealLine(), [x + h]) - g.pdf(RealLine(), [x - h])) / (2 * h)
        assert float(np.ravel(g.grad(RealLine(), [x]))[0]) == pytest.approx(fd, rel=1e-6, abs=1e-12)


def test_equispaced_interval():
    c = sample(Interval(1, 2), n=1000, mode="equispaced")
    assert c.coords[0] == 1 and c.coords[-1] == 2
    assert c.spacing() == pytest.approx(1 / 999)


def test_hemisphere_sampling():
    n = 2000
    c = sample(Hemisphere(), n=n, seed=0)
    r = np.linalg.norm(c.points, axis=1)
    assert np.abs(r - 1).max() <= 1e-12
    assert c.points[:, 2].min() >= 0
    assert abs(c.points[:, 2].mean() - 0.5) <= 3 / math.sqrt(n)


def test_realline_sampling():
    c = sample(RealLine(), GaussianMixture(), 1000, seed=0)
    x = c.coords
    assert abs(x.mean()) <= 3 * x.std() / math.sqrt(1000)


def test_sampling_reproducible():
    a = sample(Interval(0, 1), n=50, seed=5).points
    b = sample(Interval(0, 1), n=50, seed=5).points
    assert np.array_equal(a, b)


@pytest.mark.parametrize(
    "args",
    [
        (Hemisphere(), None, 10, "equispaced"),
        (Interval(0, 1), GaussianMixture(), 10, "iid"),
        (RealLine(), Uniform(), 10, "iid"),
        (Interval(0, 1), None, 1, "iid"),
    ],
)
def test_sampling_errors(args):
    with pytest.raises(ValueError):
        sample(*args)


def test_points_read_only():
    c = sample(Interval(0, 1), n=5, mode="equispaced")
    with pytest.raises(ValueError):
        c.points[0, 0] = 3.0
    with pytest.raises(ValueError):
        PointCloud(np.zeros((3, 2)), Interval(0, 1))


def test_boundary_info_examples():
    z, nrm = boundary_info(Interval(1, 2), [2.0])
    assert z == 0 and nrm[0] == -1
    z, _ = boundary_info(Interval(0, 1), [0.5])
    assert z == 0.5
    z, nrm = boundary_info(Hemisphere(), [1.0, 0, 0])
    assert z == 0 and np.allclose(nrm, [0, 0, 1])
    with pytest.raises(ValueError):
        boundary_info(Hemisphere(), [0, 0, 1.0])
    with pytest.raises(ValueError):
        boundary_info(RealLine(), [0.0])


def test_boundary_band_examples():
    c = sample(Hemisphere(), n=2000, seed=1)
    band = boundary_band(c, 0.05)
    h = c.points[band, 2]
    assert band.size > 0 and h.min() >= 0 and h.max() <= 0.05
    c = sample(Interval(0, 1), n=11, mode="equispaced")
    assert list(boundary_band(c, 0)) == [0, 10]
    assert list(boundary_band(c, 0.1)) == [0, 1, 9, 10]


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_catalogue_derivatives_fd(name):
    fn = CATALOGUE[name]
    xs = make_rng(4).uniform(0, 1, size=100)[:, None]
    h = 1e-4
    fd1 = (fn.f(xs + h) - fn.f(xs - h)) / (2 * h)
    fd2 = (fn.f(xs + h) - 2 * fn.f(xs) + fn.f(xs - h)) / h**2
    g = np.asarray(fn.grad(xs))[:, 0]
    scale = max(1.0, np.abs(g).max())
    assert np.abs(g - fd1).max() / scale <= 1e-5
    lap = fn.laplacian(xs)
    assert np.abs(lap - fd2).max() / max(1.0, np.abs(lap).max()) <= 1e-5


@pytest.mark.parametrize("name", TABLE_FUNCTIONS + ("x2",))
def test_catalogue_energy(name):
    fn = CATALOGUE[name]
    val, _ = integrate.quad(lambda x: float(fn.grad(np.array([[x]]))[0, 0]) ** 2, 0, 1, epsabs=1e-13)
    assert fn.grad_sq_integral == pytest.approx(val, rel=1e-10)


def test_xz_derivatives():
    pts = sample(Hemisphere(), n=100, seed=3).points
    h = 1e-4
    for k in range(3):
        e = np.zeros(3)
        e[k] = h
        fd = (XZ.f(pts + e) - XZ.f(pts - e)) / (2 * h)
        assert np.allclose(XZ.grad(pts)[:, k], fd, atol=1e-8)


def test_xz_laplace_beltrami():
    # f extended as x z / r^2 is 0-homogeneous; its ambient Laplacian on the sphere is Delta_S f
    pts = sample(Hemisphere(), n=20, seed=2).points
    pts = pts[pts[:, 2] > 0.1]
    h = 1e-3

    def g(p):
        return p[..., 0] * p[..., 2] / np.sum(p * p, axis=-1)

    lap = sum(
        (g(pts + h * e) - 2 * g(pts) + g(pts - h * e)) / h**2 for e in np.eye(3)
    )
    assert np.allclose(lap, XZ.laplacian(pts), atol=1e-5)


def test_weighted_laplacian_examples():
    x3 = CATALOGUE["x3"]
    for s in (0.0, 1.0, 2.0):
        assert weighted_laplacian(x3, Uniform(), s, [1.5], Interval(1, 2)) == pytest.approx(9.0)
    assert weighted_laplacian(CATALOGUE["x"], Uniform(), 2.0, [0.3]) == 0.0
    assert weighted_laplacian(CATALOGUE["x2"], GaussianMixture(), 2.0, [0.0]) == pytest.approx(2.0)


def test_constant_function():
    c = constant_function(3.0)
    assert np.array_equal(c.values(np.zeros((4, 1))), np.full(4, 3.0))


def test_cloud_csv_roundtrip(tmp_path):
    c = sample(Hemisphere(), n=30, seed=9)
    p = tmp_path / "cloud.csv"
    save_cloud_csv(c, p)
    back = load_cloud_csv(p, Hemisphere())
    assert np.array_equal(back.points, c.points)
    assert p.read_text().splitlines()[0] == "x0,x1,x2"
