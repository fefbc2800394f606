import numpy as np
import pytest

from lapbound.experiments import fd_equivalence, fd_neumann_matrix, grid_adjacency, stencil_values


def test_chain3():
    fd, L, diff = fd_equivalence(3, 1)
    expect = np.array([[1.0, -1, 0], [-1, 2, -1], [0, -1, 1]])
    assert np.array_equal(fd, expect) and np.array_equal(L, expect)
    assert diff == 0.0


@pytest.mark.parametrize("shape", [(10, 1), (3, 3), (10, 10), (4, 7), (1, 5)])
def test_exact_equivalence(shape):
    assert fd_equivalence(*shape)[2] == 0.0


def test_grid_adjacency_degree():
    A = grid_adjacency(3, 3)
    assert list(A.sum(1)) == [2, 3, 2, 3, 4, 3, 2, 3, 2]


def test_fd_2d_stencil():
    M = fd_neumann_matrix(3, 3)
    assert M[4, 4] == 4 and M[0, 0] == 2
    assert (M.sum(1) == 0).all()


def test_too_small():
    with pytest.raises(ValueError):
        fd_equivalence(1, 1)


@pytest.mark.parametrize("h", [0.1, 0.01])
def test_stencil_scaling(h):
    x, v = stencil_values(lambda x: x, h)
    assert v[0] == pytest.approx(-1 / h, rel=1e-9)
    assert v[-1] == pytest.approx(1 / h, rel=1e-9)
    assert np.allclose(v[1:-1], 0, atol=1e-8 / h**2)
    _, v2 = stencil_values(lambda x: x * x, h)
    assert np.allclose(v2[1:-1], -2.0, rtol=1e-8)
