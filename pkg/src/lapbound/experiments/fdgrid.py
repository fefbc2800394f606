"""Unit-weight grid graphs versus the finite-difference Neumann Laplacian."""

from __future__ import annotations

import numpy as np

from ..graph import WeightedGraph
from ..laplacian import laplacian_matrix

__all__ = [
    "neumann_chain",
    "fd_neumann_matrix",
    "grid_adjacency",
    "fd_equivalence",
    "stencil_values",
]


def neumann_chain(m):
    """1-d Neumann matrix: rows ``[1, -1]`` at the ends, ``[-1, 2, -1]`` inside."""
    T = np.zeros((m, m))
    for i in range(m - 1):
        T[i, i] += 1
        T[i + 1, i + 1] += 1
        T[i, i + 1] -= 1
        T[i + 1, i] -= 1
    return T


def fd_neumann_matrix(nx, ny=1):
    """Sum of per-axis Neumann chains on an ``nx`` by ``ny`` grid.

    Node ``(ix, iy)`` has index ``iy * nx + ix``.
    """
    return np.kron(np.eye(ny), neumann_chain(nx)) + np.kron(neumann_chain(ny), np.eye(nx))


def grid_adjacency(nx, ny=1):
    """0/1 adjacency of the 4-neighbour grid graph, no self-edges."""
    n = nx * ny
    A = np.zeros((n, n))
    for iy in range(ny):
        for ix in range(nx):
            i = iy * nx + ix
            if ix + 1 < nx:
                A[i, i + 1] = A[i + 1, i] = 1.0
            if iy + 1 < ny:
                A[i, i + nx] = A[i + nx, i] = 1.0
    return A


def fd_equivalence(nx, ny=1):
    """Return ``(fd_matrix, graph_matrix, max_abs_difference)``."""
    if nx < 1 or ny < 1 or nx * ny < 2:
        raise ValueError("grid needs at least two nodes")
    fd = fd_neumann_matrix(nx, ny)
    graph = WeightedGraph.from_weights(grid_adjacency(nx, ny))
    L = laplacian_matrix(graph, "u")
    return fd, L, float(np.abs(fd - L).max())


def stencil_values(f, h, length=1.0):
    """``(1/h^2) L f`` on a uniform chain over ``[0, length]`` with spacing ``h``.

    Returns the grid and the scaled stencil values.  At the left end the
    value is ``-(f(h) - f(0)) / h^2``; inside it is minus the usual second
    difference.
    """
    m = int(round(length / h)) + 1
    x = np.arange(m) * h
    return x, neumann_chain(m) @ f(x) / h**2
