"""Graph Laplacians on sampled domains with boundary.

Build alpha-normalized graph Laplacians from point clouds and study how
they behave at the boundary of the sampled domain.
"""

from .graph import EpsilonNN, FullGaussian, SymmetricKNN, build_graph, degree_at
from .laplacian import apply_pointwise, laplacian_matrix, quadratic_form, random_walk_spectrum
from .manifold import (
    CATALOGUE,
    XZ,
    GaussianMixture,
    Hemisphere,
    Interval,
    RealLine,
    Uniform,
    sample,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOGUE",
    "XZ",
    "EpsilonNN",
    "FullGaussian",
    "GaussianMixture",
    "Hemisphere",
    "Interval",
    "RealLine",
    "SymmetricKNN",
    "Uniform",
    "apply_pointwise",
    "build_graph",
    "degree_at",
    "laplacian_matrix",
    "quadratic_form",
    "random_walk_spectrum",
    "sample",
]
