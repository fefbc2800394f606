"""Seed-reproducible numerical studies built on the graph Laplacians."""

from .boundary import (
    BoundaryReport,
    ScalingReport,
    boundary_ratio,
    halfsphere_boundary_experiment,
    halfsphere_table,
    scaling_experiment,
)
from .concentration import ConcentrationReport, concentration_experiment
from .constants import Constants, constants, layer_constants
from .eigen import EigenReport, eigenfunction_experiment
from .fdgrid import fd_equivalence, fd_neumann_matrix, grid_adjacency, stencil_values
from .kernel import (
    KernelReport,
    closed_kernel,
    kernel_experiment,
    neumann_green,
    prime_kernel,
    series_kernel,
)
from .quadform import (
    CoefficientReport,
    log_grid,
    quadform_experiment,
    quadform_table,
    theory_coefficient,
)

__all__ = [
    "BoundaryReport",
    "CoefficientReport",
    "ConcentrationReport",
    "Constants",
    "EigenReport",
    "KernelReport",
    "ScalingReport",
    "boundary_ratio",
    "closed_kernel",
    "concentration_experiment",
    "constants",
    "eigenfunction_experiment",
    "fd_equivalence",
    "fd_neumann_matrix",
    "grid_adjacency",
    "halfsphere_boundary_experiment",
    "halfsphere_table",
    "kernel_experiment",
    "layer_constants",
    "log_grid",
    "neumann_green",
    "prime_kernel",
    "quadform_experiment",
    "quadform_table",
    "scaling_experiment",
    "series_kernel",
    "stencil_values",
    "theory_coefficient",
]
