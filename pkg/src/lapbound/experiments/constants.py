"""Gaussian moment constants for the interior, boundary and boundary layer."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..numerics import erf, make_rng, mc_integrate

__all__ = ["Constants", "constants", "layer_constants"]

# name -> (integrand, half space?)
_MC_RECIPES = {
    "C1": ("gauss", False),
    "C2": ("gauss_u1sq", False),
    "C3": ("gauss", True),
    "C4": ("gauss_u1", True),
}


@dataclass(frozen=True)
class Constants:
    """Integrals of ``K(|u|^2) = exp(-|u|^2)`` over R^d and the half space.

    ``C1 = int K``, ``C2 = int K u_1^2``, ``C3 = int_{u_1 >= 0} K`` and
    ``C4 = int_{u_1 >= 0} K u_1``.  ``mc`` maps each name to a Monte-Carlo
    ``(estimate, std_error)`` pair when verification was requested.
    """

    d: int
    C1: float
    C2: float
    C3: float
    C4: float
    mc: dict = field(default_factory=dict)

    def as_dict(self):
        return {"C1": self.C1, "C2": self.C2, "C3": self.C3, "C4": self.C4}

    @property
    def boundary_ratio(self):
        """``C4 / C3``; equals ``pi^{-1/2}`` in every dimension."""
        return self.C4 / self.C3

    @property
    def interior_factor(self):
        """``C2 / (2 C1)``, the interior limit coefficient (1/4 for every d)."""
        return self.C2 / (2 * self.C1)


def constants(d, mc_samples=None, rng=None, seed=0):
    if d < 1:
        raise ValueError("dimension must be at least 1")
    c1 = math.pi ** (d / 2)
    out = dict(C1=c1, C2=0.5 * c1, C3=0.5 * c1, C4=0.5 * math.pi ** ((d - 1) / 2))
    mc = {}
    if mc_samples:
        rng = make_rng(seed) if rng is None else rng
        for name, (integrand, half) in _MC_RECIPES.items():
            mc[name] = mc_integrate(
                d, integrand, mc_samples, rng, z_offset=0.0 if half else None
            )
    return Constants(d, mc=mc, **out)


def layer_constants(z, d):
    """Kernel moments over the shifted half space ``u_1 >= -z``.

    Returns ``(C1(z), C2(z))`` with ``C1(z) = pi^{d/2} (1 + erf z) / 2`` and
    ``C2(z) = pi^{d/2} (1 - 2 z exp(-z^2) / sqrt(pi) + erf z) / 4``.
    """
    if z < 0:
        raise ValueError("distance to the boundary must be non-negative")
    base = math.pi ** (d / 2)
    e = erf(z)
    c1 = 0.5 * base * (1.0 + e)
    c2 = 0.25 * base * (1.0 - 2.0 * z * math.exp(-z * z) / math.sqrt(math.pi) + e)
    return c1, c2
