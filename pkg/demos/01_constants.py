# %% [markdown]
# Kernel moment constants
#
# The limits of the graph Laplacian involve four Gaussian integrals over
# R^d and the half space. Their closed forms are checked against Monte Carlo,
# and the boundary-layer versions interpolate between the half and full values.

# %%
import math

import numpy as np

from lapbound.experiments import constants, layer_constants

for d in (1, 2, 3):
    c = constants(d, mc_samples=1_000_000, seed=0)
    print(f"d={d}")
    for name, exact in c.as_dict().items():
        est, err = c.mc[name]
        print(f"  {name}: closed {exact:.6f}  mc {est:.6f} +- {err:.1e}  z={(est - exact) / err:+.2f}")
    print(f"  C4/C3 = {c.boundary_ratio:.15f}  (pi^-1/2 = {math.pi ** -0.5:.15f})")

# %% [markdown]
# Inside the layer of width ~sqrt(t) the constants depend on the scaled
# distance z to the boundary.

# %%
for z in np.linspace(0, 3, 7):
    c1, c2 = layer_constants(z, 1)
    print(f"z={z:.1f}  C1(z)={c1:.6f}  C2(z)={c2:.6f}")
