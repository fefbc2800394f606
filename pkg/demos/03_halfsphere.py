# %% [markdown]
# Normal derivative on the hemisphere
#
# For f = xz on the upper unit hemisphere the inward normal on the rim is
# e_3, so -d_n f = -x. The sqrt(t)-scaled operator near the rim should be
# linear in x. Its slope comes out near -C4/C3 = -pi^(-1/2), so both
# the raw and the C4/C3-scaled target errors are reported.

# %%
from lapbound.experiments import halfsphere_boundary_experiment, halfsphere_table

rep = halfsphere_boundary_experiment(n=2000, t=16 / 64, band_width=0.05, seed=0)
print(f"{len(rep.band)} band points, slope {rep.fit.slope:.3f}, R^2 {rep.fit.r_squared:.4f}")
print(f"mse raw {rep.mse_raw:.4f}, mse scaled {rep.mse_scaled:.4f}")

# %%
for r in halfsphere_table([500, 1000, 2000], [0.5, 0.25, 0.125]):
    print(f"n={r.n:5d} t={r.t:.3f}  mse raw {r.mse_raw:.4f}  scaled {r.mse_scaled:.4f}")
