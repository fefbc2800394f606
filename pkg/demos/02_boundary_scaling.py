# %% [markdown]
# Boundary blow-up on an interval
#
# With f = x^3 on [1, 2], (1/t) L^r f converges to the weighted Laplacian
# inside the domain but grows like t^(-1/2) at the end points.

# %%
import numpy as np

from lapbound.experiments import boundary_ratio, scaling_experiment
from lapbound.manifold import CATALOGUE, Interval, sample

cloud = sample(Interval(1, 2), n=1000, mode="equispaced")
f = CATALOGUE["x3"]
ladder = np.geomspace(1e-3, 1e-6, 7)

# %%
for x in (2.0, 1.5):
    rep = scaling_experiment(cloud, f, x, ladder)
    print(f"x={x}")
    for t, v, safe in zip(rep.t, rep.values, rep.safe):
        print(f"  t={t:.1e}  (1/t)Lf={v:+.4f}  {'' if safe else '(below sample resolution)'}")
    print(f"  log-log slope over safe rungs: {rep.fit.slope:+.3f}  R^2={rep.fit.r_squared:.4f}")

# %% [markdown]
# The interior value tracks -(1/4) f'' = -1.5 x, and the ratio of the two
# end values follows f'(2)/f'(1) = 4.

# %%
print("ratio of end values:", boundary_ratio(cloud, f, t=1e-5))
