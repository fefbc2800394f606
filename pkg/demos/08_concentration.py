# %% [markdown]
# Sample-to-sample spread
#
# At fixed t the spread of (1/sqrt t) L^r f(x) over repeated draws shrinks
# like n^(-1/2).

# %%
from lapbound.experiments import concentration_experiment

rep = concentration_experiment((250, 500, 1000, 2000), reps=50, t_rule=0.01, seed=0)
for n, m, s in zip(rep.n, rep.mean, rep.std):
    print(f"n={n:5d}  mean {m:+.4f}  std {s:.4f}")
print(f"log-log slope {rep.fit.slope:.3f}")
