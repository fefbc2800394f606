# %% [markdown]
# The graph regularizer and its coefficient
#
# f^T L^u f / (n^2 t) divided by the gradient energy tends to
# (1/4) pi^(1/2 - alpha), whatever the function.

# %%
from lapbound.experiments import log_grid, quadform_table

reps = quadform_table(1001, (0.0, 0.5, 1.0, -1.0), t_grid=log_grid(1.0, 1e-7, 29))
for r in reps:
    print(f"alpha={r.alpha:+.1f} {r.function:>7}: max {r.max_coefficient:.4f} at t={r.argmax_t:.1e}"
          f"  theory {r.theory:.4f}")

# %% [markdown]
# Along the t grid the coefficient rises, plateaus and then collapses once
# sqrt(t) drops below the sample spacing.

# %%
r = reps[0]
for t, c in zip(r.t[::4], r.coefficient[::4]):
    print(f"t={t:.1e}  coefficient {c:.4f}")
