# %% [markdown]
# Reproducing kernel with Neumann ends
#
# A row of the pseudoinverse of L^u matches the Neumann kernel up to
# a scale. The boundary-free kernel 1/4 - |x-y|/2 does not.

# %%
from lapbound.experiments import kernel_experiment

rep = kernel_experiment(n=1001, t=1e-4, x0=0.25)
print(f"scale {rep.scale:.5f}")
print(f"series vs closed form: {rep.series_vs_closed:.1e}")
print(f"pinv row vs series (relative): {rep.pinv_discrepancy:.4f}")
print(f"series vs boundary-free kernel: {rep.prime_gap:.4f}")

# %%
for i in range(0, 1001, 125):
    print(f"y={rep.y[i]:.3f}  K={rep.k_series[i]:+.5f}  pinv/c={rep.k_pinv_aligned[i]:+.5f}  K'={rep.k_prime[i]:+.5f}")
