# %% [markdown]
# Grid graphs are finite differences
#
# The unit-weight grid graph Laplacian is the finite-difference Laplacian
# with Neumann ends, entry for entry.

# %%
from lapbound.experiments import fd_equivalence, stencil_values

fd, L, diff = fd_equivalence(3)
print(L)
for shape in [(10, 1), (3, 3), (10, 10)]:
    print(shape, "max abs difference", fd_equivalence(*shape)[2])

# %% [markdown]
# At the end of the chain the scaled stencil sees a one-sided difference,
# so for f = x it diverges like -1/h.

# %%
for h in (0.1, 0.01, 0.001):
    x, v = stencil_values(lambda x: x, h)
    print(f"h={h}: end value {v[0]:.1f}, interior {v[len(v) // 2]:.1e}")
