# %% [markdown]
# # A length-preserving map from base 2 to base 3
#
# Write `n` in non-adjacent form with exponents `k_0 < k_1 < ...`.  Sending
# `2^{k_i}` to `3^{k_i - i}` gives a bijection of the integers that keeps
# the length of every number.

# %%
from gadicnets import distortion_witness, length, map23, map23_inverse

for n in (9, 8, 100, -77):
    t = map23(n)
    print(n, "->", t, length(2, n), length(3, t), map23_inverse(t))

# %% [markdown]
# The map is not bi-Lipschitz.  The pairs below are at base-2 distance 1,
# yet their images drift apart linearly in `r`.  This is a property of this
# map only.

# %%
for r in (1, 2, 5, 10, 30):
    w = distortion_witness(r)
    print(r, w.d2, w.d3)
