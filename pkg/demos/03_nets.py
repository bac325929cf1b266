# %% [markdown]
# # Nets in the integers with the g-adic metric
#
# Take `C` to be the integers whose base-`g` length is a multiple of
# `2h + 1`.  Every integer is then within `h` steps of `C`, and
# `cover_witness` exhibits the steps.

# %%
from gadicnets import NetSpec, cover_witness, net_check_window, length
from gadicnets.nets import greedy_minimal_net

spec = NetSpec.build(2, 1)
print(spec, spec.members((-40, 40)))

# %%
for n in (0, 7, 12, 1000):
    cert = cover_witness(spec, n)
    print(n, "=", cert.c, "+", [t.value for t in cert.word], " length of c:", length(2, cert.c))

# %% [markdown]
# The window checker searches independently, without the construction.

# %%
v = net_check_window(spec, 2, 1, (-2000, 2000))
print(v.status, len(v.certificates))

# %% [markdown]
# A single point is not a 1-net.  A finite set gives an exact answer.

# %%
v = net_check_window([0], 2, 1, (-10, 10), exhaustive=True)
print(v.status, v.uncovered)

# %% [markdown]
# Greedily thinning a window gives a locally minimal net.  This is a
# window experiment only.

# %%
print(greedy_minimal_net(2, 1, (-30, 30)))
