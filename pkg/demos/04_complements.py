# %% [markdown]
# # Additive complements of finite sets
#
# `C` is a complement of `W` when `W + C` is all of the integers.  With `C`
# eventually periodic, this is decidable exactly.

# %%
from gadicnets import (EventuallyPeriodicSet, FiniteSet, is_asymptotic_complement,
                       is_complement, is_minimal_on_window, prune_minimal)

W = FiniteSet.of(0, 1)
evens = EventuallyPeriodicSet.periodic(2, [0])
print(is_complement(W, evens), is_complement(FiniteSet.of(0, 2), EventuallyPeriodicSet.periodic(4, [0])))

# %% [markdown]
# Asymptotic complements may miss finitely many integers.

# %%
print(is_asymptotic_complement(W, evens.with_points(remove=[0])))
nonneg = EventuallyPeriodicSet(2, 0, 0, frozenset({0}), frozenset({0}), frozenset())
print(is_asymptotic_complement(W, nonneg))

# %% [markdown]
# Pruning walks through `C` by increasing absolute value and drops whatever
# is not needed.  Starting from all integers, `0` is dropped first, and what
# remains near the origin is the odd integers.

# %%
view = prune_minimal(W, EventuallyPeriodicSet.integers(), (-12, 12))
print(view.core_members())
ok, certs = is_minimal_on_window(W, view, (-12, 12))
print(ok, certs[:3])

# %%
for w in [(0, 1, 2), (0, 2, 3)]:
    v = prune_minimal(FiniteSet(w), EventuallyPeriodicSet.integers(), (-15, 15))
    print(w, v.core_members())
