# %% [markdown]
# # Shortest signed-digit expansions
#
# Every integer is a sum of terms `±g^i`.  The canonical expansion returned
# by `canonical_repr` uses as few terms as possible; for `g = 2` it is the
# non-adjacent form, for `g = 3` balanced ternary.

# %%
from gadicnets import RawRepresentation, canonical_repr, length, shorten
from gadicnets.gadic import extend_length

for g in (2, 3, 4, 10):
    rep = canonical_repr(g, 2024)
    print(f"base {g:2d}: digits {rep.digits}  length {rep.length}")

# %% [markdown]
# Even bases have a subtle tie rule.  In base 4 the number 10 can be written
# as `2 + 2*4` or as `-2 - 4 + 16`, both with four unit terms.  Only the
# second one is canonical.

# %%
print(canonical_repr(4, 10).digits, length(4, 10))

# %% [markdown]
# `shorten` starts from any messy sum of `±g^i` and rewrites it until it
# reaches the canonical form, never increasing the number of terms.

# %%
messy = RawRepresentation(5, [(1, 0)] * 8 + [(1, 2), (-1, 2), (1, 1)])
trace = []
print(shorten(messy, trace).digits, "value", messy.value)
for rule, count in trace:
    print(f"  {rule:>5}: {count} terms")

# %% [markdown]
# `extend_length` finds a single power that makes a number one step longer,
# which is what the net construction needs.

# %%
for n in (0, 7, -7, 100):
    a = extend_length(2, n)
    print(n, "+", a.value, "->", length(2, n), "becomes", length(2, n + a.value))
