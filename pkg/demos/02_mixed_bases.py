# %% [markdown]
# # Word length with powers of 2 and 3
#
# With both `±2^i` and `±3^i` available, lengths drop sharply.  Exact values
# are only known up to an exponent cap `B`, so every result says which cap
# it was computed under.

# %%
from gadicnets import GeneratingSetSpec, diophantine_search, smallest_of_length, word_length

spec = GeneratingSetSpec.primes([2, 3], cap=20)
for n in (5, 21, 100, 149):
    r = word_length(spec, n)
    print(n, r.length, [t.value for t in r.witness], "capped" if r.capped else "exact")

# %% [markdown]
# The smallest positive integers of length 1, 2 and 3:

# %%
print([smallest_of_length(spec, h, 10_000) for h in (1, 2, 3)])

# %% [markdown]
# Nothing below 150 needs four terms under this cap.  149 and 151 are the
# natural suspects, and a sweep of `2^a - 3^b` shows neither is a single
# difference of powers up to exponent 200.

# %%
print(max(word_length(spec, n).length for n in range(1, 150)))
print(diophantine_search([149, 151], 200))
print(diophantine_search([5, 13], 200))

# %% [markdown]
# Other generating sets: several primes, or all `{p}`-smooth numbers.

# %%
for text in ("P=2,3,5", "S(P)=2,3"):
    s = GeneratingSetSpec.parse(text, cap=6)
    print(s.label(), [smallest_of_length(s, h, 5000) for h in (1, 2, 3)])
