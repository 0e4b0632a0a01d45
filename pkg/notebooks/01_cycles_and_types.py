# %% [markdown]
# # Cycles, descents and combinatorial types
#
# A q-cycle is stored in one-line form: `table[i-1]` is the image of `i`.
# Cycle notation is only used for reading and printing.

# %%
from cyclic import combinatorial_type, descent, enumerate_types, parse_cycle, rho, symmetry_order

sigma = parse_cycle("(1 2 4 5 3)")
print(sigma, "table", sigma.table)
print("des =", descent(sigma), " sym =", symmetry_order(sigma))

# %% [markdown]
# Conjugating by the rotation `rho: i -> i+1` relabels the points cyclically.
# The descent number does not change, and the set of all such conjugates is
# the combinatorial type.

# %%
t = combinatorial_type(sigma)
for nu in t.representatives:
    print(nu, "des", descent(nu))
print("canonical:", t.canonical)

# %% [markdown]
# Rotation cycles are exactly the cycles with one descent. Their type is a
# single cycle, because every rotation commutes with `rho`.

# %%
print(rho(5), descent(rho(5)), symmetry_order(rho(5)))

# %% [markdown]
# All types for small q. The sizes always add up to (q-1)!.

# %%
from math import factorial

for q in range(3, 8):
    types = enumerate_types(q)
    print(q, len(types), sum(t.size for t in types) == factorial(q - 1))
