# %% [markdown]
# # Realizations under m_k for k > des
#
# Each realization is determined by how the k-1 fixed points of m_k sit in
# the gaps of the orbit (the fixed point distribution), or equivalently by
# how many orbit points lie below each fixed point (the deployment vector).

# %%
from cyclic import count_cycle_realizations, enumerate_admissible, parse_cycle, realize_general
from cyclic.realization import fix_to_dep

sigma = parse_cycle("(1 2 4 5 3)")
k = 4
for f in enumerate_admissible(sigma, k):
    o = realize_general(sigma, k, f)
    print(f.n, "shift", f.shift, "dep", fix_to_dep(f).w, "->", o.numerators)
print("count formula:", count_cycle_realizations(sigma, k))

# %% [markdown]
# Going the other way, a deployment vector picks the realization directly.

# %%
from cyclic import realize_from_dep

print(realize_from_dep(sigma, 4, (0, 3, 5)).numerators)

# %% [markdown]
# Across the whole type, every realization is a rotation by a multiple of
# 1/(k-1) of a realization of the representative.

# %%
from cyclic import count_type_realizations
from cyclic.realization import type_realizations

table = type_realizations(sigma, k)
for nu, orbits in table.items():
    print(nu, len(orbits))
print("type total", sum(map(len, table.values())), "formula", count_type_realizations(sigma, k))
