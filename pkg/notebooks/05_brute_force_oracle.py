# %% [markdown]
# # Checking the counts by brute force
#
# Period-q points of m_k are the fractions a/(k^q - 1). Walking every
# numerator gives all orbits, each tagged with the cycle it realizes.

# %%
from cyclic import enumerate_orbits, verify_counts

catalog = enumerate_orbits(5, 3)
print(len(catalog.records), "orbits of period 5 under m_3")
for canon, records in catalog.by_type.items():
    print(canon, len(records))

# %% [markdown]
# `verify_counts` compares every cycle and type tally with the closed forms,
# and also rebuilds each catalog orbit from its fixed point data.

# %%
for q, k in [(4, 3), (5, 4), (6, 4)]:
    report = verify_counts(q, k)
    print(q, k, "PASS" if report.ok else report.failures())
