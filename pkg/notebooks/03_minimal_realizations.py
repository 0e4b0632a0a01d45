# %% [markdown]
# # Realizing a cycle under m_d with d = des
#
# When the last signature bit is 1, a cycle with d descents has exactly one
# realization as an orbit of x -> d x (mod 1). Its gaps are the stationary
# vector of the transition matrix.

# %%
from fractions import Fraction

from cyclic import conjugate_by_rotation, parse_cycle, realize_minimal, signature
from cyclic.errors import NotRealizable

for text in ["(1 2 4 5 3)", "(1 2 5 6 3 4)", "(1 2 4 7 5 6 8 3)"]:
    o = realize_minimal(parse_cycle(text))
    print(text, "under m_%d:" % o.k, o.numerators, "/", o.denominator)

# %% [markdown]
# A conjugate whose signature ends in 0 has no such realization.

# %%
nu = conjugate_by_rotation(parse_cycle("(1 2 4 5 3)"), 1)
print(nu, signature(nu).bits)
try:
    realize_minimal(nu)
except NotRealizable as exc:
    print("NotRealizable:", exc)

# %% [markdown]
# Rotating by multiples of 1/(d-1) moves realizations between conjugates.
# For a cycle with symmetry, the rotation by 1/sym leaves the orbit in place.

# %%
from cyclic import rotated_type_realizations, symmetry_order

sigma = parse_cycle("(1 2 5 6 3 4)")
(o,) = rotated_type_realizations(sigma)
s = symmetry_order(sigma)
print("sym =", s, " invariant:", o.rotate(Fraction(-1, s)) == o)
