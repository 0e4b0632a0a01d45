# %% [markdown]
# # Transition matrices and their stationary vectors
#
# Row i of the transition matrix marks the gaps that the gap [x_i, x_{i+1}]
# covers after one application of the map. Every column sums to the descent
# number d, so the dominant eigenvalue is d.

# %%
from cyclic import parse_cycle, regularity_index, signature, stationary_vector, transition_matrix
from cyclic.spectral import format_rational, iterate_until_stable

sigma = parse_cycle("(1 2 4 5 3)")
a = transition_matrix(sigma)
for row in a.entries:
    print(*row)
print("signature (diagonal):", signature(sigma).bits)
print("A^n > 0 from n =", regularity_index(sigma))

# %% [markdown]
# The probability eigenvector is computed exactly with fractions.

# %%
ell = stationary_vector(a)
print([format_rational(x) for x in ell])

# %% [markdown]
# Power iteration in exact integers reaches the same vector, scaled by d^q - 1.

# %%
n, column = iterate_until_stable(a)
print("stable from n =", n, column)
print([x * (3**5 - 1) for x in ell])
