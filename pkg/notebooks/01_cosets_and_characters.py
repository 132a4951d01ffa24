# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Coset representatives and Dirichlet characters
#
# Every computation starts from the right cosets of Gamma0(N) in SL2(Z).
# They are indexed by the projective line P^1(Z/NZ), and each element (c, d)
# is lifted to an integer matrix of determinant 1 with that bottom row.

# %%
from fractions import Fraction

from cohomforms.arith import Mat2Z
from cohomforms.chars import char_from_unit_values, char_kronecker, parse_char_spec
from cohomforms.p1cosets import build_p1, coset_decompose

table = build_p1(25)
print("mu =", table.mu)
print(table.elems[:4], "...", table.elems[24:])
for i in (0, 25, 27):
    print(i, table.elems[i], tuple(table.lifts[i]))

# %% [markdown]
# Any SL2(Z) matrix factors as delta0 times a lift, with delta0 in
# Gamma0(N).  The unit relating its bottom row to the stored P^1 element is
# what a character gets evaluated on.

# %%
g = Mat2Z(7, 2, 3, 1)
s, delta0, lam = coset_decompose(table, g)
print(f"coset {s}, delta0 = {tuple(delta0)}, unit {lam}")
assert delta0 @ table.lifts[s] == g and delta0.c % 25 == 0

# %% [markdown]
# ## Characters
#
# Quadratic characters have rational values.  Higher-order ones take values
# in a cyclotomic field, written in terms of z, a primitive root of unity.

# %%
chi = char_kronecker(12)
print("(d/12):", [int(chi(d)) for d in range(12)])

psi = char_from_unit_values(5, {2: Fraction(1, 4)})
print("order-4 character mod 5:", [str(psi(d)) for d in range(5)])

# the same grammar the command line accepts
print(parse_char_spec(13, "gens:2=1/6"))
