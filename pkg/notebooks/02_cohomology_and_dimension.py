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
# # The relations matrix and the dimension of S_k
#
# The group acts on the coinduced module W_chi, of dimension mu*(k-1).
# Stacking the matrices of the three relation operators (built from S, Q
# and eps) gives the relations matrix.  Its nullspace is the plus part of
# the first cohomology.

# %%
from cohomforms import build_cusp_data, cusp_form_dimension, h1_plus_basis, make_context, plus_dimension
from cohomforms.arith import Q, S
from cohomforms.chars import char_kronecker
from cohomforms.cohomology import action_matrix, relations_matrix
from cohomforms.exactla import ExactMat, matmul

ctx = make_context(25, 4)
R = relations_matrix(ctx)
H = h1_plus_basis(ctx)
print("relations matrix:", R.shape, " nullity:", H.rows)

# %% [markdown]
# A quick sanity check: S has order 4 and Q has order 6 in SL2(Z), and both
# square/cube to -I, which acts by chi(-1)(-1)^k.

# %%
mS, mQ = action_matrix(ctx, S), action_matrix(ctx, Q)
ident = ExactMat.identity(ctx.dimW)
print(matmul(mS, mS) == ident, matmul(matmul(mQ, mQ), mQ) == ident)

# %% [markdown]
# ## Cusps
#
# The nullity overcounts by the boundary contribution.  Coset
# representatives are grouped into cusp classes by right multiplication with
# T, and eps either fixes a class (contributing to one sign space) or swaps
# two of them.

# %%
data = build_cusp_data(ctx)
print("cusp representatives (1-based):", [i + 1 for i in data.reps])
print("plus dimension:", plus_dimension(ctx), " dim S_4(Gamma0(25)):", cusp_form_dimension(ctx))

# %%
ctx = make_context(12, 5, char_kronecker(12))
print("S_5(Gamma0(12), (./12)): nullity", h1_plus_basis(ctx).rows,
      "plus", plus_dimension(ctx), "dim", cusp_form_dimension(ctx))

# %% [markdown]
# When chi(-1) differs from (-1)^k there is nothing to find.

# %%
print(cusp_form_dimension(make_context(12, 4, char_kronecker(12))),
      cusp_form_dimension(make_context(12, 5)))
