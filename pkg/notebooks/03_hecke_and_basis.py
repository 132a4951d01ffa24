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
# # Hecke operators and the q-expansion basis
#
# T_n acts on tensors m (x) gamma_r through the Heilbronn-Merel matrices of
# determinant n.  Pairing the cohomology basis with T_1(x), ..., T_M(x) for
# a cuspidal tensor x gives rows whose echelon form is a basis of
# q-expansions.

# %%
from fractions import Fraction

from cohomforms import compute_basis, heilbronn_merel, make_context
from cohomforms.arith import CycloNum
from cohomforms.chars import char_from_unit_values, char_kronecker
from cohomforms.cli import format_qexp
from cohomforms.hecke import KernelElement, hecke_terms, sturm_bound

print([tuple(A) for A in heilbronn_merel(3)])

# %% [markdown]
# How T_3 moves xy at coset 4 (1-based) of level 25: the target coset and
# the image polynomial, as coefficients of y^2, xy, x^2.

# %%
ctx = make_context(25, 4)
for A, s, p in hecke_terms(ctx, 3, KernelElement((0, 1, 0), 3)):
    print(tuple(A), "->", s + 1, p)

# %% [markdown]
# ## Bases
#
# Probe mode tries cheap tensors first; exact mode computes the cuspidal
# kernel through the boundary map.  The reduced echelon form is canonical, so
# both give the same answer.

# %%
print("Sturm bound:", sturm_bound(ctx))
for row in compute_basis(ctx, 10).forms:
    print(format_qexp(row))

# %%
ctx = make_context(12, 5, char_kronecker(12))
probe = compute_basis(ctx, 10, "probe")
exact = compute_basis(make_context(12, 5, char_kronecker(12)), 10, "exact")
print("modes agree:", probe == exact)
for row in probe.forms:
    print(format_qexp(row))

# %% [markdown]
# A character of order 6 mod 13: coefficients now live in Q(z), z a
# primitive sixth root of unity.

# %%
chi = char_from_unit_values(13, {2: Fraction(1, 6)})
for row in compute_basis(make_context(13, 2, chi), 10).forms:
    print(format_qexp(row))
