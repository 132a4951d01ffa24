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
# # Where the time goes
#
# The bench module times each pipeline stage separately and fits log-log
# slopes.  A short range keeps this demo quick; the command
# `cohomforms-bench sweep --levels 10-60 --weights 4` runs the full version.

# %%
from cohomforms.bench import fit_exponents, hecke_set_census, records_to_csv, stage_shares, sweep

records = sweep(range(10, 31), [4])
print(records_to_csv(records).splitlines()[0])
for r in records[-3:]:
    print(r.N, r.mu, r.dim, f"{r.t_total_ns / 1e6:.1f} ms")

# %%
slopes = fit_exponents(records, "N")
print({s: None if v is None else round(v, 2) for s, v in slopes.items()})
print({s: round(v, 2) for s, v in stage_shares(records[-1]).items()})

# %% [markdown]
# ## Sizes of the Hecke matrix sets
#
# |S_n'| never exceeds twice the divisor sum.

# %%
for row in hecke_set_census(range(1, 13)):
    print(row)
