"""
K_{t,t} minus a matching
========================

B_t deletes t-1 edges of a perfect matching from K_{t,t}. First-Fit can be
forced to use t+1 colors while no b-coloring uses more than 2, so Γ - b grows
without bound inside a P_6-free family.
"""

# %%
from gammab import emit_report, find_induced, is_b_monotone, is_free, sweep_family
from gammab.generators import gen_B, gen_path
from gammab.graph import induced_subgraph
from gammab.bcolor import b_number

# %%
report = sweep_family("B", range(2, 7))
print(emit_report(report, "csv"))

# %% [markdown]
# Induced paths: P_5 appears from t = 3 on, P_6 never does.

# %%
for t in range(2, 7):
    g = gen_B(t)
    print(t, "P5 at", find_induced(g, gen_path(5)), " P6-free:", is_free(g, [gen_path(6)]))

# %% [markdown]
# B_t is not b-monotone. Dropping the two full-degree vertices leaves K_{t-1,t-1}
# minus a perfect matching, with b = t - 1.

# %%
for t in (4, 5):
    g = gen_B(t)
    keep = [v for v in range(g.n) if g.degree(v) != t]
    print(t, "b(B_t) =", b_number(g)[0], " b(without full-degree vertices) =", b_number(induced_subgraph(g, keep))[0])

# %% [markdown]
# The exhaustive check reports the first violation level and the strongest
# violation it found; removing a single full-degree vertex already gives b = t.

# %%
verdict = is_b_monotone(gen_B(4))
print(verdict.to_dict())
