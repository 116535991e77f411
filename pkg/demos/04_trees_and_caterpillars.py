"""
Trees: the Γ ≤ 2m bound, R_k, and caterpillars
==============================================
"""

# %%
from gammab import check_tree_bound, emit_report, sweep_family
from gammab.lab import Caps
from gammab.generators import gen_R, gen_random_tree, r_coloring
from gammab.bcolor import is_b_coloring

# %% [markdown]
# On trees Γ ≤ 2m, hence Γ ≤ 2b + 2 since b ≥ m - 1. Checking random trees:

# %%
worst = 0.0
for seed in range(300):
    t = gen_random_tree(2 + seed % 11, seed)
    c = check_tree_bound(t)
    assert c.passed
    worst = max(worst, c.details["gamma"] / (2 * c.details["m"]))
print(f"largest Γ / 2m seen: {worst:.2f}")

# %% [markdown]
# R_k: a root, k-1 children, k-2 private leaves per child. Child i dominates
# color i in the explicit coloring; m(R_k) = k caps b at k.

# %%
for k in range(2, 6):
    print(k, gen_R(k).n, "vertices;", "b-coloring:", is_b_coloring(gen_R(k), r_coloring(k)))
print(emit_report(sweep_family("R", range(2, 6), caps=Caps(gamma=20, b=20)), "csv"))

# %% [markdown]
# Caterpillars with s spine vertices and s leaves each: b climbs with s, Γ
# levels off at 4. A spine vertex sees at most two spine neighbours, and its
# leaves only ever contribute color 1, so no spine vertex can reach color 5.

# %%
report = sweep_family("cat", range(2, 7), caps=Caps(gamma=42, b=42))
print(emit_report(report, "csv"))
for c in report.checks:
    if c.name in ("b_increasing", "gamma_bounded", "gamma_le_3"):
        print(c.name, c.passed, c.details)
