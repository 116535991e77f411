"""
First-Fit and the Grundy number
===============================

First-Fit colors vertices in a given order, giving each the least color not
already used by a neighbour. The Grundy number is the worst case over all
orders.
"""

# %%
from gammab import build_graph, first_fit, grundy_number, grundy_oracle, is_grundy_coloring
from gammab.generators import gen_B, gen_caterpillar, gen_path

# %% [markdown]
# On the path 0-1-2-3 the natural order needs only 2 colors, but visiting the
# endpoints first forces a third.

# %%
p4 = gen_path(4)
print("natural order :", first_fit(p4, [0, 1, 2, 3]))
print("ends first    :", first_fit(p4, [0, 3, 2, 1]))

# %% [markdown]
# Every First-Fit output is a Grundy coloring: a vertex of color j sees all
# colors below j. Arbitrary proper colorings need not be.

# %%
print(is_grundy_coloring(p4, first_fit(p4, [0, 3, 2, 1])))
print(is_grundy_coloring(gen_path(3), (1, 3, 1)))

# %% [markdown]
# `grundy_number` returns the exact value and an ordering attaining it. For
# small graphs the factorial oracle tries every ordering.

# %%
for name, g in [("P4", p4), ("B3", gen_B(3)), ("star K1,5", gen_caterpillar(1, 5))]:
    value, order = grundy_number(g)
    print(f"{name:10s} Γ={value}  oracle={grundy_oracle(g)}  witness={order}")

# %% [markdown]
# The exact solver scales well past the oracle: B_7 has 14 vertices.

# %%
g = gen_B(7)
value, order = grundy_number(g)
print("Γ(B_7) =", value, "colors used:", max(first_fit(g, order)))

# %%
k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
print("Γ(K_4) =", grundy_number(k4)[0])
