"""
b-colorings and class elimination
=================================

A color class is dominated when one of its vertices sees every other color.
A b-coloring dominates all its classes; b(G) is the most colors any
b-coloring uses, and m(G) bounds it from the degree sequence.
"""

# %%
import random

from gammab import b_number, domination_report, eliminate_classes, is_b_coloring, m_number
from gammab.bcolor import chromatic_number, clique_number
from gammab.generators import gen_path, gen_random_graph

# %% [markdown]
# In (1,2,3,1) on P_4 class 1 has no dominating vertex.

# %%
p4 = gen_path(4)
print(domination_report(p4, (1, 2, 3, 1)))
print("b-coloring?", is_b_coloring(p4, (1, 2, 3, 1)))

# %% [markdown]
# Elimination dissolves the lowest undominated class, moving each vertex to
# the lowest class where it has no neighbour, and repeats until every class
# is dominated.

# %%
print(eliminate_classes(p4, (1, 2, 3, 1)))

# %% [markdown]
# On random graphs the result never uses more than b(G) colors.

# %%
rng = random.Random(1)
for seed in range(6):
    g = gen_random_graph(9, 0.4, seed)
    order = list(range(g.n))
    rng.shuffle(order)
    col = [0] * g.n
    for v in order:
        used = {col[u] for u in g.neighbors(v)}
        col[v] = rng.choice([c for c in range(1, g.n + 1) if c not in used])
    out = eliminate_classes(g, col)
    b, _ = b_number(g)
    print(f"start {len(set(col))} colors -> {len(set(out))}   b={b}  m={m_number(g)}")

# %% [markdown]
# The invariant chain ω ≤ χ ≤ b ≤ m ≤ Δ+1 on a few graphs:

# %%
for seed in range(4):
    g = gen_random_graph(10, 0.5, 100 + seed)
    print(clique_number(g), chromatic_number(g), b_number(g)[0], m_number(g), g.max_degree() + 1)
