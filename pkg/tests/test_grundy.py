import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammab.bcolor import chromatic_number
from gammab.generators import gen_B, gen_caterpillar, gen_complete, gen_cycle, gen_path, gen_random_graph
from gammab.graph import GraphError, build_graph, disjoint_union
from gammab.grundy import (
    coloring_to_order,
    first_fit,
    grundy_number,
    grundy_oracle,
    grundy_oracle_search,
    is_grundy_coloring,
)

from oracles import brute_first_fit_max, graphs, random_graphs, small_family_members


def test_first_fit_clique_in_visit_order():
    assert first_fit(gen_complete(3), (2, 0, 1)) == (2, 3, 1)


def test_first_fit_path_hand_trace():
    # visit order (0,3,1,2) receives colors 1,1,2,3; indexed by vertex that is (1,2,3,1)
    assert first_fit(gen_path(4), (0, 3, 1, 2)) == (1, 2, 3, 1)


def test_first_fit_edgeless():
    assert first_fit(build_graph(3, []), (1, 2, 0)) == (1, 1, 1)


@pytest.mark.parametrize("order", [(0, 1), (0, 1, 1), (0, 1, 3)])
def test_first_fit_rejects_non_permutation(order):
    with pytest.raises(GraphError):
        first_fit(gen_path(3), order)


def test_is_grundy_coloring_examples():
    assert is_grundy_coloring(gen_path(4), (1, 2, 3, 1))
    assert not is_grundy_coloring(build_graph(2, [(0, 1)]), (1, 1))
    assert not is_grundy_coloring(gen_path(3), (1, 3, 1))
    assert not is_grundy_coloring(gen_path(3), (1, 2))
    assert not is_grundy_coloring(gen_path(3), (0, 1, 2))


def test_path_order_with_three_colors():
    # endpoints first, then the interior: colors 1 1 2 3
    p4 = gen_path(4)
    col = first_fit(p4, (0, 3, 2, 1))
    assert col == (1, 3, 2, 1)
    assert is_grundy_coloring(p4, col) and max(col) == 3


@pytest.mark.parametrize("n", range(1, 8))
def test_grundy_of_cliques(n):
    assert grundy_number(gen_complete(n))[0] == n


def test_grundy_small_values():
    assert grundy_number(gen_path(4))[0] == 3
    assert grundy_number(gen_caterpillar(1, 5))[0] == 2
    assert grundy_number(build_graph(1, []))[0] == 1


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_grundy_of_B(t):
    assert grundy_number(gen_B(t))[0] == t + 1


def test_grundy_rejects_empty_graph():
    with pytest.raises(GraphError):
        grundy_number(build_graph(0, []))
    with pytest.raises(GraphError):
        grundy_oracle(build_graph(0, []))


def test_oracle_values():
    assert grundy_oracle(gen_path(4)) == 3
    assert grundy_oracle(gen_complete(4)) == 4
    # C_4 = K_{2,2}: opposite vertices always share a color
    assert grundy_oracle(gen_cycle(4)) == 2
    assert brute_first_fit_max(gen_cycle(4)) == 2


def test_oracle_cap():
    with pytest.raises(GraphError):
        grundy_oracle(gen_path(10))


def test_oracle_witness_attains_value():
    g = gen_B(4)
    value, order = grundy_oracle_search(g)
    assert max(first_fit(g, order)) == value == 5


@pytest.mark.parametrize("g", small_family_members(7) + random_graphs(40, 7, seed=11),
                         ids=lambda g: f"n{g.n}m{g.num_edges()}")
def test_exact_matches_oracle(g):
    value, order = grundy_number(g)
    assert value == grundy_oracle(g)
    assert max(first_fit(g, order)) == value


def test_oracle_agrees_with_naive_enumeration():
    for g in random_graphs(25, 6, seed=3):
        assert grundy_oracle(g) == brute_first_fit_max(g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=8), st.randoms(use_true_random=False))
def test_first_fit_always_grundy(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    col = first_fit(g, order)
    assert is_grundy_coloring(g, col)
    assert first_fit(g, order) == col
    # sorting by color replays the same coloring
    assert first_fit(g, coloring_to_order(col)) == col


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_grundy_between_chi_and_delta_plus_one(g):
    gamma, order = grundy_number(g)
    assert chromatic_number(g) <= gamma <= g.max_degree() + 1
    assert max(first_fit(g, order)) == gamma


def test_disjoint_union_takes_max():
    gs = random_graphs(12, 5, seed=21)
    for g, h in zip(gs, gs[1:]):
        assert grundy_number(disjoint_union(g, h))[0] == max(grundy_number(g)[0], grundy_number(h)[0])


def test_larger_graphs_witness_valid():
    for seed in range(6):
        g = gen_random_graph(14, 0.4, seed)
        value, order = grundy_number(g)
        col = first_fit(g, order)
        assert max(col) == value and is_grundy_coloring(g, col)
