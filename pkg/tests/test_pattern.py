import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammab.generators import gen_B, gen_complete, gen_complete_bipartite, gen_cycle, gen_path, gen_R
from gammab.graph import build_graph, induced_subgraph
from gammab.pattern import find_induced, is_free, is_induced_embedding

from oracles import brute_induced, graphs


def test_B3_contains_P5():
    emb = find_induced(gen_B(3), gen_path(5))
    assert emb is not None and is_induced_embedding(gen_B(3), gen_path(5), emb)


def test_B4_is_P6_free():
    assert find_induced(gen_B(4), gen_path(6)) is None


def test_triangle_identity():
    assert find_induced(gen_complete(3), gen_complete(3)) == (0, 1, 2)


def test_C4_has_no_induced_P4():
    assert find_induced(gen_cycle(4), gen_path(4)) is None
    assert brute_induced(gen_cycle(4), gen_path(4)) == []


def test_is_free_examples():
    assert is_free(gen_B(5), [gen_path(6)])
    assert not is_free(gen_complete_bipartite(3, 3), [gen_complete_bipartite(3, 3)])
    assert is_free(gen_R(4), [gen_complete_bipartite(2, 2)])
    assert brute_induced(gen_R(4), gen_complete_bipartite(2, 2)) == []


def test_empty_pattern_and_oversized_pattern():
    assert find_induced(gen_path(3), build_graph(0, [])) == ()
    assert find_induced(gen_path(3), gen_path(4)) is None


def test_disconnected_pattern():
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert find_induced(gen_path(5), two_edges) == (0, 1, 3, 4)
    assert find_induced(gen_path(4), two_edges) is None


@pytest.mark.parametrize("t", range(3, 7))
def test_B_contains_P5(t):
    assert find_induced(gen_B(t), gen_path(5)) is not None


def test_B2_is_too_small_for_P5():
    assert find_induced(gen_B(2), gen_path(5)) is None


@pytest.mark.parametrize("k", range(2, 7))
def test_R_has_no_bicliques(k):
    for t in range(2, 4):
        assert find_induced(gen_R(k), gen_complete_bipartite(t, t)) is None


@settings(max_examples=250, deadline=None)
@given(graphs(max_n=7), graphs(max_n=4))
def test_agrees_with_exhaustive_search(host, pattern):
    # lexicographically least embedding, or none
    expected = brute_induced(host, pattern)
    got = find_induced(host, pattern)
    if expected:
        assert got == expected[0]
        assert is_induced_embedding(host, pattern, got)
    else:
        assert got is None


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=7), graphs(max_n=3), st.data())
def test_monotone_under_induced_supergraphs(host, pattern, data):
    keep = data.draw(st.sets(st.integers(0, host.n - 1)))
    sub = induced_subgraph(host, keep)
    if find_induced(sub, pattern) is not None:
        assert find_induced(host, pattern) is not None
