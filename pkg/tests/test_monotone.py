import pytest

from gammab.bcolor import b_number, is_b_coloring
from gammab.generators import gen_B, gen_complete, gen_path
from gammab.graph import GraphError, induced_subgraph
from gammab.monotone import is_b_monotone, sample_b_monotone

from oracles import random_graphs


def assert_verified(g, verdict):
    for v in (verdict.witness, verdict.strongest):
        h = induced_subgraph(g, v.vertices)
        assert b_number(h)[0] == v.b > verdict.b
        assert is_b_coloring(h, v.coloring) and len(set(v.coloring)) == v.b


def test_B4_not_monotone():
    g = gen_B(4)
    verdict = is_b_monotone(g)
    assert not verdict.monotone and verdict.b == 2
    assert verdict.witness.b == 3
    # first violation level: largest sets with b = 3 have six vertices
    assert verdict.witness.vertices == (0, 1, 2, 3, 4, 5)
    # dropping one full-degree vertex already gives b = 4
    assert verdict.strongest.vertices == (0, 1, 2, 3, 4, 5, 6) and verdict.strongest.b == 4
    assert_verified(g, verdict)


def test_B4_without_full_degree_vertices():
    # removing both degree-4 vertices (3 and 7) leaves b = t - 1 = 3
    assert b_number(induced_subgraph(gen_B(4), [0, 1, 2, 4, 5, 6]))[0] == 3


def test_B5_not_monotone():
    verdict = is_b_monotone(gen_B(5))
    assert not verdict.monotone
    assert verdict.strongest.b == 5
    assert_verified(gen_B(5), verdict)


def test_monotone_examples():
    assert is_b_monotone(gen_complete(5)).monotone
    assert is_b_monotone(gen_path(4)).monotone
    assert is_b_monotone(gen_path(5)).monotone


def test_B2_is_monotone():
    assert is_b_monotone(gen_B(2)).monotone


def test_exact_cap():
    with pytest.raises(GraphError, match="sample"):
        is_b_monotone(gen_B(8))
    assert not is_b_monotone(gen_B(3), cap=6).monotone


def test_sample_finds_violation_in_B6():
    verdict = sample_b_monotone(gen_B(6), 5000, 7)
    assert not verdict.monotone
    assert_verified(gen_B(6), verdict)


def test_sample_no_false_alarms():
    assert sample_b_monotone(gen_complete(6), 200, 3).monotone
    assert sample_b_monotone(gen_path(5), 100, 1).monotone


def test_sample_deterministic():
    a = sample_b_monotone(gen_B(5), 300, 4)
    b = sample_b_monotone(gen_B(5), 300, 4)
    assert a == b


def test_sample_rejects_zero_trials():
    with pytest.raises(GraphError):
        sample_b_monotone(gen_path(3), 0, 1)


def test_sample_never_contradicts_exact():
    for g in random_graphs(30, 8, seed=31):
        exact = is_b_monotone(g)
        sampled = sample_b_monotone(g, 4 * 2 ** g.n, 5)
        if exact.monotone:
            assert sampled.monotone
        else:
            assert_verified(g, exact)
            if not sampled.monotone:
                assert_verified(g, sampled)
                assert sampled.witness.b >= exact.witness.b
