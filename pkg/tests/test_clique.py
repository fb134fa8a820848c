import itertools

import pytest
from hypothesis import given, settings

import oracles
from conftest import gnp, small_graphs
from sqclique.analysis import square
from sqclique.clique import brute_force_max_clique, clique_number, max_clique
from sqclique.constructs import example1
from sqclique.graph import GraphError, SimpleGraph, is_clique


def test_small_examples():
    k5 = SimpleGraph(5, itertools.combinations(range(5), 2))
    assert max_clique(k5).size == 5
    c5 = SimpleGraph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert brute_force_max_clique(c5).size == 2
    k4e = SimpleGraph(4, [e for e in itertools.combinations(range(4), 2) if e != (0, 1)])
    assert brute_force_max_clique(k4e).size == 3


def test_example1_square_clique():
    c = example1(8)
    w = max_clique(square(c.graph))
    assert w.exact and w.size == 20
    assert list(w.members) == sorted(c.S)


def test_cross_check_gnp_seed7():
    g = gnp(12, 0.5, 7)
    assert max_clique(g).members == brute_force_max_clique(g).members


def test_thirty_random_graphs():
    for seed in range(30):
        g = gnp(10 + seed % 13, 0.5, seed)
        a, b = max_clique(g), brute_force_max_clique(g)
        assert a.members == b.members


def test_lexicographically_least_witness():
    # two disjoint triangles: the one containing 0 wins
    g = SimpleGraph(6, [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)])
    assert max_clique(g).members == (0, 1, 2)


def test_budget_exhaustion_reports_lower_bound():
    g = gnp(200, 0.9, 1)
    w = max_clique(g, time_budget=0.0)
    assert not w.exact
    assert is_clique(g, w.members)


def test_brute_force_cap_and_empty():
    with pytest.raises(GraphError):
        brute_force_max_clique(SimpleGraph(40))
    assert max_clique(SimpleGraph(0)).size == 0
    assert clique_number(SimpleGraph(3)) == 1


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=9))
def test_matches_oracle(g):
    w = max_clique(g)
    assert is_clique(g, w.members)
    assert w.size == oracles.clique_number(g.n, list(g.edges()))
    assert w.members == brute_force_max_clique(g).members
