import itertools

import pytest
from hypothesis import given, settings

from conftest import small_graphs
from sqclique.graph import (
    GraphError,
    LoopError,
    Multigraph,
    SimpleGraph,
    VertexOrder,
    add_edge,
    complement,
    contract_edge,
    is_clique,
    is_independent,
    subdivide_all_edges,
    underlying_simple,
)


def complete(n):
    return SimpleGraph(n, itertools.combinations(range(n), 2))


def cycle(n):
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def test_add_edge_builds_k2_and_is_idempotent():
    k2 = add_edge(SimpleGraph(2), 0, 1)
    assert k2.edge_set() == {(0, 1)}
    assert add_edge(k2, 0, 1) == k2


def test_add_edge_returns_copy():
    g = SimpleGraph(2)
    add_edge(g, 0, 1)
    assert g.edge_count() == 0


def test_triangle_degrees():
    g = SimpleGraph(3)
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        g = add_edge(g, u, v)
    assert g.degrees() == [2, 2, 2]


def test_loop_rejected_with_distinct_error():
    with pytest.raises(LoopError):
        add_edge(SimpleGraph(2), 1, 1)
    with pytest.raises(GraphError):
        SimpleGraph(2).add_edge(0, 5)


def test_underlying_simple():
    fat = Multigraph(5, {e: 2 for e in itertools.combinations(range(5), 2)})
    assert underlying_simple(fat) == complete(5)
    assert underlying_simple(Multigraph(0)) == SimpleGraph(0)
    k6e = Multigraph(6, {e: 1 for e in itertools.combinations(range(6), 2) if e != (0, 1)})
    assert underlying_simple(k6e).edge_count() == 14
    assert not underlying_simple(k6e).has_edge(0, 1)


def test_complement_examples():
    assert complement(complete(5)).edge_count() == 0
    c5c = complement(cycle(5))
    assert sorted(c5c.degrees()) == [2] * 5
    assert c5c.edge_count() == 5
    k6e = complete(6)
    k6e.remove_edge(2, 4)
    assert complement(k6e).edge_set() == {(2, 4)}


def test_subdivide_examples():
    p3, S = subdivide_all_edges(complete(2))
    assert S == [2] and p3.edge_set() == {(0, 2), (1, 2)}
    c6, S = subdivide_all_edges(complete(3))
    assert len(S) == 3 and c6.n == 6 and set(c6.degrees()) == {2}
    base = SimpleGraph(12, [(i, (i + o) % 12) for i in range(12) for o in (1, 2)])
    for i in range(6):
        base.add_edge(i, i + 6)
    assert set(base.degrees()) == {5}
    out, S = subdivide_all_edges(base)
    assert (out.n, out.edge_count(), len(S)) == (42, 60, 30)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_subdivide_degrees(g):
    out, S = subdivide_all_edges(g)
    assert all(out.degree(x) == 2 for x in S)
    assert all(out.degree(v) == g.degree(v) for v in g.vertices())
    out.validate()


def test_contract_path_and_cycle():
    p3 = SimpleGraph(3, [(0, 1), (1, 2)])
    assert contract_edge(p3, 0, 1) == SimpleGraph(2, [(0, 1)])
    h = contract_edge(cycle(4), 0, 1, multigraph=True)
    assert h.n == 3 and h.edge_count() == 3 and all(m == 1 for _, m in h.items())
    assert underlying_simple(h) == complete(3)


def test_contract_k22_keeps_remaining_three_edges():
    # parts {a,b} = {0,1} and {x,y} = {2,3}; contract a-x
    k22 = SimpleGraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    h = contract_edge(k22, 0, 2, multigraph=True)
    assert h.n == 3
    assert h.edge_count() == 3
    assert all(m == 1 for _, m in h.items())


def test_contract_parallel_edges_in_multigraph_mode():
    # triangle: contracting one edge doubles the remaining pair
    h = contract_edge(complete(3), 0, 1, multigraph=True)
    assert h.items() == [((0, 1), 2)]
    assert contract_edge(complete(3), 0, 1) == SimpleGraph(2, [(0, 1)])


def test_contract_requires_edge():
    with pytest.raises(GraphError):
        contract_edge(SimpleGraph(3, [(0, 1)]), 0, 2)


def test_multigraph_behaviour():
    h = Multigraph(3)
    h.add_edge(0, 1, 2)
    h.add_edge(1, 0)
    assert h.mu(0, 1) == 3 and h.degree(1) == 3
    h.set_multiplicity(0, 1, 0)
    assert h.edge_count() == 0 and h.pairs() == []
    with pytest.raises(GraphError):
        h.set_multiplicity(0, 2, -1)
    with pytest.raises(LoopError):
        h.add_edge(2, 2)


def test_vertex_order():
    o = VertexOrder([2, 0, 1])
    assert o.position == (1, 2, 0)
    g = SimpleGraph(3, [(0, 1), (0, 2), (1, 2)])
    assert o.later_neighbors(g, 2) == [0, 1]
    assert o.earlier_neighbors(g, 1) == [2, 0]
    with pytest.raises(GraphError):
        VertexOrder([0, 0, 1])


def test_independence_and_cliques():
    g = cycle(4)
    assert is_independent(g, [0, 2])
    assert not is_independent(g, [0, 1])
    assert is_clique(complete(4), [0, 1, 3])
    assert not is_clique(g, [0, 1, 2])


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_simple_graph_invariants(g):
    g.validate()
    assert sum(g.degrees()) == 2 * g.edge_count()
    assert all(a < b for a, b in g.edges())
    assert underlying_simple(Multigraph(g.n, {e: 1 for e in g.edges()})) == g
    assert complement(complement(g)) == g
