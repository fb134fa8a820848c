import json

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_graphs
from sqclique.graph import Multigraph, SimpleGraph, VertexOrder
from sqclique.io import GraphParseError, dump, from_json, load, read_document, to_json


def test_k3_round_trip():
    k3 = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
    doc = json.loads(to_json(k3))
    assert doc["n"] == 3 and len(doc["edges"]) == 3
    assert from_json(to_json(k3)) == k3


def test_multigraph_round_trip():
    h = Multigraph(4, {(0, 1): 3, (2, 3): 1})
    back = from_json(to_json(h))
    assert isinstance(back, Multigraph) and back == h


def test_document_with_sets_order_and_extra(tmp_json):
    g = SimpleGraph(3, [(0, 1)])
    path = tmp_json("g.json")
    dump(path, g, sets={"S": [2, 0]}, order=VertexOrder([1, 2, 0]), extra={"params": {"D": 3}})
    doc = load(path)
    assert doc.graph == g
    assert doc.sets == {"S": [0, 2]}
    assert doc.order.sequence == (1, 2, 0)
    assert doc.extra == {"params": {"D": 3}}


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"n": 3, "edges": [[0, 5]]}', "edges[0]: index out of range"),
        ('{"n": 3, "edges": [[1, 1]]}', "edges[0]: loop"),
        ('{"n": 3, "edges": [[0, 1], [1, 0]]}', "edges[1]: duplicate edge"),
        ('{"n": 3, "edges": [], "multiplicity": [[0, 1, 2], [1, 0, 1]]}', "multiplicity[1]: duplicate"),
        ('{"n": 3, "edges": [], "multiplicity": [[0, 1, 0]]}', "multiplicity[0]: multiplicity must be >= 1"),
        ('{"edges": []}', "missing field 'n'"),
        ('{"n": 2, "edges": [[0, "a"]]}', "edges[0]: expected integer"),
        ('{"n": 2, "edges": [], "order": [0, 0]}', "order"),
        ("[1, 2", "invalid JSON"),
    ],
)
def test_parse_errors_name_the_element(text, fragment):
    with pytest.raises(GraphParseError, match=None) as info:
        read_document(text)
    assert fragment in str(info.value)


def test_edges_without_multiplicity_entry_default_to_one():
    h = from_json('{"n": 3, "edges": [[0, 1], [1, 2]], "multiplicity": [[0, 1, 4]]}')
    assert h.mu(0, 1) == 4 and h.mu(1, 2) == 1


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=0))
def test_round_trip_identity(g):
    assert from_json(to_json(g)) == g


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(1, 4)))
def test_multigraph_round_trip_identity(n, raw):
    mult = {}
    for (a, b), m in raw.items():
        a, b = a % n, b % n
        if a != b:
            mult[(min(a, b), max(a, b))] = m
    h = Multigraph(n, mult)
    assert from_json(to_json(h)) == h
