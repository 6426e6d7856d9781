import numpy as np
import pytest
from scipy.stats import chisquare

from arbotri.generators import clique, path
from arbotri.graph import Graph, load_edge_list
from arbotri.queries import GraphBackend, QueryCounter, QueryError
from arbotri.rng import Stream


def test_degree_neighbour_edge_on_k4(k4_text):
    b = GraphBackend(load_edge_list(k4_text))
    assert [b.degree(v) for v in range(4)] == [3, 3, 3, 3]
    assert [b.neighbour(0, i) for i in (1, 2, 3)] == [1, 2, 3]
    assert b.edge(0, 1) == 1
    assert b.counter == QueryCounter(degree=4, neighbour=3, edge=1)


def test_isolated_vertex_and_empty_graph():
    b = GraphBackend(Graph(3, []))
    assert b.degree(2) == 0
    assert b.edge(0, 1) == 0
    with pytest.raises(QueryError):
        b.random_edge(Stream(0))


def test_path_neighbour_order():
    b = GraphBackend(path(3))
    assert b.neighbour(1, 1) == 0
    assert b.neighbour(1, 2) == 2


@pytest.mark.parametrize("call", [
    lambda b: b.degree(7),
    lambda b: b.neighbour(0, 0),
    lambda b: b.neighbour(0, 4),
    lambda b: b.edge(1, 1),
    lambda b: b.edge(-1, 2),
])
def test_query_errors_do_not_count(call):
    b = GraphBackend(clique(4))
    with pytest.raises(QueryError):
        call(b)
    assert b.counter.total == 0


def test_each_call_bumps_one_counter():
    b = GraphBackend(clique(5))
    rng = Stream(1)
    ops = [("degree", lambda: b.degree(0)), ("neighbour", lambda: b.neighbour(0, 2)),
           ("edge", lambda: b.edge(0, 3)), ("random_edge", lambda: b.random_edge(rng))]
    for name, op in ops * 3:
        before = b.counter.snapshot()
        op()
        diff = (b.counter - before).to_json()
        assert diff.pop(name) == 1
        assert set(diff.values()) == {0}


def test_counter_json_and_arithmetic():
    c = QueryCounter(1, 2, 3, 4, 9)
    assert c.total == 10
    assert c.to_json() == {"degree": 1, "neighbour": 2, "edge": 3, "random_edge": 4, "bit_reads": 9}
    assert (c + c - c) == c


def test_single_edge_graph_random_edge():
    b = GraphBackend(Graph(2, [(0, 1)]))
    rng = Stream(5)
    assert {b.random_edge(rng) for _ in range(20)} == {(0, 1)}


def test_random_edge_uniform_on_k4():
    g = clique(4)
    b = GraphBackend(g)
    rng = Stream(2024)
    index = {e: i for i, e in enumerate(g.edges)}
    counts = np.zeros(6)
    for _ in range(60_000):
        counts[index[b.random_edge(rng)]] += 1
    assert chisquare(counts).pvalue > 0.001
    assert np.all(np.abs(counts - 10_000) <= 3 * np.sqrt(60_000 * (1 / 6) * (5 / 6)))
