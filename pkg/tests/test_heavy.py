import math

import pytest

from arbotri.generators import forest_union, path
from arbotri.graph import EdgeRef, Graph, degeneracy
from arbotri.heavy import heavy, sample_count
from arbotri.queries import GraphBackend
from arbotri.rng import Stream


def edge_with_triangles(t_e, pad_u, pad_v):
    """Edge (0, 1) closing ``t_e`` triangles; each endpoint gets extra pendant neighbours."""
    edges = [(0, 1)]
    nxt = 2
    for _ in range(t_e):
        edges += [(0, nxt), (1, nxt)]
        nxt += 1
    for end, pad in ((0, pad_u), (1, pad_v)):
        for _ in range(pad):
            edges.append((end, nxt))
            nxt += 1
    return Graph(nxt, edges)


def test_sample_count_formula():
    assert sample_count(10, 2.0, 0.25, 0.05) == math.ceil(16 * 0.25 * 10 / 2 * math.log(20))
    assert sample_count(1, 1000.0, 0.01, 0.5) == 1


def test_triangle_free_is_never_heavy():
    b = GraphBackend(path(30))
    rng = Stream(0)
    for v in range(29):
        assert heavy(b, EdgeRef(v, v + 1), 1.0, 0.5, 0.1, rng).bit == 0


def test_fully_closed_edge_is_heavy():
    # every neighbour of the low endpoint (other than 1) closes a triangle
    g = edge_with_triangles(20, 0, 5)
    d = 21
    alpha, eps = 2.0, 0.5
    assert alpha / (eps * d) < 1
    b = GraphBackend(g)
    dec = heavy(b, EdgeRef(0, 1), alpha, eps, 0.1, Stream(3))
    # the low endpoint sees vertex 1 among its neighbours, which never closes
    assert dec.bit == 1
    assert 0 < dec.y_hat <= 1


@pytest.mark.parametrize("seed", range(3))
def test_per_call_accounting(seed):
    g = edge_with_triangles(6, 10, 12)
    b = GraphBackend(g)
    dec = heavy(b, EdgeRef(0, 1), 2.0, 0.25, 0.05, Stream(seed))
    c = b.counter
    assert c.degree == 2
    assert c.neighbour == dec.r
    assert c.random_edge == 0
    # drawing the other endpoint costs no Edge query
    assert dec.r - 17 <= c.edge <= dec.r
    assert dec.r == sample_count(17, 2.0, 0.25, 0.05)


def test_planted_heavy_edge_monte_carlo():
    alpha, eps, delta = 2.0, 0.25, 0.05
    g = edge_with_triangles(int(4 * alpha / eps), 300, 400)
    b = GraphBackend(g)
    rng = Stream(11)
    hits = sum(heavy(b, EdgeRef(0, 1), alpha, eps, delta, rng).bit for _ in range(200))
    assert hits >= 180


def test_determinism():
    g = edge_with_triangles(8, 30, 30)
    a = [heavy(GraphBackend(g), EdgeRef(0, 1), 2.0, 0.25, 0.05, Stream(9)) for _ in range(2)]
    assert a[0] == a[1]


def test_expected_queries_on_random_edge():
    g = forest_union(400, 3, 5)
    alpha = degeneracy(g).kappa
    eps, delta = 0.5, 0.01
    assert eps * math.log(1 / delta) >= 1
    b = GraphBackend(g)
    rng = Stream(1)
    calls = 2000
    for _ in range(calls):
        e = g.edges[rng.index(g.m)]
        heavy(b, e, alpha, eps, delta, rng)
    mean = b.counter.total / calls
    assert mean <= 2 * (132 * eps * math.log(1 / delta) + 2)


@pytest.mark.parametrize("bad", [dict(alpha=0), dict(eps=1.0), dict(delta=0.0)])
def test_argument_checks(bad):
    kw = dict(alpha=1.0, eps=0.5, delta=0.1) | bad
    with pytest.raises(ValueError):
        heavy(GraphBackend(path(3)), EdgeRef(0, 1), kw["alpha"], kw["eps"], kw["delta"], Stream(0))
