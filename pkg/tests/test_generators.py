import math

import pytest

from arbotri.generators import InfeasibleSpec, clique_family, gen_graph, parse_spec, planted
from arbotri.graph import count_triangles_exact, degeneracy


def test_planted_reaches_target():
    g, T = planted(500, 4, 1000, 3)
    assert T >= 1000
    assert count_triangles_exact(g) == T


def test_planted_is_seed_deterministic():
    a, _ = planted(300, 3, 200, 9)
    b, _ = planted(300, 3, 200, 9)
    assert a == b


def test_planted_rejects_impossible_targets():
    with pytest.raises(InfeasibleSpec):
        planted(10, 2, 10**6, 0)


@pytest.mark.parametrize("count", [1, 5, 20])
def test_clique_family_exact(count):
    g = clique_family(600, 6, count, 1500, 1)
    assert g.m == 1500
    assert count_triangles_exact(g) == count * math.comb(6, 3)
    assert degeneracy(g).kappa <= 5 + 2


def test_clique_family_infeasible():
    with pytest.raises(InfeasibleSpec):
        clique_family(20, 8, 5, 100)


def test_parse_spec():
    assert parse_spec("planted:n=10, alpha=2,t=3") == ("planted", {"n": "10", "alpha": "2", "t": "3"})
    with pytest.raises(ValueError):
        parse_spec("er:n")


def test_gen_graph_names():
    assert count_triangles_exact(gen_graph("clique:n=6")) == 20
    assert gen_graph("path:n=5").m == 4
    with pytest.raises(ValueError):
        gen_graph("nope:n=3")
    with pytest.raises(ValueError):
        gen_graph("clique")
