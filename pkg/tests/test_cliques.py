import random

import pytest

from partsat import InputError, PartiteGraph, clique_number, has_clique, plain_graph
from partsat.cliques import has_clique_bruteforce, maximum_cliques
from partsat.constructions import cycle_power_witness


def test_single_vertex_is_k1():
    assert has_clique(PartiteGraph([(0,)]), 1)
    assert not has_clique(PartiteGraph([()]), 1)


def test_r_larger_than_graph_is_false():
    assert not has_clique(PartiteGraph([(0,), (1,)], [(0, 1)]), 3)


def test_c5_is_triangle_free():
    g = PartiteGraph([(i,) for i in range(5)],
                     [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert has_clique(g, 2)
    assert not has_clique(g, 3)


def test_squared_c7_has_no_k4():
    g = cycle_power_witness(2, 4, 7).graph
    assert has_clique(g, 3)
    assert not has_clique(g, 4)


def test_r_must_be_positive():
    with pytest.raises(InputError):
        has_clique(PartiteGraph([(0,)]), 0)


def test_clique_number_plain():
    g = plain_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert clique_number(g) == 3


def test_agrees_with_bruteforce_random():
    rng = random.Random(20240913)
    for _ in range(400):
        n = rng.randint(1, 12)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = plain_graph(n, edges)
        r = rng.randint(1, min(n + 1, 6))
        assert has_clique(g, r) == has_clique_bruteforce(g._masks, g._full_mask(), r)


def test_maximum_cliques_lists_all():
    g = plain_graph(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])
    number, cliques = maximum_cliques(g._masks, 4)
    assert number == 3
    assert set(cliques) == {frozenset({0, 1, 2}), frozenset({1, 2, 3})}
