import random

import pytest

from partsat import InputError, plain_graph
from partsat.families import (FamilyCollection, common_vertex_check,
                              families_generate, families_verify)


def test_base_family():
    fc = families_generate(3)
    assert fc.m == 3 and len(fc.families) == 1
    want = {frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3}),
            frozenset({1, 2, 3})}
    assert set(fc.families[0]) == want


def test_m4_first_family_has_eight_members():
    fc = families_generate(4)
    assert len(fc.families) == 2
    assert len(fc.families[0]) == 8


def test_generate_verify_small_range():
    for m in range(3, 10):
        fc = families_generate(m)
        assert len(fc.families) == m - 2
        assert families_verify(fc), m
        # membership count of the full ground set is m - 2
        ground = frozenset(range(1, m + 1))
        assert sum(1 for f in fc.families if ground in f) == m - 2


def test_m_below_three_rejected():
    with pytest.raises(InputError):
        families_generate(2)


def test_verify_catches_non_intersecting_family():
    fc = families_generate(4)
    broken = FamilyCollection(4, (fc.families[0], frozenset({frozenset()})))
    why = []
    assert not families_verify(broken, counterexample=why)
    assert why and why[0][0] == "disjoint"


def test_verify_catches_dropped_member():
    fc = families_generate(5)
    last = set(fc.families[-1])
    last.discard(frozenset({1, 2, 3, 4}))
    broken = FamilyCollection(5, fc.families[:-1] + (frozenset(last),))
    why = []
    assert not families_verify(broken, counterexample=why)
    assert why and why[0][0] == "count"


def test_common_vertex_on_complete_graph():
    k4 = plain_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert common_vertex_check(k4, 4)


def test_common_vertex_two_cliques_sharing_one():
    g = plain_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert common_vertex_check(g, 3)


def test_common_vertex_precondition_checks():
    path = plain_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        common_vertex_check(path, 3)  # clique number is 2
    big = plain_graph(6, [(0, 1)])
    with pytest.raises(InputError):
        common_vertex_check(big, 2)  # 6 > 2s-1


def test_common_vertex_random_sample():
    rng = random.Random(4242)
    done = 0
    while done < 300:
        s = rng.choice([2, 3, 4])
        n = rng.randint(max(2, s), 2 * s - 1)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < rng.choice([0.35, 0.6, 0.85])]
        g = plain_graph(n, edges)
        try:
            assert common_vertex_check(g, s)
            done += 1
        except InputError:
            continue  # clique number missed s; resample
