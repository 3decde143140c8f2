import pytest

from partsat import (InputError, Transversal, WitnessError, edges_between,
                     is_admissible_nonedge, is_partite_saturated,
                     nonedge_is_saturated, verify_alpha_witness,
                     verify_beta_witness)
from partsat.constructions import (AlphaWitness, BetaWitness, alpha_base,
                                   alpha_base_gadget, alpha_blowup,
                                   alpha_from_beta2, best_beta2_witness,
                                   beta2_combine, beta2_small_witness,
                                   beta_empty_base, beta_inductive_step,
                                   cycle_power_witness,
                                   disjoint_cliques_witness, sat_source,
                                   sat_witness)
from partsat.graph import PartiteGraph

# frozen edge counts of the deterministic sat-witness constructions
SAT_4_4_30_EDGES = 521
SAT_6_4_50_EDGES = 1185


def test_beta_empty_base():
    w = beta_empty_base(2, 3)
    assert w.size == 3 and w.graph.n_edges == 0
    assert all(len(p) == 1 for p in w.graph.parts)
    assert beta_empty_base(1, 2).size == 2
    with pytest.raises(InputError):
        beta_empty_base(2, 2)


def test_cycle_power_witness_c5():
    w = cycle_power_witness(2, 3, 5)
    assert w.size == 5
    assert w.graph.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_cycle_power_witness_c7_squared():
    w = cycle_power_witness(2, 4, 7)
    assert w.size == 7 and w.graph.n_edges == 14
    assert all(w.graph.degree(v) == 4 for v in w.graph.vertices())


def test_cycle_power_zeroth_power_is_empty():
    w = cycle_power_witness(2, 2, 3)
    assert w.size == 3 and w.graph.n_edges == 0


def test_cycle_power_extra_parts_stay_empty():
    w = cycle_power_witness(2, 3, 8)
    assert w.graph.part_count == 8
    assert sum(1 for p in w.graph.parts if not p) == 3


def test_cycle_power_range_errors():
    with pytest.raises(InputError):
        cycle_power_witness(1, 3, 5)
    with pytest.raises(InputError):
        cycle_power_witness(2, 3, 4)


def test_disjoint_cliques_witness():
    w = disjoint_cliques_witness(1, 3, 4)
    assert w.size == 4
    assert w.graph.edges() == [(0, 1), (2, 3)]
    assert disjoint_cliques_witness(2, 2, 3).graph.n_edges == 0
    w = disjoint_cliques_witness(1, 4, 6)
    assert w.size == 6 and w.graph.n_edges == 6
    with pytest.raises(InputError):
        disjoint_cliques_witness(1, 3, 3)


def test_beta_inductive_step_sizes():
    s = beta_inductive_step(beta_empty_base(2, 3))
    assert (s.i, s.k, s.r, s.size) == (2, 4, 3, 6)
    s2 = beta_inductive_step(s)
    assert (s2.i, s2.k, s2.r, s2.size) == (2, 5, 4, 9)
    one = beta_inductive_step(beta_empty_base(1, 2))
    assert (one.i, one.k, one.r, one.size) == (1, 3, 3, 4)


def test_beta_inductive_step_rejects_bad_witness():
    # a triangle is not 2-clique-free, so it cannot certify (1, 3, 2)
    tri = PartiteGraph([(0,), (1,), (2,)], [(0, 1), (0, 2), (1, 2)])
    fake = BetaWitness(tri, 1, 3, 2, {"name": "bogus"})
    with pytest.raises(WitnessError):
        beta_inductive_step(fake)


def test_beta2_small_witness_sizes():
    assert beta2_small_witness(4, 3).size == 6
    assert beta2_small_witness(6, 4).size == 8
    assert beta2_small_witness(5, 3).size == 5  # delegated to the cycle power
    for r in (3, 4, 5):
        for k in range(r + 1, 2 * r):
            w = beta2_small_witness(k, r)
            assert w.size == 4 * r - k - 2
    with pytest.raises(InputError):
        beta2_small_witness(7, 3)


def test_beta2_combine_size_law_and_triangle_free_core():
    g1 = best_beta2_witness(3, 2)
    g2 = best_beta2_witness(3, 2)
    w = beta2_combine(g1, g2)
    assert (w.i, w.k, w.r) == (2, 6, 5)
    assert w.size == g1.size + g2.size + 6 == 12
    # the six merge vertices induce a triangle-free graph
    merge = sorted(w.graph.vertices())[-6:]
    sub = [v for v in merge]
    for a in sub:
        for b in sub:
            for c in sub:
                if a < b < c:
                    assert not (w.graph.adjacent(a, b) and w.graph.adjacent(a, c)
                                and w.graph.adjacent(b, c))


def test_beta2_combine_mixed_sizes():
    w = beta2_combine(best_beta2_witness(3, 2), beta2_small_witness(4, 3))
    assert (w.i, w.k, w.r, w.size) == (2, 7, 6, 15)


def test_beta2_combine_rejects_wrong_parameters():
    # (2, 5, 3) has r != k - 1, so it is not a combiner input
    with pytest.raises(InputError):
        beta2_combine(cycle_power_witness(2, 3, 5), beta2_small_witness(4, 3))


def test_alpha_from_beta2_values():
    w = alpha_from_beta2(beta2_small_witness(4, 3), 4)
    assert w.value == 18 and w.verify() == 18
    w = alpha_from_beta2(cycle_power_witness(2, 4, 7), 5)
    assert w.value == 42
    w = alpha_from_beta2(beta2_small_witness(5, 4), 5)
    assert w.value == 36


def test_alpha_gadget_pre_closure_x_side_is_saturated():
    g, x = alpha_base_gadget(4, 2)
    xset = set(x.vertices)
    for u in x.vertices:
        for v in g.vertices():
            if u != v and g.part_of(u) != g.part_of(v) and not g.adjacent(u, v):
                assert nonedge_is_saturated(g, u, v, 4), (u, v)
    # the corrected admissibility example: x_0 and the y at the opposite
    # residue class are in different parts and non-adjacent
    k = g.part_count
    assert is_admissible_nonedge(g, x.vertices[0], k + k // 2)
    # same-part pair is never admissible
    assert not is_admissible_nonedge(g, x.vertices[0], k + 0)


def test_alpha_base_values_and_degree_law():
    for (r, p, want_k) in [(4, 2, 6), (5, 3, 9), (6, 2, 10)]:
        w = alpha_base(r, p)
        assert w.graph.part_count == want_k
        assert w.value == want_k * (2 * r - 4)
        assert all(w.graph.degree(v) == 2 * r - 4 for v in w.transversal.vertices)


def test_alpha_base_closure_leaves_transversal_untouched():
    g0, x = alpha_base_gadget(4, 2)
    w = alpha_base(4, 2)
    for v in x.vertices:
        assert set(w.graph.neighbors(v)) == set(g0.neighbors(v))


def test_alpha_base_rejects_bad_p():
    with pytest.raises(InputError):
        alpha_base(5, 2)
    with pytest.raises(InputError):
        alpha_base(4, 4)


def test_alpha_blowup():
    base = alpha_base(4, 2)
    w = alpha_blowup(base, 8)
    assert w.value == 32 and w.graph.part_count == 8
    w10 = alpha_blowup(alpha_base(5, 3), 10)
    assert w10.value == 60
    with pytest.raises(InputError):
        alpha_blowup(base, 6)


def test_sat_source_prefers_cheaper_host():
    assert sat_source(4, 4).value == 18
    assert sat_source(6, 4).value == 24
    assert sat_source(5, 3).value == 12  # (k-1) * 3


def test_sat_witness_4_4_30():
    g = sat_witness(4, 4, 30)
    assert g.n_vertices == 120
    assert all(len(p) == 30 for p in g.parts)
    assert g.n_edges <= 18 * 30 + 18 * 18
    assert g.n_edges == SAT_4_4_30_EDGES
    assert is_partite_saturated(g, 4)


def test_sat_witness_rejects_small_n():
    with pytest.raises(InputError):
        sat_witness(4, 4, 18)


def test_sat_witness_unsupported_parameters():
    with pytest.raises(InputError):
        sat_witness(3, 4, 100)  # k < r


def test_alpha_witness_value_mismatch_detected():
    w = alpha_base(4, 2)
    broken = AlphaWitness(w.graph, w.transversal, w.r, w.value + 1, w.provenance)
    with pytest.raises(WitnessError):
        broken.verify()
