import pytest

from partsat import InputError, PartiteGraph, Transversal
from partsat.constructions import (alpha_base, beta2_small_witness,
                                   cycle_power_witness, sat_witness)
from partsat.serialize import (graph_from_json, graph_hash, graph_to_dot,
                               graph_to_json)

C5_GOLDEN = """{
  "k": 3,
  "parts": [
    [
      0
    ],
    [
      1
    ],
    [
      2
    ]
  ],
  "edges": [
    [
      0,
      1
    ],
    [
      1,
      2
    ]
  ]
}
"""


def test_golden_json_bytes():
    g = PartiteGraph([(0,), (1,), (2,)], [(1, 2), (0, 1)])
    assert graph_to_json(g) == C5_GOLDEN


def test_roundtrip_generators():
    for g, x in [
        (cycle_power_witness(2, 3, 5).graph, None),
        (beta2_small_witness(4, 3).graph, None),
        (alpha_base(4, 2).graph, alpha_base(4, 2).transversal),
        (sat_witness(4, 4, 30), None),
    ]:
        text = graph_to_json(g, x)
        g2, x2 = graph_from_json(text)
        assert g2 == g
        if x is not None:
            assert x2.vertices == x.vertices
        assert graph_to_json(g2, x2) == text


def test_hash_stable_and_structure_sensitive():
    a = PartiteGraph([(0,), (1,)], [(0, 1)])
    b = PartiteGraph([(0,), (1,)], [(0, 1)])
    c = PartiteGraph([(0,), (1,)])
    assert graph_hash(a) == graph_hash(b)
    assert graph_hash(a) != graph_hash(c)


def test_from_json_validates():
    with pytest.raises(InputError):
        graph_from_json("not json")
    with pytest.raises(InputError):
        graph_from_json('{"k": 2, "parts": [[0]], "edges": []}')
    with pytest.raises(InputError):
        graph_from_json('{"k": 1, "parts": [[0, 1]], "edges": [[0, 1]]}')
    with pytest.raises(InputError):
        graph_from_json('{"k": 2, "parts": [[0], [1]], "edges": [], "X": [0, 0]}')


def test_dot_export_clusters_and_edges():
    w = alpha_base(4, 2)
    dot = graph_to_dot(w.graph, w.transversal)
    assert dot.count("subgraph cluster_") == 6
    assert "0 -- " in dot
    assert "[shape=box]" in dot  # transversal vertices are marked
