"""Smoke tests for the circalt extension module."""

import circalt
import pytest


def test_graph_roundtrip():
    g = circalt.cycle(5)
    assert g.n == 5
    assert g.edge_count() == 5
    assert circalt.parse_graph6(circalt.encode_graph6(g)) == g


def test_graph6_anchors():
    assert circalt.parse_graph6("@").n == 1
    k2 = circalt.parse_graph6("A_")
    assert k2.adjacent(0, 1)
    with pytest.raises(Exception):
        circalt.parse_graph6("!!!")


def test_altitude_anchors():
    assert circalt.altitude(circalt.parse_graph6("@"))["value"] == 1
    assert circalt.altitude(circalt.complete(2))["value"] == 2
    assert circalt.altitude(circalt.complete(4))["value"] == 4
    assert circalt.altitude(circalt.cycle(5))["value"] == 2


def test_altitude_result_shape():
    g = circalt.Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])  # triangle + pendant
    r = circalt.altitude(g)
    assert r["value"] == 3
    assert r["exact"] is True
    assert sorted(r["witness"]) == [0, 1, 2, 3]
    assert {v for _, v in r["per_block"]} == {2, 3}
    length = circalt.max_monotonic_length(g, r["witness"])
    assert length == r["value"]


def test_kernel_and_enumeration_agree():
    g = circalt.cycle(4)
    assert circalt.max_monotonic_cycle(g, [0, 1, 2, 3])[0] == 4
    assert circalt.max_monotonic_cycle(g, [0, 2, 1, 3])[0] == 2
    cycles = circalt.enumerate_monotonic_cycles(g, [0, 1, 2, 3], 4)
    assert cycles == [(4, [0, 1, 2, 3])]


def test_structure_helpers():
    g = circalt.Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    b = circalt.blocks(g)
    assert b["cut_vertices"] == [2]
    assert len(b["blocks"]) == 2
    assert circalt.girth(g) == 3
    assert circalt.girth(circalt.path(4)) is None
    assert circalt.components(circalt.Graph(3)) == [[0], [1], [2]]


def test_homcore():
    assert circalt.clique_number(circalt.complete(5)) == 5
    assert circalt.hom_exists(circalt.cycle(6), circalt.complete(2)) is not None
    assert circalt.hom_exists(circalt.complete(3), circalt.complete(2)) is None
    core, vertices = circalt.core_of(circalt.complete_bipartite(2, 3))
    assert core.n == 2 and core.edge_count() == 1
    assert circalt.circular_chromatic(circalt.cycle(5)) == (5, 2)
    assert circalt.isomorphic(
        circalt.cartesian_product(circalt.complete(2), circalt.complete(2)),
        circalt.cycle(4),
    )


def test_catalog_and_random_streams():
    assert len(circalt.graph_catalog(5)) == 34
    a = circalt.random_graphs(6, 0.5, 5, 9)
    b = circalt.random_graphs(6, 0.5, 5, 9)
    assert [circalt.encode_graph6(g) for g in a] == [circalt.encode_graph6(g) for g in b]


def test_budget_flagging():
    g = circalt.cycle(9)
    r = circalt.altitude_bb(g, budget=5)
    assert r["exact"] is False
    assert r["lower_bound"] <= 2 <= r["value"]
