"""Tests for the shared graph model and certificate checking."""

import math

import pytest
from hypothesis import given, settings

from domw import (
    Certificate,
    DominationFunction,
    HostTree,
    UnknownVertex,
    WeightedGraph,
    build_intersection_graph,
    closed_neighborhood,
    distance,
    is_dispersed,
    is_w_dominating,
    set_sum,
    verify_certificate,
)
from domw.errors import DisconnectedSubtree, EmptySubtree
from domw.graph_core import NOT_DISPERSED, NOT_DOMINATING, VALUE_MISMATCH

from .strategies import host_trees, weighted_graphs


def path(n: int, weights=None) -> WeightedGraph:
    ws = tuple(weights) if weights is not None else (1,) * n
    return WeightedGraph.from_edges(ws, [(i, i + 1) for i in range(n - 1)])


def test_from_edges_builds_symmetric_adjacency():
    g = WeightedGraph.from_edges((1, 2, 3), [(0, 1), (1, 2)])
    assert g.n == 3
    assert [set(a) for a in g.adjacency] == [{1}, {0, 2}, {1}]
    assert g.degree(1) == 2


def test_from_edges_rejects_out_of_range_edge():
    with pytest.raises(UnknownVertex):
        WeightedGraph.from_edges((1, 2), [(0, 2)])


def test_from_edges_rejects_nonpositive_weight():
    with pytest.raises(ValueError):
        WeightedGraph.from_edges((1, 0), [])


def test_closed_neighborhood_contains_the_vertex():
    g = path(4)
    assert closed_neighborhood(g, 0) == frozenset({0, 1})
    assert closed_neighborhood(g, 1) == frozenset({0, 1, 2})


def test_distance_on_a_path():
    g = path(5)
    assert distance(g, 0, 0) == 0
    assert distance(g, 0, 4) == 4
    assert distance(g, 3, 1) == 2


def test_distance_disconnected_is_infinite():
    g = WeightedGraph.from_edges((1, 1, 1, 1), [(0, 1), (2, 3)])
    assert distance(g, 0, 3) == math.inf


def test_is_dispersed_needs_pairwise_distance_three():
    g = path(4)
    assert is_dispersed(g, {0, 3})
    assert not is_dispersed(g, {0, 2})
    assert is_dispersed(g, {1})
    assert is_dispersed(g, set())


def test_set_sum_counts_only_requested_vertices():
    f = DominationFunction({0: 2, 2: 5})
    assert set_sum(f, {0, 1}) == 2
    assert set_sum(f, {0, 2}) == 7
    assert set_sum(f, set()) == 0


def test_domination_function_drops_zero_entries():
    f = DominationFunction({0: 2, 1: 0, 3: 5})
    assert dict(f.items()) == {0: 2, 3: 5}
    assert f.size == 7
    assert f.support == frozenset({0, 3})
    assert f(1) == 0 and f(3) == 5
    assert DominationFunction.zero().size == 0


def test_domination_function_rejects_negative_values():
    with pytest.raises(ValueError):
        DominationFunction({0: -1})


def test_is_w_dominating_checks_closed_neighborhood_sums():
    g = path(3, weights=(1, 3, 1))
    assert is_w_dominating(g, DominationFunction({1: 3}))
    # vertex 1 demands 3 but sees only 2
    assert not is_w_dominating(g, DominationFunction({0: 1, 2: 1}))
    assert is_w_dominating(g, DominationFunction({0: 1, 2: 1}), u={0, 2})


def test_verify_certificate_accepts_a_matched_pair():
    g = path(4)
    cert = Certificate(DominationFunction({1: 1, 3: 1}), frozenset({0, 3}), 2)
    check = verify_certificate(g, cert)
    assert check.ok and check.reason is None


def test_verify_certificate_flags_each_failure_mode():
    g = path(4)
    bad_dom = Certificate(DominationFunction({1: 1}), frozenset({0}), 1)
    assert verify_certificate(g, bad_dom).reason == NOT_DOMINATING
    bad_disp = Certificate(DominationFunction({1: 1, 3: 1}), frozenset({0, 2}), 2)
    assert verify_certificate(g, bad_disp).reason == NOT_DISPERSED
    bad_value = Certificate(DominationFunction({1: 1, 3: 1}), frozenset({0}), 2)
    assert verify_certificate(g, bad_value).reason == VALUE_MISMATCH


def test_host_tree_validation():
    with pytest.raises(ValueError):
        HostTree(3, ((0, 1), (1, 2), (2, 0)))
    with pytest.raises(ValueError):
        HostTree(3, ((0, 1), (0, 1)))
    t = HostTree(3, ((0, 1), (1, 2)))
    assert t.adjacency() == [{1}, {0, 2}, {1}]


def test_build_intersection_graph_small_example():
    host = HostTree(4, ((0, 1), (1, 2), (1, 3)))
    g = build_intersection_graph(
        host, [frozenset({0, 1}), frozenset({1, 2}), frozenset({3})], (2, 1, 4)
    )
    assert g.weights == (2, 1, 4)
    assert [sorted(a) for a in g.adjacency] == [[1], [0], []]


def test_build_intersection_graph_rejects_bad_subtrees():
    host = HostTree(4, ((0, 1), (1, 2), (1, 3)))
    with pytest.raises(EmptySubtree):
        build_intersection_graph(host, [frozenset()], (1,))
    with pytest.raises(DisconnectedSubtree):
        build_intersection_graph(host, [frozenset({0, 2})], (1,))
    with pytest.raises(UnknownVertex):
        build_intersection_graph(host, [frozenset({0, 9})], (1,))


@settings(max_examples=100, deadline=None)
@given(weighted_graphs())
def test_full_weight_function_always_dominates(g: WeightedGraph):
    f = DominationFunction({v: g.weights[v] for v in g.vertices})
    assert is_w_dominating(g, f)


@settings(max_examples=100, deadline=None)
@given(weighted_graphs())
def test_dispersed_definition_matches_pairwise_distances(g: WeightedGraph):
    members = [v for v in g.vertices if v % 2 == 0]
    expect = all(
        distance(g, u, v) >= 3 for u in members for v in members if u < v
    )
    assert is_dispersed(g, members) == expect


@settings(max_examples=100, deadline=None)
@given(host_trees())
def test_host_tree_adjacency_is_symmetric(t: HostTree):
    adj = t.adjacency()
    for u in range(t.n):
        for v in adj[u]:
            assert u in adj[v]
