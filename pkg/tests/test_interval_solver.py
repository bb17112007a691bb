"""Tests for the two-pass interval greedy and its dispersed-set extraction."""

from itertools import product

import pytest
from hypothesis import given, settings

from domw import (
    Interval,
    IntervalFamily,
    backward_greedy,
    brute_gamma,
    brute_rho,
    extract_dispersed,
    forward_greedy,
    intersection_graph,
    is_w_dominating,
    order_by_right_endpoint,
    set_sum,
    solve_interval,
    verify_certificate,
)
from domw.instances_io import example_nontu_intervals, example_three_intervals
from domw.interval_solver import _backward_enum_key

from .strategies import interval_families


def family(*triples) -> IntervalFamily:
    return IntervalFamily.of(triples)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(5, 3, 1)
    with pytest.raises(ValueError):
        Interval(1, 3, 0)


def test_empty_family_solves_to_zero():
    cert = solve_interval(IntervalFamily.of([]))
    assert cert.value == 0
    assert cert.dispersed == frozenset()


def test_order_by_right_endpoint_breaks_ties_by_left_then_id():
    fam = family((1, 5, 1), (2, 5, 1), (1, 5, 1), (1, 2, 1))
    assert order_by_right_endpoint(fam) == (3, 0, 2, 1)


def test_intersection_graph_of_three_intervals():
    fam = example_three_intervals()
    g = intersection_graph(fam)
    assert g.weights == (3, 1, 2)
    assert [sorted(a) for a in g.adjacency] == [[1], [0], []]


def test_three_intervals_example_end_to_end():
    """The worked three-interval family: both passes, extraction, value 5."""
    fam = example_three_intervals()
    f, ftrace = forward_greedy(fam)
    g, gtrace = backward_greedy(fam)
    assert dict(f.items()) == {1: 3, 2: 2}
    assert dict(g.items()) == {0: 3, 2: 2}
    chosen, dec = extract_dispersed(fam, f, g, gtrace)
    assert chosen == frozenset({0, 2})
    assert dec.blocks == ((0, 1), (2,))
    assert dec.j_indices == frozenset({0, 1})
    assert dec.k_indices == frozenset()
    assert dec.representatives == {0: 0, 1: 2}
    cert = solve_interval(fam)
    assert cert.value == 5
    assert verify_certificate(intersection_graph(fam), cert).ok


def test_four_interval_family_with_a_heavy_cover():
    # three unit points covered by one long interval: a single unit of mass
    # on the long interval dominates everything
    fam = example_nontu_intervals()
    cert = solve_interval(fam)
    assert cert.value == 1
    assert dict(cert.dominating.items()) == {3: 1}
    assert cert.dispersed == frozenset({2})
    assert verify_certificate(intersection_graph(fam), cert).ok


def test_right_endpoint_tie_goes_to_the_later_interval():
    # on a right-endpoint tie the forward pass must push mass onto the
    # interval that comes later in the enumeration, otherwise the prefix
    # minimality of f fails against h = {1: 4}
    fam = family((7, 9, 4), (9, 9, 1))
    f, _ = forward_greedy(fam)
    assert dict(f.items()) == {1: 4}


def test_single_interval():
    fam = family((2, 6, 7))
    cert = solve_interval(fam)
    assert cert.value == 7
    assert dict(cert.dominating.items()) == {0: 7}
    assert cert.dispersed == frozenset({0})


def test_disjoint_intervals_pay_separately():
    fam = family((1, 2, 3), (5, 6, 4), (9, 9, 2))
    cert = solve_interval(fam)
    assert cert.value == 9
    assert cert.dispersed == frozenset({0, 1, 2})


@settings(max_examples=150, deadline=None)
@given(interval_families())
def test_both_passes_dominate(fam: IntervalFamily):
    g = intersection_graph(fam)
    f, _ = forward_greedy(fam)
    b, _ = backward_greedy(fam)
    assert is_w_dominating(g, f)
    assert is_w_dominating(g, b)
    assert f.size == b.size


@settings(max_examples=150, deadline=None)
@given(interval_families())
def test_forward_trace_sources_strictly_increase(fam: IntervalFamily):
    order = order_by_right_endpoint(fam)
    position = {v: i for i, v in enumerate(order)}
    _, trace = forward_greedy(fam)
    positions = [position[step.source] for step in trace.steps]
    assert positions == sorted(set(positions))
    assert all(step.amount > 0 for step in trace.steps)


@settings(max_examples=100, deadline=None)
@given(interval_families(max_n=6))
def test_solver_matches_oracles_and_verifies(fam: IntervalFamily):
    g = intersection_graph(fam)
    cert = solve_interval(fam)
    assert verify_certificate(g, cert).ok
    assert cert.value == brute_gamma(g)[0] == brute_rho(g)[0]


@settings(max_examples=100, deadline=None)
@given(interval_families(max_n=6))
def test_blocks_partition_the_enumeration(fam: IntervalFamily):
    """Extraction cuts the forward order into consecutive blocks whose
    J-blocks each carry exactly the weight of their representative."""
    f, _ = forward_greedy(fam)
    g, gtrace = backward_greedy(fam)
    chosen, dec = extract_dispersed(fam, f, g, gtrace)
    order = order_by_right_endpoint(fam)
    flat = [v for block in dec.blocks for v in block]
    assert flat == list(order)
    assert dec.j_indices | dec.k_indices == set(range(len(dec.blocks)))
    assert not dec.j_indices & dec.k_indices
    assert chosen == frozenset(dec.representatives[i] for i in dec.j_indices)
    for i in dec.k_indices:
        (lone,) = dec.blocks[i]
        assert f(lone) == 0 and g(lone) == 0
    for i in dec.j_indices:
        z = dec.representatives[i]
        wz = fam.intervals[z].weight
        assert set_sum(f, dec.blocks[i]) == wz
        assert set_sum(g, dec.blocks[i]) == wz


class DominationCandidate:
    """A plain vertex labeling usable wherever a domination function is."""

    def __init__(self, values):
        self.values = {v: x for v, x in enumerate(values) if x}

    def __call__(self, v: int) -> int:
        return self.values.get(v, 0)

    @property
    def support(self):
        return frozenset(self.values)


@settings(max_examples=60, deadline=None)
@given(interval_families(max_n=4, max_coord=8, max_w=3))
def test_prefix_minimality_against_all_dominating_functions(fam: IntervalFamily):
    g = intersection_graph(fam)
    f, _ = forward_greedy(fam)
    b, _ = backward_greedy(fam)
    fwd = order_by_right_endpoint(fam)
    bwd = sorted(range(fam.n), key=_backward_enum_key(fam))
    top = max(g.weights)
    for values in product(range(top + 1), repeat=fam.n):
        h = DominationCandidate(values)
        if not is_w_dominating(g, h):
            continue
        run_f = run_b = run_h_f = run_h_b = 0
        for vf, vb in zip(fwd, bwd):
            run_f += f(vf)
            run_h_f += h(vf)
            assert run_f <= run_h_f
            run_b += b(vb)
            run_h_b += h(vb)
            assert run_b <= run_h_b
