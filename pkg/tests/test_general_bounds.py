from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from nsd_forge.coloring import verify
from nsd_forge.general_bounds import (MAJORITY_PARAMS, QM_PARAMS, DeltaTrace, WindowAssignment,
                                      delta_palette, kalkowski_mnsd18, kalkowski_qmnsd12,
                                      qmnsd_delta_bound, vertex_order)
from nsd_forge.graph import GraphInputError, build_graph, components

from conftest import gen, graphs, random_nice


def test_params():
    assert QM_PARAMS.modulus == 8 and MAJORITY_PARAMS.modulus == 12
    assert QM_PARAMS.bound == 12 and MAJORITY_PARAMS.bound == 18
    assert [delta_palette(d) for d in range(1, 8)] == [4, 5, 7, 8, 10, 11, 13]


def test_vertex_order_ends_at_max_degree():
    g = gen("star", 5)
    order = vertex_order(g, components(g)[0])
    assert order[-1] == 0 and sorted(order) == list(range(6))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=14))
def test_qm12_windows(g):
    wa = WindowAssignment(0)
    c = kalkowski_qmnsd12(g, debug=True, windows=wa)
    assert verify(g, c, "quasi_majority", 12).passed
    assert all(t in (-1, 0, 1) for t in wa.toggles)
    # every non-final vertex lands in its window
    sums = [0] * g.n
    for (u, v), col in zip(g.edges, c.colors):
        sums[u] += col
        sums[v] += col
    last = set(wa.last)
    for v, w in wa.w.items():
        if v not in last:
            assert sums[v] in wa.window(v)


def test_m18_corpus():
    rng = random.Random(5)
    for _ in range(80):
        g = random_nice(rng, 22, p=rng.uniform(0.2, 0.5), min_deg=2)
        c = kalkowski_mnsd18(g, debug=True)
        assert verify(g, c, "majority", 18).passed


def test_m18_rejects_leaves():
    with pytest.raises(GraphInputError):
        kalkowski_mnsd18(gen("path", 5))
    with pytest.raises(GraphInputError):
        kalkowski_qmnsd12(build_graph(2, [(0, 1)]))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_delta_bound(g):
    trace = DeltaTrace()
    c = qmnsd_delta_bound(g, trace)
    assert verify(g, c, "quasi_majority", delta_palette(g.max_degree())).passed
    assert trace.wide_scans == 0


def test_delta_bound_on_complete_and_regular():
    for n in range(3, 9):
        g = gen("complete", n)
        assert qmnsd_delta_bound(g).max_color() <= delta_palette(n - 1)
    for seed in range(10):
        g = gen("random_regular", 14, 5, seed=seed)
        trace = DeltaTrace()
        c = qmnsd_delta_bound(g, trace)
        assert c.max_color() <= delta_palette(5) and trace.steps
