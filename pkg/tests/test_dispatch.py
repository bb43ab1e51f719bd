from __future__ import annotations

import random

import pytest

from nsd_forge.coloring import verify
from nsd_forge.dispatch import color_graph, match_family
from nsd_forge.graph import GraphInputError, build_graph

from conftest import gen


def relabel(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@pytest.mark.parametrize("spec, family, k", [
    (("complete", 6), "complete", 3),
    (("cycle", 7), "cycle", 4),
    (("path", 8), "path", 3),
    (("complete_bipartite", 3, 3), "complete_bipartite", 3),
    (("complete_bipartite", 2, 5), "complete_bipartite", 2),
])
def test_family_match_survives_relabeling(spec, family, k):
    for seed in range(5):
        g = relabel(gen(*spec), seed)
        assert match_family(g)[0] == family
        out = color_graph(g, "quasi_majority", "family")
        assert out.k == k and out.family == family
        assert verify(g, out.coloring, "quasi_majority", k).passed


def test_majority_family_uses_majority_constructions():
    g = relabel(gen("complete_bipartite", 3, 3), 1)
    out = color_graph(g, "majority", "family")
    assert out.k == 5 and verify(g, out.coloring, "majority", 5).passed
    with pytest.raises(GraphInputError):
        color_graph(gen("path", 5), "majority", "family")


def test_auto_routes():
    assert color_graph(gen("complete", 5)).strategy == "family"
    assert color_graph(gen("random_bipartite", 6, 6, seed=3)).strategy == "bipartite6"
    assert color_graph(gen("random_regular", 10, 3, seed=1)).strategy == "maxdeg4"
    # delta bound is smaller than 12 up to degree 6
    assert color_graph(gen("random_regular", 12, 5, seed=1)).strategy == "delta-bound"
    assert color_graph(gen("random_regular", 14, 8, seed=1)).strategy == "kalkowski"
    assert color_graph(gen("random_regular", 10, 4, seed=2), "majority").strategy == "kalkowski"


def test_trees_by_family():
    g = gen("random_tree", 15, seed=2)
    out = color_graph(g, strategy="family")
    assert out.family == "tree" and out.k in (2, 3)


def test_exact_strategy():
    out = color_graph(gen("cycle", 5), strategy="exact")
    assert out.k == 5


def test_strategy_mode_compatibility():
    for s in ("bipartite6", "maxdeg4", "delta-bound"):
        with pytest.raises(GraphInputError):
            color_graph(gen("cycle", 6), "majority", s)
    with pytest.raises(GraphInputError):
        color_graph(gen("cycle", 6), strategy="bogus")
    with pytest.raises(GraphInputError):
        color_graph(build_graph(2, [(0, 1)]))
    with pytest.raises(GraphInputError):
        color_graph(gen("complete", 6), strategy="maxdeg4")
