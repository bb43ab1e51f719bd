from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings

import nsd_forge.exact as exact
from nsd_forge.coloring import EdgeColoring, vertex_sums, verify
from nsd_forge.exact import SearchBudget, complete_partial, find_coloring, min_index
from nsd_forge.graph import GraphInputError, build_graph

from conftest import gen, graphs, naive_index

QM_TABLE = [
    (("path", 3), 2), (("path", 4), 3), (("path", 7), 3),
    (("cycle", 3), 3), (("cycle", 4), 4), (("cycle", 5), 5), (("cycle", 6), 3), (("cycle", 7), 4),
    (("complete", 3), 3), (("complete", 4), 3), (("complete", 5), 3),
    (("complete_bipartite", 2, 2), 4), (("complete_bipartite", 2, 3), 2), (("complete_bipartite", 3, 3), 3),
]


def test_kernel_selected():
    assert exact.KERNEL in ("cython", "python")
    assert (exact.KERNEL == "cython") == (exact._native is not None)


@pytest.mark.parametrize("spec, k", QM_TABLE)
def test_small_qm_indices(kernel, spec, k):
    res = min_index(gen(*spec), "quasi_majority")
    assert res.status == "exact" and res.k == k
    assert res.per_k[k] == "found" and all(res.per_k[j] == "none" for j in range(1, k))


@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(g=graphs(max_n=7, max_m=7))
def test_kernels_match_brute_force(kernel, g):
    for mode in ("quasi_majority", "majority"):
        if mode == "majority" and any(g.degree(v) == 1 for v in range(g.n)):
            continue
        res = min_index(g, mode, SearchBudget(max_k=8), workers=1)
        assert res.status == "exact"
        assert res.k == naive_index(g, mode, max_k=8)


def test_isolated_vertices_allowed_in_majority():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2)])
    assert min_index(g, "majority").k == 3


def test_rejects_bad_instances():
    with pytest.raises(GraphInputError):
        min_index(build_graph(3, [(0, 1)]))
    with pytest.raises(GraphInputError):
        min_index(gen("path", 4), "majority")


def test_budget_gives_unknown(kernel):
    res = min_index(gen("complete", 6), "quasi_majority", SearchBudget(node_limit=5))
    assert res.status == "unknown" and res.k is None and res.witness is None
    res = find_coloring(gen("complete_bipartite", 5, 5), "majority", 3,
                        SearchBudget(time_limit=0.01), workers=1)
    assert res.status == "unknown"


def test_none_status():
    res = find_coloring(gen("cycle", 5), "quasi_majority", 4, workers=1)
    assert res.status == "none" and not res.found


def test_parallel_split_agrees(monkeypatch):
    g = gen("complete_bipartite", 3, 4)
    seq = find_coloring(g, "quasi_majority", 3, workers=1)
    par = find_coloring(g, "quasi_majority", 3, workers=2)
    assert seq.found and par.found
    assert seq.coloring.colors[0] == par.coloring.colors[0]


def test_complete_partial_keeps_frozen_edges(kernel):
    g = gen("cycle", 8)
    partial = EdgeColoring(g, [3, 1] + [None] * 6)
    res = complete_partial(g, partial, k=4)
    assert res.found and res.coloring.colors[:2] == [3, 1]
    assert verify(g, res.coloring, "quasi_majority", 4).passed


def test_complete_partial_forbidden_sums(kernel):
    g = gen("path", 4)
    free = complete_partial(g, EdgeColoring(g, [None] * 3), k=3)
    s = vertex_sums(g, free.coloring)
    res = complete_partial(g, EdgeColoring(g, [None] * 3), k=3, forbidden={1: [s[1]]})
    assert res.found and vertex_sums(g, res.coloring)[1] != s[1]
    with pytest.raises(GraphInputError):
        complete_partial(g, EdgeColoring(g, [None] * 3), frozen=[0], k=3)


@pytest.mark.parametrize("spec, k", [(("complete", 4), 5), (("complete", 5), 3), (("complete", 6), 4),
                                     (("complete_bipartite", 3, 3), 5), (("complete_bipartite", 2, 2), 4)])
def test_small_majority_indices(kernel, spec, k):
    res = min_index(gen(*spec), "majority", SearchBudget(time_limit=60))
    assert res.status == "exact" and res.k == k


def test_fallback_when_extension_missing():
    import subprocess
    import sys
    code = (
        "import sys\n"
        "class Block:\n"
        "    def find_spec(self, name, path=None, target=None):\n"
        "        if name == 'nsd_forge.exact._kernel':\n"
        "            raise ImportError('blocked')\n"
        "sys.meta_path.insert(0, Block())\n"
        "import nsd_forge.exact as ex\n"
        "from nsd_forge.graph import FamilySpec, generate\n"
        "print(ex.KERNEL, ex.min_index(generate(FamilySpec('cycle', 5))).k)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "5"]
