from __future__ import annotations

import itertools
import sys
import random

import pytest
from hypothesis import strategies as st

import nsd_forge.exact as exact
from nsd_forge.exact import _kernel_py
from nsd_forge.graph import FamilySpec, Graph, build_graph, generate, is_nice


def naive_ok(g: Graph, colors, mode: str) -> bool:
    """Independent check: caps per color and distinct sums on every edge."""
    sums = [0] * g.n
    tally: dict[tuple[int, int], int] = {}
    for (u, v), c in zip(g.edges, colors):
        sums[u] += c
        sums[v] += c
        tally[u, c] = tally.get((u, c), 0) + 1
        tally[v, c] = tally.get((v, c), 0) + 1
    for (v, _), t in tally.items():
        d = g.degree(v)
        bound = (d + 1) // 2 if mode == "quasi_majority" else d // 2
        if t > bound:
            return False
    return all(sums[u] != sums[v] for u, v in g.edges)


def naive_index(g: Graph, mode: str, max_k: int = 6) -> int | None:
    for k in range(1, max_k + 1):
        for colors in itertools.product(range(1, k + 1), repeat=g.m):
            if naive_ok(g, colors, mode):
                return k
    return None


@pytest.fixture(params=["native", "python"])
def kernel(request, monkeypatch):
    if request.param == "native":
        if exact._native is None:
            pytest.skip("compiled kernel not built")
        monkeypatch.setattr(exact, "_kernel", exact._native)
    else:
        monkeypatch.setattr(exact, "_kernel", _kernel_py)
    return request.param


def random_nice(rng: random.Random, n_max: int, p: float = 0.3, min_deg: int = 0) -> Graph:
    while True:
        n = rng.randint(3, n_max)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if g.m and is_nice(g) and (min_deg == 0 or min(g.degree(v) for v in range(n)) >= min_deg):
            return g


@st.composite
def graphs(draw, max_n: int = 9, max_m: int | None = None, nice: bool = True):
    n = draw(st.integers(3, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1,
                           max_size=max_m or len(pairs)))
    g = build_graph(n, chosen)
    if nice:
        from hypothesis import assume
        assume(is_nice(g))
    return g


def gen(family: str, n: int, m: int = 0, seed: int = 0) -> Graph:
    return generate(FamilySpec(family, n, m, seed=seed))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
