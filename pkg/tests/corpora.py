"""Seeded graph corpora shared by the property tests and the acceptance run."""

from __future__ import annotations

import random

from nsd_forge.graph import Graph, build_graph, is_nice


def _nice_gnp(rng: random.Random, n_max: int, min_deg: int = 0) -> Graph:
    while True:
        n = rng.randint(3, n_max)
        p = rng.uniform(1.5 / n, min(0.9, 8 / n))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if not g.m or not is_nice(g):
            continue
        if min_deg and min(g.degree(v) for v in range(n)) < min_deg:
            continue
        return g


def _capped(rng: random.Random, n_max: int, cap: int) -> Graph:
    while True:
        n = rng.randint(3, n_max)
        deg = [0] * n
        edges = set()
        for _ in range(rng.randint(n, 3 * n)):
            u, v = rng.sample(range(n), 2)
            e = (min(u, v), max(u, v))
            if e not in edges and deg[u] < cap and deg[v] < cap:
                edges.add(e)
                deg[u] += 1
                deg[v] += 1
        g = build_graph(n, edges)
        if g.m and is_nice(g):
            return g


def _bipartite(rng: random.Random, side_max: int) -> Graph:
    while True:
        a, b = rng.randint(1, side_max), rng.randint(1, side_max)
        p = rng.uniform(0.15, 0.8)
        edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
        g = build_graph(a + b, edges)
        if g.m and is_nice(g):
            return g


def qm12_corpus(count: int = 200, seed: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    return [_nice_gnp(rng, 40) for _ in range(count)]


def m18_corpus(count: int = 100, seed: int = 2) -> list[Graph]:
    rng = random.Random(seed)
    return [_nice_gnp(rng, 30, min_deg=2) for _ in range(count)]


def maxdeg4_corpus(count: int = 100, seed: int = 3) -> list[Graph]:
    rng = random.Random(seed)
    return [_capped(rng, 30, 4) for _ in range(count)]


def bipartite_corpus(count: int = 100, seed: int = 4) -> list[Graph]:
    rng = random.Random(seed)
    return [_bipartite(rng, 15) for _ in range(count)]
