"""QM-NSD colorings with at most 7 colors for nice graphs of maximum degree 4.

Induction on edges: take a degree-4 vertex ``v``.  If two neighbors are
adjacent, drop the two edges from ``v`` to them; otherwise drop ``v``.
Color the rest recursively, then pick colors for the dropped edges from
their admissible sets by exhaustive scan.  Components of maximum degree
at most 3 are solved by the exact search with 7 colors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .coloring import EdgeColoring, cap, verify
from .exact import SearchBudget, find_coloring
from .graph import Graph, GraphInputError, build_graph, components, is_nice

__all__ = [
    "K",
    "ScanExhausted",
    "Trace",
    "admissible_colors",
    "select_case1_pair",
    "select_case2_tuple",
    "qmnsd_maxdeg4",
    "CASE1_BOUND",
    "CASE2_BOUND",
]

K = 7
# most colors a dropped edge can lose, by the far endpoint's remaining degree
CASE1_BOUND = {1: 1, 2: 1, 3: 3}
CASE2_BOUND = {0: 0, 1: 2, 2: 2, 3: 4}


class ScanExhausted(RuntimeError):
    """No admissible choice satisfied the constraints; should never happen."""


@dataclass
class Trace:
    # (case, vertex count of the component, admissible set sizes)
    steps: list[tuple[int, int, tuple[int, ...]]] = field(default_factory=list)
    base_calls: int = 0


def admissible_colors(
    g: Graph, colors: Sequence[int], sums: Sequence[int], w: int, skip: Sequence[int] = ()
) -> tuple[set[int], int]:
    """Colors for a new edge at ``w`` keeping QM at ``w`` and ``w`` apart
    from its current neighbors (except those in ``skip``).

    ``g``, ``colors`` and ``sums`` describe the graph before the edge is
    added.  Returns the admissible set and the number of forbidden colors.
    """
    bound = cap(g.degree(w) + 1, "quasi_majority")
    tally: dict[int, int] = {}
    for i in g.incident(w):
        tally[colors[i]] = tally.get(colors[i], 0) + 1
    forbidden = {c for c, t in tally.items() if t + 1 > bound}
    for u in g.neighbors(w):
        if u not in skip:
            forbidden.add(sums[u] - sums[w])
    forbidden &= set(range(1, K + 1))
    return set(range(1, K + 1)) - forbidden, len(forbidden)


def select_case1_pair(F1, F2, sigma_v: int, sigma: Sequence[int]) -> tuple[int, int]:
    """Colors for ``v v1`` and ``v v2``; ``sigma`` holds the current sums of v1..v4."""
    s1, s2, s3, s4 = sigma
    for x1 in sorted(F1):
        for x2 in sorted(F2):
            if (x1 != x2
                    and x1 + x2 + sigma_v not in (s3, s4)
                    and x2 + sigma_v != s1
                    and x1 + sigma_v != s2
                    and x1 + s1 != x2 + s2):
                return x1, x2
    raise ScanExhausted(f"no admissible pair in {sorted(F1)} x {sorted(F2)}")


def select_case2_tuple(F: Sequence, sigma: Sequence[int]) -> tuple[int, int, int, int]:
    """Colors for the four edges at ``v``; ``sigma`` holds the sums of v1..v4."""
    for xs in itertools.product(*(sorted(f) for f in F)):
        total = sum(xs)
        if xs[0] != xs[1] and xs[2] != xs[3] and all(total - xs[i] != sigma[i] for i in range(4)):
            return xs
    raise ScanExhausted(f"no admissible tuple in {[sorted(f) for f in F]}")


def _sums(g: Graph, colors: Sequence[int]) -> list[int]:
    s = [0] * g.n
    for (u, v), c in zip(g.edges, colors):
        s[u] += c
        s[v] += c
    return s


def _lift(g: Graph, sub: Graph, sub_colors: Sequence[int]) -> list[int | None]:
    """Map colors of a spanning subgraph back onto ``g``'s edge positions."""
    out: list[int | None] = [None] * g.m
    for e, c in zip(sub.edges, sub_colors):
        out[g.eid(*e)] = c
    return out


def _bfs_order(h: Graph) -> list[int]:
    start = max(range(h.n), key=lambda v: (h.degree(v), -v))
    seen = {start}
    order = [start]
    for u in order:
        for w in h.neighbors(u):
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def _solve(g: Graph, trace: Trace, budget: SearchBudget) -> list[int]:
    colors: list[int] = [0] * g.m
    for comp in components(g):
        if len(comp) < 2:
            continue
        h, order = g.induced(comp)
        sub = _solve_connected(h, trace, budget)
        for (u, v), c in zip(h.edges, sub):
            colors[g.eid(order[u], order[v])] = c
    return colors


def _solve_connected(h: Graph, trace: Trace, budget: SearchBudget) -> list[int]:
    if h.m == 1:
        return [1]
    if h.max_degree() <= 3:
        trace.base_calls += 1
        # BFS labels let vertices complete early in the edge order
        order = _bfs_order(h)
        pos = {v: i for i, v in enumerate(order)}
        relabeled = build_graph(h.n, [(pos[u], pos[v]) for u, v in h.edges])
        res = find_coloring(relabeled, "quasi_majority", K, budget, workers=1)
        if not res.found:
            raise ScanExhausted(f"base search ended with status {res.status}")
        return [res.coloring.colors[relabeled.eid(pos[u], pos[v])] for u, v in h.edges]
    v = min(x for x in range(h.n) if h.degree(x) == 4)
    nb = list(h.neighbors(v))
    pair = next(((a, b) for a, b in itertools.combinations(nb, 2) if h.has_edge(a, b)), None)
    if pair is not None:
        v1, v2 = pair
        v3, v4 = [x for x in nb if x not in pair]
        rest = h.without_edges([(v, v1), (v, v2)])
        sub = _solve(rest, trace, budget)
        sums = _sums(rest, sub)
        F1, f1 = admissible_colors(rest, sub, sums, v1, skip=(v2,))
        F2, f2 = admissible_colors(rest, sub, sums, v2, skip=(v1,))
        for w, f in ((v1, f1), (v2, f2)):
            assert f <= CASE1_BOUND[rest.degree(w)], (w, f)
        assert len(F1) >= 4 and len(F2) >= 4
        trace.steps.append((1, h.n, (len(F1), len(F2))))
        x1, x2 = select_case1_pair(F1, F2, sums[v], [sums[x] for x in (v1, v2, v3, v4)])
        colors = _lift(h, rest, sub)
        colors[h.eid(v, v1)] = x1
        colors[h.eid(v, v2)] = x2
        return colors
    rest = h.without_edges([(v, x) for x in nb])
    sub = _solve(rest, trace, budget)
    sums = _sums(rest, sub)
    F = []
    for w in nb:
        Fw, fw = admissible_colors(rest, sub, sums, w)
        assert fw <= CASE2_BOUND[rest.degree(w)], (w, fw)
        F.append(Fw)
    assert all(len(f) >= 3 for f in F)
    trace.steps.append((2, h.n, tuple(len(f) for f in F)))
    xs = select_case2_tuple(F, [sums[w] for w in nb])
    colors = _lift(h, rest, sub)
    for w, x in zip(nb, xs):
        colors[h.eid(v, w)] = x
    return colors


def qmnsd_maxdeg4(g: Graph, trace: Trace | None = None, budget: SearchBudget | None = None) -> EdgeColoring:
    if not is_nice(g):
        raise GraphInputError("graph has a K2 component")
    if g.max_degree() > 4:
        raise GraphInputError(f"maximum degree is {g.max_degree()}, expected at most 4")
    trace = trace if trace is not None else Trace()
    budget = budget or SearchBudget(K, time_limit=60.0)
    c = EdgeColoring(g, _solve(g, trace, budget), K)
    report = verify(g, c, "quasi_majority", K)
    if not report.passed:
        raise AssertionError(f"max-degree-4 coloring failed verification: {report.witnesses[:3]}")
    return c
