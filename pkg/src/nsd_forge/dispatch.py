"""Strategy selection: route a graph to the constructor that fits it."""

from __future__ import annotations

from dataclasses import dataclass

from .bipartite import qmnsd_six
from .coloring import EdgeColoring, verify
from .exact import SearchBudget, check_instance, min_index
from .families import color_complete, color_complete_bipartite, color_cycle, color_path, color_tree
from .general_bounds import delta_palette, kalkowski_mnsd18, kalkowski_qmnsd12, qmnsd_delta_bound
from .graph import Graph, GraphInputError, bipartition, components
from .majority import mnsd_complete, mnsd_complete_bipartite
from .maxdeg4 import qmnsd_maxdeg4

__all__ = ["STRATEGIES", "QM_ONLY", "Outcome", "match_family", "color_graph"]

STRATEGIES = ("auto", "family", "bipartite6", "maxdeg4", "kalkowski", "delta-bound", "exact")
QM_ONLY = {"bipartite6", "maxdeg4", "delta-bound"}


@dataclass
class Outcome:
    strategy: str
    k: int  # palette bound claimed by the strategy
    coloring: EdgeColoring
    family: str | None = None


def _walk(g: Graph, start: int) -> list[int]:
    order = [start]
    prev = -1
    while True:
        nxt = [w for w in g.neighbors(order[-1]) if w != prev and w != order[0]]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


def match_family(g: Graph) -> tuple[str, tuple[int, ...], list[int]] | None:
    """Recognize a connected family member.

    Returns ``(family, params, phi)`` where ``phi`` maps the family's
    canonical labels to vertices of ``g``; trees return an identity map.
    """
    if g.n < 3 or len(components(g)) != 1:
        return None
    n, m = g.n, g.m
    degs = [g.degree(v) for v in range(n)]
    if m == n * (n - 1) // 2:
        return "complete", (n,), list(range(n))
    if m == n and all(d == 2 for d in degs):
        return "cycle", (n,), _walk(g, 0)
    if m == n - 1 and max(degs) <= 2:
        return "path", (n,), _walk(g, degs.index(1))
    parts = bipartition(g)
    if parts is not None and m == len(parts[0]) * len(parts[1]):
        return "complete_bipartite", (len(parts[0]), len(parts[1])), parts[0] + parts[1]
    if m == n - 1:
        return "tree", (n,), list(range(n))
    return None


def _transport(g: Graph, c: EdgeColoring, phi: list[int]) -> EdgeColoring:
    colors: list[int | None] = [None] * g.m
    for (a, b), col in zip(c.graph.edges, c.colors):
        colors[g.eid(phi[a], phi[b])] = col
    return EdgeColoring(g, colors, c.k)


def _family(g: Graph, mode: str) -> tuple[int, EdgeColoring, str]:
    found = match_family(g)
    if found is None:
        raise GraphInputError("graph is not a recognized family member (connected path, cycle, tree, K_n or K_n,m)")
    fam, params, phi = found
    if mode == "majority":
        if fam == "complete":
            k, c = mnsd_complete(*params)
        elif fam == "complete_bipartite":
            k, c = mnsd_complete_bipartite(*params)
        elif fam == "cycle":
            k, c = color_cycle(*params)
        else:
            raise GraphInputError(f"{fam} has vertices of degree 1; no majority coloring exists")
    elif fam == "tree":
        k, c = color_tree(g)
        return k, c, fam
    else:
        k, c = {"complete": color_complete, "cycle": color_cycle, "path": color_path,
                "complete_bipartite": color_complete_bipartite}[fam](*params)
    return k, _transport(g, c, phi), fam


def _auto_qm(g: Graph) -> str:
    if match_family(g) is not None:
        return "family"
    if bipartition(g) is not None:
        return "bipartite6"
    if g.max_degree() <= 4:
        return "maxdeg4"
    return "delta-bound" if delta_palette(g.max_degree()) < 12 else "kalkowski"


def color_graph(g: Graph, mode: str = "quasi_majority", strategy: str = "auto",
                budget: SearchBudget | None = None) -> Outcome:
    if strategy not in STRATEGIES:
        raise GraphInputError(f"unknown strategy {strategy!r}")
    if mode == "majority" and strategy in QM_ONLY:
        raise GraphInputError(f"strategy {strategy} only produces quasi-majority colorings")
    check_instance(g, mode)
    family = None
    if strategy == "auto":
        if mode == "quasi_majority":
            strategy = _auto_qm(g)
        else:
            strategy = "family" if match_family(g) is not None else "kalkowski"
    if strategy == "family":
        k, c, family = _family(g, mode)
    elif strategy == "bipartite6":
        k, c = 6, qmnsd_six(g)
    elif strategy == "maxdeg4":
        k, c = 7, qmnsd_maxdeg4(g)
    elif strategy == "delta-bound":
        k, c = delta_palette(g.max_degree()), qmnsd_delta_bound(g)
    elif strategy == "kalkowski":
        if mode == "quasi_majority":
            k, c = 12, kalkowski_qmnsd12(g)
        else:
            k, c = 18, kalkowski_mnsd18(g)
            if all(g.degree(v) % 2 == 0 for v in range(g.n)):
                # with all degrees even the QM output is already majority
                alt = kalkowski_qmnsd12(g)
                if alt.max_color() < c.max_color():
                    k, c = 12, alt
    else:
        res = min_index(g, mode, budget)
        if res.status != "exact":
            raise GraphInputError("exact search exhausted its budget")
        k, c = res.k, res.witness
    report = verify(g, c, mode, k)
    if not report.passed:
        raise AssertionError(f"{strategy} produced an invalid coloring: {report.witnesses[:3]}")
    c.k = k
    return Outcome(strategy, k, c, family)
