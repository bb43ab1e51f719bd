"""Explicit QM-NSD colorings for paths, cycles, complete graphs, complete
bipartite graphs and trees, each at the exact index of its family.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import fixtures
from .coloring import EdgeColoring, cap, verify
from .exact import SearchBudget, complete_partial, find_coloring
from .graph import FamilySpec, Graph, GraphInputError, components, generate
from .qm_base import qm_two_coloring

__all__ = [
    "color_path",
    "color_cycle",
    "color_complete",
    "complete_color2_profile",
    "color_complete_bipartite",
    "color_tree",
    "TreeTrace",
    "TYPE_TABLE",
    "TYPE_RESIDUE",
    "has_equal_even_adjacency",
    "qmnsd_from_qm2",
    "qmnsd_from_interval",
]


def _checked(g: Graph, c: EdgeColoring, k: int, mode: str = "quasi_majority") -> tuple[int, EdgeColoring]:
    report = verify(g, c, mode, k)
    if not report.passed:
        raise AssertionError(f"construction failed verification: {report.witnesses[:3]}")
    c.k = k
    return k, c


def color_path(n: int) -> tuple[int, EdgeColoring]:
    if n < 3:
        raise GraphInputError(f"paths need n >= 3, got {n}")
    g = generate(FamilySpec("path", n))
    if n == 3:
        return _checked(g, EdgeColoring(g, [1, 2]), 2)
    return _checked(g, EdgeColoring(g, [i % 3 + 1 for i in range(n - 1)]), 3)


def color_cycle(n: int) -> tuple[int, EdgeColoring]:
    if n < 3:
        raise GraphInputError(f"cycles need n >= 3, got {n}")
    g = generate(FamilySpec("cycle", n))
    walk = [g.eid(i, (i + 1) % n) for i in range(n)]
    colors: list[int | None] = [None] * g.m
    if n % 3 == 0:
        for pos, e in enumerate(walk):
            colors[e] = pos % 3 + 1
        return _checked(g, EdgeColoring(g, colors), 3)
    k = 5 if n == 5 else 4
    # periodic prefix, then a short exact tail
    for pos in range(max(0, n - 6)):
        colors[walk[pos]] = pos % 3 + 1
    res = complete_partial(g, EdgeColoring(g, colors, k), mode="quasi_majority", k=k,
                           budget=SearchBudget(k))
    if not res.found:
        raise AssertionError(f"cycle tail completion failed for n={n}")
    return _checked(g, res.coloring, k)


# -- complete graphs --------------------------------------------------------


def color_complete(n: int) -> tuple[int, EdgeColoring]:
    """3-coloring of K_n grown two vertices at a time.

    Each step joins two new vertices x < y to everything before: x-y and
    the edges to the current low-color-2 vertices get color 2, the other
    edges get 1 at x and 3 at y.
    """
    if n < 3:
        raise GraphInputError(f"complete graphs need n >= 3, got {n}")
    col: dict[tuple[int, int], int] = {}
    two = [0] * n  # color-2 degree
    if n % 2:
        col.update({(0, 1): 1, (0, 2): 2, (1, 2): 3})
        two[0] = two[2] = 1
        size = 3
        low = [1]
    else:
        col.update({(0, 1): 1, (0, 2): 2, (0, 3): 2, (1, 2): 1, (1, 3): 2, (2, 3): 3})
        two[:4] = [2, 1, 1, 2]
        size = 4
        low = []
    while size < n:
        half = (size + 2) // 2  # k of the target K_{2k+1} or K_{2k}
        x, y = size, size + 1
        if n % 2:
            chosen = low  # the k-1 vertices with k-2 color-2 edges
        else:
            chosen = [v for v in range(size) if two[v] <= half - 2][: half - 2]
        chosen_set = set(chosen)
        col[(x, y)] = 2
        two[x] += 1
        two[y] += 1
        for v in range(size):
            if v in chosen_set:
                col[(v, x)] = col[(v, y)] = 2
                two[v] += 2
                two[x] += 1
                two[y] += 1
            else:
                col[(v, x)] = 1
                col[(v, y)] = 3
        if n % 2:
            low = [v for v in range(size) if v not in chosen_set]
        size += 2
    g = generate(FamilySpec("complete", n))
    return _checked(g, EdgeColoring(g, [col[e] for e in g.edges]), 3)


def complete_color2_profile(c: EdgeColoring) -> list[int]:
    return [c.count(v, 2) for v in range(c.graph.n)]


# -- complete bipartite -----------------------------------------------------


def color_complete_bipartite(n: int, m: int) -> tuple[int, EdgeColoring]:
    """Sides are ``a_i = i - 1`` and ``b_j = n + j - 1``."""
    if n < 1 or m < 1:
        raise GraphInputError("both sides need at least one vertex")
    if n == m == 1:
        raise GraphInputError("K_1,1 is K2, which has no NSD coloring")
    g = generate(FamilySpec("complete_bipartite", n, m))
    if n != m:
        c = qm_two_coloring(g)
        assert c is not None
        return _checked(g, c, 2)
    if n == 2:
        fx = fixtures.load("K2,2-qmnsd4")
        return _checked(g, fx.coloring(), fx.k)
    h = (n + 1) // 2
    colors = []
    for u, v in g.edges:
        i, j = u + 1, v - n + 1
        if (i <= h) == (j <= h):
            colors.append(1)
        elif n % 2:
            colors.append(2 if i <= h else 3)
        else:
            colors.append(2 if i % 2 else 3)
    return _checked(g, EdgeColoring(g, colors), 3)


# -- trees ------------------------------------------------------------------

# residue of the vertex sum mod 3 for each coloring type
TYPE_RESIDUE = {"T1": 1, "T2": 2, "T3": 0, "E1": 1, "E2": 2, "E3": 0, "O1": 1, "O2": 2, "O3": 0}

# (color of xy, type at x) -> (even type, odd type) for the child y
TYPE_TABLE: dict[tuple[int, str], tuple[str, str]] = {
    (1, "E1"): ("E3", "O3"), (1, "E2"): ("E1", "O1"), (1, "E3"): ("E1", "O1"),
    (1, "O1"): ("E3", "O3"), (1, "O2"): ("E1", "O1"), (1, "O3"): ("E1", "O1"),
    (2, "E1"): ("E2", "O2"), (2, "E2"): ("E3", "O3"), (2, "E3"): ("E2", "O2"),
    (2, "O1"): ("E2", "O2"), (2, "O2"): ("E3", "O3"), (2, "O3"): ("E2", "O2"),
    (3, "E1"): ("E2", "O2"), (3, "E2"): ("E1", "O1"),
    (3, "O1"): ("E2", "O2"), (3, "O2"): ("E1", "O1"), (3, "O3"): ("E1", "O1"),
}


def type_multiset(tag: str, d: int) -> list[int]:
    """Colors (sorted) at a degree-``d`` vertex of the given type."""
    h = d // 2
    counts = {
        "T1": (h + 1, h, 0), "T2": (h, h + 1, 0), "T3": (h, h, 0),
        "E1": (h, h - 1, 1), "E2": (h - 1, h, 1), "E3": (h, h, 0),
        "O1": (h, h - 1, 2), "O2": (h - 1, h, 2), "O3": (h, h, 1),
    }[tag]
    if tag[0] == "E" or tag == "T3":
        assert d % 2 == 0
    else:
        assert d % 2 == 1
    if min(counts) < 0:
        raise ValueError(f"type {tag} impossible at degree {d}")
    return [1] * counts[0] + [2] * counts[1] + [3] * counts[2]


def has_equal_even_adjacency(g: Graph) -> bool:
    return any(g.degree(u) == g.degree(v) and g.degree(u) % 2 == 0 for u, v in g.edges)


def _check_tree(g: Graph) -> None:
    if g.n < 3:
        raise GraphInputError(f"trees need n >= 3, got {g.n}")
    if g.m != g.n - 1 or len(components(g)) != 1:
        raise GraphInputError("input is not a tree")


@dataclass
class TreeTrace:
    root: int
    types: dict[int, str] = field(default_factory=dict)
    # (parent, child, c(parent-child), parent type, child type)
    steps: list[tuple[int, int, int, str, str]] = field(default_factory=list)


def color_tree(g: Graph, trace: TreeTrace | None = None) -> tuple[int, EdgeColoring]:
    """BFS coloring of a tree by vertex types.

    With no adjacent pair of equal even degree two colors suffice
    (types T1-T3), otherwise three (E1-E3 at even, O1-O3 at odd degree).
    """
    _check_tree(g)
    three = has_equal_even_adjacency(g)
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    trace = trace if trace is not None else TreeTrace(root)
    trace.root = root
    colors: list[int | None] = [None] * g.m
    d0 = g.degree(root)
    if three:
        tag = "E3" if d0 % 2 == 0 else "O3"
    else:
        tag = "T3" if d0 % 2 == 0 else "T1"
    trace.types[root] = tag
    for child, c in zip(sorted(g.neighbors(root)), type_multiset(tag, d0)):
        colors[g.eid(root, child)] = c
    parent = {root: -1}
    queue = deque(sorted(g.neighbors(root)))
    for v in queue:
        parent[v] = root
    while queue:
        y = queue.popleft()
        x = parent[y]
        children = [w for w in g.neighbors(y) if w != x]
        for w in children:
            parent[w] = y
        queue.extend(children)
        if not children:
            continue
        cxy = colors[g.eid(x, y)]
        dy = g.degree(y)
        xt = trace.types[x]
        if three:
            even, odd = TYPE_TABLE[(cxy, xt)]
            tag = even if dy % 2 == 0 else odd
        elif dy % 2 == 0:
            tag = "T3"
        else:
            tag = "T2" if xt == "T1" else "T1"
        trace.types[y] = tag
        trace.steps.append((x, y, cxy, xt, tag))
        rest = type_multiset(tag, dy)
        rest.remove(cxy)
        for w, c in zip(sorted(children), rest):
            colors[g.eid(y, w)] = c
    return _checked(g, EdgeColoring(g, colors), 3 if three else 2)


# -- reductions -------------------------------------------------------------


def _no_equal_adjacent(g: Graph) -> None:
    for u, v in g.edges:
        if g.degree(u) == g.degree(v):
            raise GraphInputError(f"adjacent vertices {u} and {v} share degree {g.degree(u)}")


def qmnsd_from_qm2(g: Graph) -> tuple[int, EdgeColoring] | None:
    """A QM 2-coloring is automatically NSD when neighbors differ in degree."""
    _no_equal_adjacent(g)
    c = qm_two_coloring(g)
    if c is None:
        return None
    return _checked(g, c, 2)


def qmnsd_from_interval(g: Graph, interval: EdgeColoring) -> tuple[int, EdgeColoring]:
    """Parity-reduce an interval coloring (odd colors -> 1, even -> 2)."""
    if interval.graph != g or not interval.is_total():
        raise GraphInputError("interval coloring must be total on this graph")
    for v in range(g.n):
        seen = sorted(interval.colors[i] for i in g.incident(v))
        if seen and seen != list(range(seen[0], seen[0] + len(seen))):
            raise GraphInputError(f"colors at vertex {v} are not a run of distinct integers: {seen}")
    _no_equal_adjacent(g)
    c = EdgeColoring(g, [1 if x % 2 else 2 for x in interval.colors])
    return _checked(g, c, 2)
