"""Quasi-majority and majority colorings with two to four colors.

Everything here is built on one mechanism: attach a virtual vertex to the
odd-degree vertices of a component, walk an Euler circuit, and color the
edges alternately.  Every pass through a vertex then uses both colors, so
each vertex ends up with at most ``ceil(d/2)`` edges of a color.  The only
exception is a component with an odd number of edges and no odd vertex,
where the start vertex gets ``d/2 + 1`` edges of the first color.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Sequence

from .coloring import EdgeColoring, cap
from .graph import Graph, GraphInputError, components

__all__ = [
    "euler_circuit",
    "two_split",
    "qm_two_coloring",
    "qm_three_coloring",
    "majority_two_coloring",
    "majority_four_coloring",
]


def euler_circuit(
    adjacency: dict[int, list[tuple[int, int]]],
    start: int,
    rng: random.Random | None = None,
) -> list[int]:
    """Hierholzer's algorithm on ``{vertex: [(neighbor, edge_key), ...]}``.

    Returns edge keys in circuit order.  Every vertex must have even degree.
    """
    order = {v: list(nb) for v, nb in adjacency.items()}
    if rng is not None:
        for nb in order.values():
            rng.shuffle(nb)
    ptr = {v: 0 for v in order}
    used: set[int] = set()
    stack: list[tuple[int, int | None]] = [(start, None)]
    out: list[int] = []
    while stack:
        v, via = stack[-1]
        nb = order[v]
        while ptr[v] < len(nb) and nb[ptr[v]][1] in used:
            ptr[v] += 1
        if ptr[v] < len(nb):
            w, key = nb[ptr[v]]
            used.add(key)
            stack.append((w, key))
        else:
            stack.pop()
            if via is not None:
                out.append(via)
    out.reverse()
    return out


ChooseStart = Callable[[list[int], dict[int, int]], int]


def two_split(
    g: Graph,
    edge_ids: Iterable[int] | None = None,
    choose_start: ChooseStart | None = None,
    rng: random.Random | None = None,
) -> tuple[dict[int, int], list[tuple[int, int]]]:
    """Alternate colors 1/2 along Euler circuits of the chosen edges.

    Returns ``(colors, exceptional)``.  ``exceptional`` lists
    ``(vertex, edge)`` for every component with odd size and only even
    degrees: ``vertex`` is the circuit start, which carries one surplus
    edge of color 1, and ``edge`` is the last circuit edge at it.
    ``choose_start(vertices, degree)`` picks that vertex; the default is
    the smallest index.
    """
    ids = list(range(g.m)) if edge_ids is None else sorted(edge_ids)
    nbrs: dict[int, list[tuple[int, int]]] = {}
    for i in ids:
        u, v = g.edges[i]
        nbrs.setdefault(u, []).append((v, i))
        nbrs.setdefault(v, []).append((u, i))
    for lst in nbrs.values():
        lst.sort()
    colors: dict[int, int] = {}
    exceptional: list[tuple[int, int]] = []
    seen: set[int] = set()
    virtual = g.n
    next_key = g.m
    for root in sorted(nbrs):
        if root in seen:
            continue
        comp = []
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w, _ in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp.sort()
        deg = {v: len(nbrs[v]) for v in comp}
        odd = [v for v in comp if deg[v] % 2]
        adjacency = {v: list(nbrs[v]) for v in comp}
        if odd:
            adjacency[virtual] = []
            for v in odd:
                adjacency[v].append((virtual, next_key))
                adjacency[virtual].append((v, next_key))
                next_key += 1
            start = virtual
        elif choose_start is not None:
            start = choose_start(comp, deg)
        else:
            start = comp[0]
        tour = euler_circuit(adjacency, start, rng)
        for pos, key in enumerate(tour):
            if key < g.m:
                colors[key] = 1 if pos % 2 == 0 else 2
        if not odd and len(tour) % 2:
            exceptional.append((start, tour[-1]))
        virtual += 1
    return colors, exceptional


def _as_coloring(g: Graph, colors: dict[int, int], k: int) -> EdgeColoring:
    return EdgeColoring(g, [colors[i] for i in range(g.m)], k)


def qm_two_coloring(g: Graph) -> EdgeColoring | None:
    """A quasi-majority 2-coloring, or ``None`` when none exists.

    None exists exactly when some component has an odd number of edges
    and only even degrees.
    """
    colors, exceptional = two_split(g)
    if exceptional:
        return None
    return _as_coloring(g, colors, 2)


def qm_three_coloring(g: Graph) -> EdgeColoring:
    colors, exceptional = two_split(g)
    for _, last in exceptional:
        colors[last] = 3
    k = 3 if exceptional else 2
    return _as_coloring(g, colors, k)


def majority_two_coloring(g: Graph) -> EdgeColoring | None:
    """Exactly ``d/2`` edges of each color at every vertex, when possible."""
    if any(d % 2 for d in (g.degree(v) for v in range(g.n))):
        return None
    colors, exceptional = two_split(g)
    if exceptional:
        return None
    return _as_coloring(g, colors, 2)


# -- majority 4-coloring ----------------------------------------------------


def _violations(g: Graph, colors: Sequence[int]) -> list[tuple[int, int]]:
    bad = []
    for v in range(g.n):
        tally: dict[int, int] = {}
        for i in g.incident(v):
            tally[colors[i]] = tally.get(colors[i], 0) + 1
        bound = cap(g.degree(v), "majority")
        bad += [(v, c) for c, t in sorted(tally.items()) if t > bound]
    return bad


def _start_picker(g: Graph) -> ChooseStart:
    # the surplus vertex gets d_class/2 + 1 edges of one color; pick one
    # where that still fits under floor(d_G/2)
    def pick(comp: list[int], deg: dict[int, int]) -> int:
        for v in comp:
            if deg[v] // 2 + 1 <= g.degree(v) // 2:
                return v
        return max(comp, key=lambda v: (g.degree(v), -v))

    return pick


def _split_classes(g: Graph, rng: random.Random | None) -> list[int]:
    first, exceptional = two_split(g, choose_start=_start_picker(g), rng=rng)
    colors = [0] * g.m
    pick = _start_picker(g)
    for cls, offset in ((1, 0), (2, 2)):
        ids = [i for i in range(g.m) if first[i] == cls]
        second, _ = two_split(g, ids, choose_start=pick, rng=rng)
        for i, c in second.items():
            colors[i] = c + offset
    return colors


def _resplit_pair(g: Graph, colors: list[int], v: int, alpha: int, beta: int) -> bool:
    """Re-balance colors alpha/beta on the alpha-beta component through ``v``."""
    ids = [i for i in range(g.m) if colors[i] in (alpha, beta)]
    nbrs: dict[int, list[int]] = {}
    for i in ids:
        a, b = g.edges[i]
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    comp = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in nbrs.get(u, []):
            if w not in comp:
                comp.add(w)
                stack.append(w)
    local = [i for i in ids if g.edges[i][0] in comp]
    split, exceptional = two_split(g, local, choose_start=_start_picker(g))
    trial = list(colors)
    for i, c in split.items():
        trial[i] = alpha if c == 1 else beta
    if len(_violations(g, trial)) < len(_violations(g, colors)):
        colors[:] = trial
        return True
    return False


def majority_four_coloring(g: Graph, attempts: int = 64) -> EdgeColoring:
    """Majority coloring with at most four colors for graphs with min degree >= 2.

    Two nested Euler splits give classes {1, 2} and {3, 4}; leftover
    conflicts are re-balanced pairwise, and if that stalls the circuits are
    redrawn from a seeded generator.  The result is always checked.
    """
    if g.m and g.min_degree() < 2:
        low = min(range(g.n), key=g.degree)
        raise GraphInputError(
            f"majority colorings need minimum degree >= 2; vertex {low} has degree {g.degree(low)}"
        )
    for attempt in range(attempts):
        rng = None if attempt == 0 else random.Random(attempt)
        colors = _split_classes(g, rng)
        for _ in range(4 * g.m + 4):
            bad = _violations(g, colors)
            if not bad:
                break
            progressed = False
            for v, alpha in bad:
                tally = {c: 0 for c in (1, 2, 3, 4)}
                for i in g.incident(v):
                    tally[colors[i]] += 1
                bound = cap(g.degree(v), "majority")
                for beta in (1, 2, 3, 4):
                    if beta != alpha and tally[beta] < bound:
                        if _resplit_pair(g, colors, v, alpha, beta):
                            progressed = True
                            break
                if progressed:
                    break
            if not progressed:
                break
        if not _violations(g, colors):
            return EdgeColoring(g, colors, 4)
    raise RuntimeError("majority 4-coloring search exhausted its attempts")
