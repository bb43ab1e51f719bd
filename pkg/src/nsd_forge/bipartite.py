"""Mod-3 sum colorings of bipartite graphs and the 6-color QM refinement.

Per component one side (the *uniform* side) gets every sum congruent to
0 mod 3 and the other side sums congruent to 1 or 2.  Along a spanning
tree rooted on the non-uniform side, each vertex fixes its parent edge
to hit its target residue; the root's residue is whatever remains.  If
that clashes, flipping the target of one non-root vertex on the root's
side shifts the root residue by one, which always repairs it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .coloring import EdgeColoring, verify
from .graph import Graph, GraphInputError, bipartition, components, is_nice
from .qm_base import two_split

__all__ = ["ResiduePlan", "z3_nsd_coloring", "qmnsd_six", "residue_sides_disjoint"]

UNIFORM = 0


@dataclass
class ResiduePlan:
    uniform: list[int] = field(default_factory=list)
    other: list[int] = field(default_factory=list)
    roots: list[int] = field(default_factory=list)
    flipped: list[int] = field(default_factory=list)


def _check(g: Graph) -> tuple[list[int], list[int]]:
    if not is_nice(g):
        raise GraphInputError("graph has a K2 component")
    parts = bipartition(g)
    if parts is None:
        raise GraphInputError("graph is not bipartite")
    return parts


def _color_for(residue: int) -> int:
    return residue % 3 or 3


def z3_nsd_coloring(g: Graph, plan: ResiduePlan | None = None) -> EdgeColoring:
    v1, _ = _check(g)
    plan = plan if plan is not None else ResiduePlan()
    side1 = set(v1)
    colors = [1] * g.m
    for comp in components(g):
        if len(comp) < 2:
            continue
        a = [v for v in comp if v in side1]
        b = [v for v in comp if v not in side1]
        uniform, other = (b, a) if len(b) == 1 else (a, b)
        plan.uniform += uniform
        plan.other += other
        root = min(other)
        plan.roots.append(root)
        # BFS tree
        parent = {root: -1}
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in parent:
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        tree = {g.eid(v, parent[v]) for v in order[1:]}
        in_uniform = set(uniform)
        target = {v: UNIFORM if v in in_uniform else UNIFORM + 1 for v in comp}

        def solve() -> int:
            partial = {v: 0 for v in comp}
            for i in range(g.m):
                u, w = g.edges[i]
                if u in partial and i not in tree:
                    colors[i] = 1
                    partial[u] += 1
                    partial[w] += 1
            for v in reversed(order[1:]):
                e = g.eid(v, parent[v])
                c = _color_for(target[v] - partial[v])
                colors[e] = c
                partial[v] += c
                partial[parent[v]] += c
            return partial[root] % 3

        if solve() == UNIFORM:
            flip = next(v for v in order[1:] if v not in in_uniform)
            target[flip] = UNIFORM + 2
            plan.flipped.append(flip)
            assert solve() != UNIFORM
    c = EdgeColoring(g, colors, 3)
    assert residue_sides_disjoint(g, c, plan.uniform, plan.other)
    return c


def residue_sides_disjoint(g: Graph, c: EdgeColoring, side_a, side_b) -> bool:
    sums = [0] * g.n
    for (u, v), col in zip(g.edges, c.colors):
        sums[u] += col
        sums[v] += col
    ra = {sums[v] % 3 for v in side_a if g.degree(v)}
    rb = {sums[v] % 3 for v in side_b if g.degree(v)}
    return not ra & rb


def qmnsd_six(g: Graph) -> EdgeColoring:
    """Split each color class ``i`` into ``i`` and ``i + 3`` by an Euler split.

    Residues mod 3 are unchanged, so the z3 sums stay separated, and the
    split bounds every final color by half the class degree (rounded up).
    """
    base = z3_nsd_coloring(g)
    colors = list(base.colors)
    for cls in (1, 2, 3):
        ids = [i for i, c in enumerate(base.colors) if c == cls]
        split, exceptional = two_split(g, ids)
        # bipartite graphs have no odd-size component with all degrees even
        assert not exceptional
        for i, part in split.items():
            if part == 2:
                colors[i] = cls + 3
    c = EdgeColoring(g, colors, 6)
    report = verify(g, c, "quasi_majority", 6)
    if not report.passed:
        raise AssertionError(f"qmnsd_six produced an invalid coloring: {report.witnesses[:3]}")
    return c
