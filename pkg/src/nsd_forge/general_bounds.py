"""Window algorithms for arbitrary graphs (<= 12 colors QM, <= 18 majority)
and the recursive ``ceil((3*Delta + 4) / 2)`` algorithm.

Window algorithm: start from a small base coloring shifted into the
middle of the palette.  Vertices are processed in an order where every
vertex but the last has a later neighbor.  Each processed vertex ``v``
gets a window ``{w, w + off}`` of allowed final sums, disjoint from the
windows of its earlier neighbors.  Later on, an edge to ``v`` may only
move by ``+off`` or ``-off`` in the direction that keeps ``v`` inside its
window.

Every edge has a *pre-toggle* color in the forward range; its final
color is that plus ``-off``, ``0`` or ``+off``.  Toggling maps colors
injectively away from the forward range, so if the pre-toggle colors
obey the count cap, so do the final ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .coloring import EdgeColoring, cap, verify
from .families import color_complete
from .graph import Graph, GraphInputError, components, is_nice
from .qm_base import majority_four_coloring, qm_three_coloring

__all__ = [
    "KalkowskiParams",
    "QM_PARAMS",
    "MAJORITY_PARAMS",
    "WindowAssignment",
    "kalkowski_qmnsd12",
    "kalkowski_mnsd18",
    "kalkowski",
    "vertex_order",
    "delta_palette",
    "qmnsd_delta_bound",
    "DeltaTrace",
]


@dataclass(frozen=True)
class KalkowskiParams:
    mode: str
    shift: int  # base color c becomes c + shift
    offset: int
    forward: tuple[int, ...]
    bound: int

    @property
    def modulus(self) -> int:
        return 2 * self.offset


QM_PARAMS = KalkowskiParams("quasi_majority", 4, 4, (5, 6, 7, 8), 12)
MAJORITY_PARAMS = KalkowskiParams("majority", 6, 6, (7, 8, 9, 10, 11, 12), 18)


@dataclass
class WindowAssignment:
    offset: int
    order: list[int] = field(default_factory=list)
    w: dict[int, int] = field(default_factory=dict)
    base: list[int] = field(default_factory=list)  # shifted base colors
    forward: dict[int, int] = field(default_factory=dict)  # edge -> pre-toggle color after recoloring
    toggles: list[int] = field(default_factory=list)  # -1, 0, +1 per edge
    last: list[int] = field(default_factory=list)  # final vertex of each component

    def window(self, v: int) -> tuple[int, int]:
        return self.w[v], self.w[v] + self.offset


def vertex_order(g: Graph, comp: list[int]) -> list[int]:
    """Reverse BFS from a maximum-degree vertex, which comes last."""
    root = max(comp, key=lambda v: (g.degree(v), -v))
    seen = {root}
    bfs = [root]
    for u in bfs:
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                bfs.append(w)
    return bfs[::-1]


class _State:
    def __init__(self, g: Graph, params: KalkowskiParams, base: list[int], debug: bool):
        self.g = g
        self.params = params
        self.pre = list(base)
        self.toggle = [0] * g.m
        self.sums = [0] * g.n
        for (u, v), c in zip(g.edges, base):
            self.sums[u] += c
            self.sums[v] += c
        self.caps = [cap(g.degree(v), params.mode) for v in range(g.n)]
        self.debug = debug

    def flip(self, e: int, direction: int) -> None:
        assert abs(self.toggle[e] + direction) <= 1
        self.toggle[e] += direction
        delta = direction * self.params.offset
        for x in self.g.edges[e]:
            self.sums[x] += delta
        self._check(e)

    def recolor(self, e: int, color: int) -> None:
        assert self.toggle[e] == 0
        delta = color - self.pre[e]
        self.pre[e] = color
        for x in self.g.edges[e]:
            self.sums[x] += delta
        self._check(e)

    def pre_count(self, x: int, color: int, skip: int) -> int:
        return sum(1 for i in self.g.incident(x) if i != skip and self.pre[i] == color)

    def final(self) -> list[int]:
        off = self.params.offset
        return [p + off * t for p, t in zip(self.pre, self.toggle)]

    def _check(self, e: int) -> None:
        if not self.debug:
            return
        colors = self.final()
        for x in self.g.edges[e]:
            tally: dict[int, int] = {}
            for i in self.g.incident(x):
                tally[colors[i]] = tally.get(colors[i], 0) + 1
            assert max(tally.values()) <= self.caps[x], (x, tally)


def _window_of(s: int, params: KalkowskiParams) -> int:
    return s if s % params.modulus < params.offset else s - params.offset


def _process(st: _State, wa: WindowAssignment, pos: dict[int, int], v: int) -> None:
    g, params, off = st.g, st.params, st.params.offset
    k = pos[v]
    back = [u for u in g.neighbors(v) if pos[u] < k]
    later = [u for u in g.neighbors(v) if pos[u] > k]
    plus, minus = [], []
    for u in sorted(back, key=pos.get):
        e = g.eid(u, v)
        if st.sums[u] == wa.w[u]:
            plus.append(e)
        else:
            assert st.sums[u] == wa.w[u] + off, (u, st.sums[u], wa.w[u])
            minus.append(e)
    taken = {wa.w[u] for u in back}
    j0 = min(later, key=pos.get)
    f = g.eid(v, j0)
    shifts = [0]
    for q in params.forward:
        if q != st.pre[f] and all(st.pre_count(x, q, f) + 1 <= st.caps[x] for x in (v, j0)):
            shifts.append(q - st.pre[f])
    for delta in shifts:
        for t in range(-len(minus), len(plus) + 1):
            s = st.sums[v] + delta + off * t
            w = _window_of(s, params)
            if w not in taken:
                if delta:
                    st.recolor(f, st.pre[f] + delta)
                    wa.forward[f] = st.pre[f]
                for e in (plus[:t] if t > 0 else minus[:-t]):
                    st.flip(e, 1 if t > 0 else -1)
                assert st.sums[v] == s
                wa.w[v] = w
                return
    raise AssertionError(f"no free window at vertex {v}")  # excluded by the counting argument


def _finish(st: _State, wa: WindowAssignment, v: int) -> None:
    g, off = st.g, st.params.offset
    edges = [(u, g.eid(u, v)) for u in g.neighbors(v)]
    for u, e in edges:
        if st.sums[u] == wa.w[u] + off:
            st.flip(e, -1)
    # every neighbor now sits at the low end of its window; raising an edge
    # lifts both v and that neighbor by off
    s = st.sums[v]
    if s % st.params.modulus >= off:
        return
    for u, e in edges:
        if wa.w[u] != s:
            st.flip(e, 1)
            return
    # all neighbors sit exactly at s: lift two edges, v lands at s + 2*off
    assert len(edges) >= 2
    for _, e in edges[:2]:
        st.flip(e, 1)


def kalkowski(g: Graph, params: KalkowskiParams, debug: bool = False,
              windows: WindowAssignment | None = None) -> EdgeColoring:
    if params.mode == "quasi_majority":
        if not is_nice(g):
            raise GraphInputError("graph has a K2 component")
        base = qm_three_coloring(g).colors
    else:
        low = [v for v in range(g.n) if g.degree(v) == 1]
        if low:
            raise GraphInputError(f"majority colorings need minimum degree >= 2; vertex {low[0]} has degree 1")
        base = majority_four_coloring(g).colors
    shifted = [c + params.shift for c in base]
    st = _State(g, params, shifted, debug)
    wa = windows if windows is not None else WindowAssignment(params.offset)
    wa.offset = params.offset
    wa.base = list(shifted)
    for comp in components(g):
        if len(comp) < 2:
            continue
        order = vertex_order(g, comp)
        pos = {v: i for i, v in enumerate(order)}
        wa.order += order
        wa.last.append(order[-1])
        for v in order[:-1]:
            _process(st, wa, pos, v)
        _finish(st, wa, order[-1])
    wa.toggles = list(st.toggle)
    c = EdgeColoring(g, st.final(), params.bound)
    report = verify(g, c, params.mode, params.bound)
    if not report.passed:
        raise AssertionError(f"window algorithm failed verification: {report.witnesses[:3]}")
    return c


def kalkowski_qmnsd12(g: Graph, debug: bool = False, windows: WindowAssignment | None = None) -> EdgeColoring:
    return kalkowski(g, QM_PARAMS, debug, windows)


def kalkowski_mnsd18(g: Graph, debug: bool = False, windows: WindowAssignment | None = None) -> EdgeColoring:
    return kalkowski(g, MAJORITY_PARAMS, debug, windows)


# -- the (3*Delta + 4) / 2 bound ---------------------------------------------


def delta_palette(delta: int) -> int:
    return math.ceil((3 * delta + 4) / 2)


@dataclass
class DeltaTrace:
    # (x, y, z, |A|, |B|, pair) per extension step, in the order applied
    steps: list[tuple[int, int, int, int, int, tuple[int, int]]] = field(default_factory=list)
    complete_parts: list[list[int]] = field(default_factory=list)
    wide_scans: int = 0


def _split_vertex(adj: list[set[int]]) -> tuple[int, int, int] | None:
    for y in range(len(adj)):
        nb = sorted(adj[y])
        for i, x in enumerate(nb):
            for z in nb[i + 1:]:
                if z not in adj[x]:
                    return x, y, z
    return None


def qmnsd_delta_bound(g: Graph, trace: DeltaTrace | None = None) -> EdgeColoring:
    """Delete two edges ``xy``, ``yz`` with ``x``, ``z`` nonadjacent until every
    component is complete, color those directly, then put the deleted pairs
    back in reverse order choosing colors from their free lists."""
    if not is_nice(g):
        raise GraphInputError("graph has a K2 component")
    trace = trace if trace is not None else DeltaTrace()
    K = delta_palette(g.max_degree())
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    removed: list[tuple[int, int, int]] = []
    while (found := _split_vertex(adj)) is not None:
        x, y, z = found
        adj[x].discard(y)
        adj[y].discard(x)
        adj[z].discard(y)
        adj[y].discard(z)
        removed.append(found)
    colors: dict[tuple[int, int], int] = {}
    seen: set[int] = set()
    for v in range(g.n):
        if v in seen or not adj[v]:
            continue
        comp = sorted(adj[v] | {v})
        seen.update(comp)
        if len(comp) == 2:
            colors[(comp[0], comp[1])] = 1
            continue
        trace.complete_parts.append(comp)
        _, kc = color_complete(len(comp))
        for (a, b), c in zip(kc.graph.edges, kc.colors):
            colors[(comp[a], comp[b])] = c
    sums = [0] * g.n
    counts: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for (a, b), c in colors.items():
        for t in (a, b):
            sums[t] += c
            counts[t][c] = counts[t].get(c, 0) + 1

    def free(end: int, other_y: int, far: int) -> list[int]:
        bound = cap(len(adj[end]) + 1, "quasi_majority")
        avoid = {sums[u] - sums[end] for u in adj[end]}
        avoid.add(sums[far] - sums[other_y])
        return [c for c in range(1, K + 1) if counts[end].get(c, 0) + 1 <= bound and c not in avoid]

    for x, y, z in reversed(removed):
        A = free(x, y, z)
        B = free(z, y, x)
        need = math.ceil((g.max_degree() + 2) / 2)
        assert len(A) >= need and len(B) >= need, (len(A), len(B), need)
        taken = {sums[u] for u in adj[y]}
        bound_y = cap(len(adj[y]) + 2, "quasi_majority")

        def fits(a: int, b: int) -> bool:
            if a == b or sums[y] + a + b in taken:
                return False
            return all(counts[y].get(c, 0) + 1 <= bound_y for c in (a, b))

        a0, b0 = min(A), max(B)
        pairs = [(a0, b) for b in B if b != a0] + [(a, b0) for a in A if a not in (a0, b0)]
        pick = next((p for p in pairs if fits(*p)), None)
        if pick is None:
            trace.wide_scans += 1
            pick = next(((a, b) for a in A for b in B if fits(a, b)), None)
        if pick is None:
            raise AssertionError(f"no color pair for edges {x}-{y}, {y}-{z}")
        a, b = pick
        trace.steps.append((x, y, z, len(A), len(B), pick))
        for (p, q), c in (((x, y), a), ((y, z), b)):
            colors[(min(p, q), max(p, q))] = c
            for t in (p, q):
                sums[t] += c
                counts[t][c] = counts[t].get(c, 0) + 1
        adj[x].add(y)
        adj[y].update((x, z))
        adj[z].add(y)
    c = EdgeColoring(g, [colors[e] for e in g.edges])
    report = verify(g, c, "quasi_majority", K)
    if not report.passed:
        raise AssertionError(f"delta-bound coloring failed verification: {report.witnesses[:3]}")
    return c
