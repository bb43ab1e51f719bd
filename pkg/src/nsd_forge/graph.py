"""Simple undirected graphs, family generators and interchange formats.

Vertices are dense 0-based integers and edges are stored as ``(min, max)``
pairs sorted lexicographically, so edge positions are a stable index for
colorings.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphInputError",
    "Graph6Error",
    "FamilySpec",
    "FAMILIES",
    "build_graph",
    "generate",
    "parse_graph6",
    "emit_graph6",
    "parse_edgelist",
    "emit_edgelist",
    "read_graph",
    "is_nice",
    "bipartition",
    "components",
    "degrees",
]


class GraphInputError(ValueError):
    """Raised for malformed graphs or invalid generator parameters."""


class Graph6Error(GraphInputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)
    edge_index: dict[tuple[int, int], int] = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def eid(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    def incident(self, v: int) -> list[int]:
        """Edge positions incident to ``v``, in neighbor order."""
        return [self.eid(v, u) for u in self.adj[v]]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def subgraph_edges(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph on the same vertex set keeping only ``edge_ids``."""
        return build_graph(self.n, [self.edges[i] for i in edge_ids])

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in pairs}
        return build_graph(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len(vertices)-1``.

        Returns the subgraph and the list mapping new labels back to old ones.
        """
        order = sorted(vertices)
        pos = {v: i for i, v in enumerate(order)}
        sub = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        return build_graph(len(order), sub), order


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        seen.add((min(u, v), max(u, v)))
    edges = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, edges, adj, {e: i for i, e in enumerate(edges)})


# -- families ---------------------------------------------------------------

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "random_tree",
    "random_gnp",
    "random_bipartite",
    "random_regular",
)


@dataclass(frozen=True)
class FamilySpec:
    """Parametric description of a generated graph.

    ``n``/``m`` are sizes (``m`` is the second side for bipartite families and
    the degree for ``random_regular``); the edge probability is
    ``p_num / p_den``. Randomised families draw from ``random.Random(seed)``
    (Mersenne Twister), which gives the same graph on every platform.
    """

    family: str
    n: int
    m: int = 0
    p_num: int = 1
    p_den: int = 2
    seed: int = 0

    def validate(self) -> None:
        f, n, m = self.family, self.n, self.m
        if f not in FAMILIES:
            raise GraphInputError(f"unknown family {f!r}")
        if n < 0 or m < 0:
            raise GraphInputError("sizes must be nonnegative")
        if f == "cycle" and n < 3:
            raise GraphInputError("cycle needs n >= 3")
        if f == "random_tree" and n < 1:
            raise GraphInputError("random_tree needs n >= 1")
        if f in ("random_gnp", "random_bipartite"):
            if self.p_den <= 0 or not 0 <= self.p_num <= self.p_den:
                raise GraphInputError("probability must lie in [0, 1]")
        if f == "random_regular" and (m >= n or (n * m) % 2):
            raise GraphInputError("random_regular needs m < n and n*m even")


def _prufer_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if deg[i] == 1)
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = (i for i in range(n) if deg[i] == 1)
    edges.append((u, v))
    return edges


def _random_regular(n: int, d: int, rng: random.Random) -> list[tuple[int, int]]:
    # pairing model with rejection; it rarely succeeds for dense d, so fall
    # back to a circulant graph shuffled by double-edge swaps
    for _ in range(500):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            return sorted(pairs)
    return _swapped_circulant(n, d, rng)


def _swapped_circulant(n: int, d: int, rng: random.Random) -> list[tuple[int, int]]:
    edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in range(1, d // 2 + 1)}
    if d % 2:
        edges |= {(i, i + n // 2) for i in range(n // 2)}
    pool = sorted(edges)
    for _ in range(10 * len(pool)):
        i, j = rng.sample(range(len(pool)), 2)
        (a, b), (c, e) = pool[i], pool[j]
        if rng.random() < 0.5:
            c, e = e, c
        new1, new2 = (min(a, c), max(a, c)), (min(b, e), max(b, e))
        if a == c or b == e or new1 in edges or new2 in edges:
            continue
        edges -= {pool[i], pool[j]}
        edges |= {new1, new2}
        pool[i], pool[j] = new1, new2
    return sorted(edges)


def generate(spec: FamilySpec) -> Graph:
    spec.validate()
    f, n, m = spec.family, spec.n, spec.m
    if f == "path":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if f == "cycle":
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if f == "complete":
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if f == "complete_bipartite":
        return build_graph(n + m, [(i, n + j) for i in range(n) for j in range(m)])
    if f == "star":
        return build_graph(n + 1, [(0, j) for j in range(1, n + 1)])
    rng = random.Random(spec.seed)
    if f == "random_tree":
        return build_graph(n, _prufer_tree(n, rng))
    if f == "random_gnp":
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.randrange(spec.p_den) < spec.p_num
        ]
        return build_graph(n, edges)
    if f == "random_bipartite":
        edges = [
            (i, n + j)
            for i in range(n)
            for j in range(m)
            if rng.randrange(spec.p_den) < spec.p_num
        ]
        return build_graph(n + m, edges)
    return build_graph(n, _random_regular(n, m, rng))


# -- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edge_index else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2))
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated vertex count", base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated vertex count", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated adjacency data: expected {need} bytes, got {len(body)}",
            base + len(vals),
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


# -- plain edge list --------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphInputError("empty edge list")
    try:
        head = [int(x) for x in lines[0].split()]
    except ValueError as exc:
        raise GraphInputError(f"bad header line {lines[0]!r}") from exc
    if len(head) != 2:
        raise GraphInputError("header must be 'n m'")
    n, m = head
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphInputError(f"bad edge line {ln!r}") from exc
    if len(pairs) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def emit_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def read_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        first = text.strip().splitlines()[0] if text.strip() else ""
        fmt = "edgelist" if " " in first.strip() else "graph6"
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphInputError(f"unknown graph format {fmt!r}")


# -- structure --------------------------------------------------------------


def degrees(g: Graph) -> list[int]:
    return [len(a) for a in g.adj]


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_nice(g: Graph) -> bool:
    """True iff no connected component is a single edge (K2)."""
    return not any(
        len(c) == 2 and g.has_edge(c[0], c[1]) for c in components(g)
    )


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        [v for v in range(g.n) if side[v] == 0],
        [v for v in range(g.n) if side[v] == 1],
    )
