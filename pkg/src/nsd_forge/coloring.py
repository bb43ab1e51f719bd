"""Edge colorings, induced vertex sums, and the QM / majority / NSD checks."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphInputError, components

__all__ = [
    "ColoringError",
    "EdgeColoring",
    "VerificationReport",
    "MODES",
    "cap",
    "vertex_sums",
    "is_quasi_majority",
    "is_majority",
    "is_nsd",
    "verify",
    "parse_coloring",
    "emit_coloring",
]

MODES = ("quasi_majority", "majority")


class ColoringError(ValueError):
    """Malformed or partial coloring where a total one is required."""


def cap(degree: int, mode: str) -> int:
    """Largest number of same-colored edges allowed at a vertex."""
    if mode == "quasi_majority":
        return (degree + 1) // 2
    if mode == "majority":
        return degree // 2
    raise ValueError(f"unknown mode {mode!r}")


class EdgeColoring:
    """Colors aligned to ``graph.edges``; ``None`` marks an uncolored edge.

    Per-vertex color counts and sums are maintained incrementally by
    :meth:`recolor`.
    """

    def __init__(self, graph: Graph, colors: Iterable[int | None], k: int | None = None):
        self.graph = graph
        self.colors: list[int | None] = list(colors)
        if len(self.colors) != graph.m:
            raise ColoringError(
                f"coloring has {len(self.colors)} entries, graph has {graph.m} edges"
            )
        for c in self.colors:
            if c is not None and (not isinstance(c, int) or c < 1):
                raise ColoringError(f"colors must be positive integers, got {c!r}")
        used = max((c for c in self.colors if c is not None), default=0)
        self.k = used if k is None else k
        self._counts = [Counter() for _ in range(graph.n)]
        self._sums = [0] * graph.n
        for i, c in enumerate(self.colors):
            if c is not None:
                self._apply(i, c, +1)

    def _apply(self, i: int, c: int, sign: int) -> None:
        for v in self.graph.edges[i]:
            self._counts[v][c] += sign
            if not self._counts[v][c]:
                del self._counts[v][c]
            self._sums[v] += sign * c

    def recolor(self, i: int, c: int | None) -> None:
        old = self.colors[i]
        if old is not None:
            self._apply(i, old, -1)
        if c is not None:
            if c < 1:
                raise ColoringError(f"colors must be positive, got {c}")
            self._apply(i, c, +1)
            self.k = max(self.k, c)
        self.colors[i] = c

    def __getitem__(self, pair: tuple[int, int]) -> int | None:
        return self.colors[self.graph.eid(*pair)]

    def __setitem__(self, pair: tuple[int, int], c: int | None) -> None:
        self.recolor(self.graph.eid(*pair), c)

    def count(self, v: int, c: int) -> int:
        return self._counts[v][c]

    def counts(self, v: int) -> dict[int, int]:
        return dict(self._counts[v])

    def partial_sum(self, v: int) -> int:
        return self._sums[v]

    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def max_color(self) -> int:
        return max((c for c in self.colors if c is not None), default=0)

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.graph, self.colors, self.k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.colors == other.colors

    def __repr__(self) -> str:
        return f"EdgeColoring(k={self.k}, colors={self.colors})"


def _require_total(g: Graph, c: EdgeColoring) -> None:
    if c.graph != g:
        raise ColoringError("coloring belongs to a different graph")
    if not c.is_total():
        missing = [g.edges[i] for i, x in enumerate(c.colors) if x is None]
        raise ColoringError(f"coloring is partial; uncolored edges {missing[:5]}")


def vertex_sums(g: Graph, c: EdgeColoring) -> list[int]:
    _require_total(g, c)
    sums = [0] * g.n
    for (u, v), col in zip(g.edges, c.colors):
        sums[u] += col
        sums[v] += col
    return sums


def _count_violations(g: Graph, c: EdgeColoring, mode: str) -> list[dict]:
    found = []
    for v in range(g.n):
        bound = cap(g.degree(v), mode)
        tally = Counter(c.colors[i] for i in g.incident(v))
        for col in sorted(tally):
            if tally[col] > bound:
                found.append(
                    {"kind": mode, "vertex": v, "color": col,
                     "count": tally[col], "bound": bound}
                )
    return found


def is_quasi_majority(g: Graph, c: EdgeColoring) -> bool:
    _require_total(g, c)
    return not _count_violations(g, c, "quasi_majority")


def is_majority(g: Graph, c: EdgeColoring) -> bool:
    _require_total(g, c)
    return not _count_violations(g, c, "majority")


def _nsd_violations(g: Graph, sums: Sequence[int]) -> list[dict]:
    return [
        {"kind": "nsd", "edge": [u, v], "sum": sums[u]}
        for u, v in g.edges
        if sums[u] == sums[v]
    ]


def is_nsd(g: Graph, c: EdgeColoring) -> bool:
    return not _nsd_violations(g, vertex_sums(g, c))


@dataclass
class VerificationReport:
    mode: str
    k: int
    nice: bool
    quasi_majority: bool
    majority: bool
    nsd: bool
    palette: bool
    sums: list[int]
    witnesses: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        mode_ok = self.quasi_majority if self.mode == "quasi_majority" else self.majority
        return self.nice and mode_ok and self.nsd and self.palette

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify(g: Graph, c: EdgeColoring, mode: str = "quasi_majority", k: int | None = None) -> VerificationReport:
    """Check every predicate and collect witnesses; never raises on failure."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    _require_total(g, c)
    k = c.k if k is None else k
    sums = vertex_sums(g, c)
    witnesses: list[dict] = []

    k2 = [comp for comp in components(g) if len(comp) == 2 and g.has_edge(*comp)]
    witnesses += [{"kind": "nice", "edge": comp} for comp in k2]
    qm = _count_violations(g, c, "quasi_majority")
    maj = _count_violations(g, c, "majority")
    nsd = _nsd_violations(g, sums)
    pal = [
        {"kind": "palette", "edge": list(g.edges[i]), "color": col, "k": k}
        for i, col in enumerate(c.colors)
        if col > k
    ]
    witnesses += qm + maj + nsd + pal
    return VerificationReport(
        mode=mode,
        k=k,
        nice=not k2,
        quasi_majority=not qm,
        majority=not maj,
        nsd=not nsd,
        palette=not pal,
        sums=sums,
        witnesses=witnesses,
    )


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Read ``{"k": k, "colors": [...]}`` or a bare JSON array."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringError(f"coloring is not valid JSON: {exc}") from exc
    k = None
    if isinstance(data, dict):
        k = data.get("k")
        data = data.get("colors")
    if not isinstance(data, list):
        raise ColoringError("expected a JSON list of colors")
    if len(data) != g.m:
        raise ColoringError(f"expected {g.m} colors, got {len(data)}")
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in data):
        raise ColoringError("colors must be positive integers")
    return EdgeColoring(g, data, k)


def emit_coloring(c: EdgeColoring, g: Graph | None = None) -> str:
    if g is not None and c.graph != g:
        raise ColoringError("coloring belongs to a different graph")
    return json.dumps({"k": c.k, "colors": c.colors})


def coloring_from_map(g: Graph, assignment: dict[tuple[int, int], int], k: int | None = None) -> EdgeColoring:
    """Build a coloring from an ``{(u, v): color}`` map covering every edge."""
    colors: list[int | None] = [None] * g.m
    for (u, v), col in assignment.items():
        colors[g.eid(u, v)] = col
    c = EdgeColoring(g, colors, k)
    if not c.is_total():
        raise GraphInputError("assignment does not cover every edge")
    return c
