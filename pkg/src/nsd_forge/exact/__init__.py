"""Exact search for QM / majority NSD colorings.

The hot loop lives in a compiled kernel (``_kernel``); when it is not
built, the pure-Python ``_kernel_py`` is used instead.  ``KERNEL`` names
the active one.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..coloring import EdgeColoring, MODES, cap, verify
from ..graph import Graph, GraphInputError, is_nice
from . import _kernel_py

try:
    from . import _kernel as _native
except ImportError:  # pragma: no cover - depends on the build
    _native = None

_kernel = _native if _native is not None else _kernel_py
KERNEL = "cython" if _native is not None else "python"

__all__ = [
    "KERNEL",
    "SearchBudget",
    "SearchResult",
    "IndexResult",
    "find_coloring",
    "min_index",
    "complete_partial",
    "check_instance",
]

_STATUS = {_kernel_py.FOUND: "found", _kernel_py.NONE: "none", _kernel_py.UNKNOWN: "unknown"}


@dataclass(frozen=True)
class SearchBudget:
    max_k: int = 12
    node_limit: int | None = None
    time_limit: float | None = None

    def __post_init__(self):
        if self.max_k < 1:
            raise ValueError("max_k must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class SearchResult:
    status: str  # "found", "none" or "unknown"
    k: int
    coloring: EdgeColoring | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass
class IndexResult:
    status: str  # "exact" or "unknown"
    k: int | None
    witness: EdgeColoring | None
    lower: int  # every palette below this was refuted
    nodes: int = 0
    per_k: dict[int, str] = field(default_factory=dict)


def check_instance(g: Graph, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if not is_nice(g):
        raise GraphInputError("graph has a K2 component; no NSD coloring exists")
    if mode == "majority":
        low = [v for v in range(g.n) if g.degree(v) == 1]
        if low:
            raise GraphInputError(
                f"majority colorings need minimum degree >= 2; vertex {low[0]} has degree 1"
            )


def _regular(g: Graph) -> bool:
    degs = {g.degree(v) for v in range(g.n)}
    return len(degs) == 1


def _threads() -> int:
    raw = os.environ.get("NSD_FORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run(args):
    return _kernel.search(*args)


def _search(g, mode, k, domains, forbidden, first_max, budget, workers):
    caps = [cap(g.degree(v), mode) for v in range(g.n)]
    forb = [set(forbidden.get(v, ())) for v in range(g.n)]
    edges = list(g.edges)
    base = (g.n, edges, k, caps, domains, forb, True, first_max,
            budget.node_limit, budget.time_limit)
    if workers <= 1 or g.m < 12:
        status, colors, nodes = _kernel.search(*base)
        return status, colors, nodes
    # split on the first edge's colors; keep the smallest color that works,
    # which is exactly what the sequential search would return
    branches = []
    for c in range(1, min(k, first_max) + 1):
        if (domains[0] >> c) & 1:
            dom = list(domains)
            dom[0] = 1 << c
            branches.append((g.n, edges, k, caps, dom, forb, True, k,
                             budget.node_limit, budget.time_limit))
    with ProcessPoolExecutor(max_workers=min(workers, len(branches) or 1)) as pool:
        results = list(pool.map(_run, branches))
    nodes = sum(r[2] for r in results)
    for status, colors, _ in results:
        if status == _kernel_py.FOUND:
            return status, colors, nodes
    if any(r[0] == _kernel_py.UNKNOWN for r in results):
        return _kernel_py.UNKNOWN, None, nodes
    return _kernel_py.NONE, None, nodes


def _finish(g, mode, k, status, colors, nodes) -> SearchResult:
    if status != _kernel_py.FOUND:
        return SearchResult(_STATUS[status], k, None, nodes)
    c = EdgeColoring(g, colors, k)
    report = verify(g, c, mode, k)
    if not report.passed:  # pragma: no cover - would be a kernel bug
        raise AssertionError(f"search returned an invalid coloring: {report.witnesses[:3]}")
    return SearchResult("found", k, c, nodes)


def find_coloring(
    g: Graph,
    mode: str = "quasi_majority",
    k: int = 3,
    budget: SearchBudget | None = None,
    workers: int | None = None,
) -> SearchResult:
    """Search for an NSD coloring with colors ``1..k`` obeying the mode's caps."""
    check_instance(g, mode)
    budget = budget or SearchBudget()
    workers = _threads() if workers is None else workers
    full = (1 << (k + 1)) - 2
    domains = [full] * g.m
    # reversing colors (c -> k+1-c) preserves NSD when all degrees agree
    first_max = (k + 1) // 2 if _regular(g) else k
    status, colors, nodes = _search(g, mode, k, domains, {}, first_max, budget, workers)
    return _finish(g, mode, k, status, colors, nodes)


def min_index(
    g: Graph,
    mode: str = "quasi_majority",
    budget: SearchBudget | None = None,
    workers: int | None = None,
) -> IndexResult:
    """Smallest palette admitting a coloring, trying ``k = 1, 2, ...``.

    A budget-exhausted ``k`` stops the scan with status ``"unknown"``;
    ``lower`` then records the palettes that were refuted outright.
    """
    check_instance(g, mode)
    budget = budget or SearchBudget()
    started = time.perf_counter()
    total = 0
    per_k: dict[int, str] = {}
    for k in range(1, budget.max_k + 1):
        remaining = None
        if budget.time_limit is not None:
            remaining = budget.time_limit - (time.perf_counter() - started)
            if remaining <= 0:
                return IndexResult("unknown", None, None, k, total, per_k)
        step = SearchBudget(budget.max_k, budget.node_limit, remaining)
        res = find_coloring(g, mode, k, step, workers)
        total += res.nodes
        per_k[k] = res.status
        if res.status == "found":
            return IndexResult("exact", k, res.coloring, k, total, per_k)
        if res.status == "unknown":
            return IndexResult("unknown", None, None, k, total, per_k)
    return IndexResult("unknown", None, None, budget.max_k + 1, total, per_k)


def complete_partial(
    g: Graph,
    partial: EdgeColoring,
    frozen: Iterable[int] | None = None,
    mode: str = "quasi_majority",
    k: int | None = None,
    forbidden: Mapping[int, Iterable[int]] | None = None,
    budget: SearchBudget | None = None,
) -> SearchResult:
    """Extend ``partial`` keeping the colors of ``frozen`` edges.

    ``frozen`` defaults to every colored edge of ``partial``.  ``forbidden``
    maps a vertex to sums it must avoid.
    """
    check_instance(g, mode)
    if partial.graph != g:
        raise GraphInputError("partial coloring belongs to a different graph")
    budget = budget or SearchBudget()
    if frozen is None:
        frozen = [i for i, c in enumerate(partial.colors) if c is not None]
    k = budget.max_k if k is None else k
    full = (1 << (k + 1)) - 2
    domains = [full] * g.m
    for i in frozen:
        c = partial.colors[i]
        if c is None:
            raise GraphInputError(f"frozen edge {g.edges[i]} has no color")
        domains[i] = (1 << c) if c <= k else 0
    status, colors, nodes = _search(g, mode, k, domains, dict(forbidden or {}), k, budget, 1)
    return _finish(g, mode, k, status, colors, nodes)
