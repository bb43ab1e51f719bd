"""Compare constructed palette sizes against the exact search on families."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

from .exact import SearchBudget, min_index
from .families import (color_complete, color_complete_bipartite, color_cycle, color_path,
                       color_tree, has_equal_even_adjacency)
from .graph import FamilySpec, build_graph, generate, is_nice
from .majority import mnsd_complete, mnsd_complete_bipartite

__all__ = ["Row", "HarnessConfig", "build_tasks", "run", "to_tsv", "FAMILY_NAMES", "bipartite_survey"]

FAMILY_NAMES = ("path", "cycle", "complete", "complete_bipartite", "tree",
                "majority_complete", "majority_complete_bipartite")


@dataclass
class Row:
    family: str
    params: tuple[int, ...]
    mode: str
    edges: int
    constructed_k: int
    predicted_k: int | None
    oracle_k: int | None
    status: str  # match, mismatch, skipped, unknown

    @property
    def key(self):
        return (self.family, self.params)


@dataclass
class HarnessConfig:
    families: tuple[str, ...] = FAMILY_NAMES
    max_n: int = 12
    trees: int = 200
    tree_max_n: int = 12
    seed: int = 0
    oracle_max_edges: int = 12
    time_limit: float = 20.0
    node_limit: int | None = None


@dataclass(frozen=True)
class Task:
    family: str
    params: tuple[int, ...]


def build_tasks(cfg: HarnessConfig) -> list[Task]:
    tasks: list[Task] = []
    top = cfg.max_n
    for fam in cfg.families:
        if fam in ("path", "cycle", "complete", "majority_complete"):
            tasks += [Task(fam, (n,)) for n in range(3, top + 1)]
        elif fam == "complete_bipartite":
            tasks += [Task(fam, (n, m)) for n in range(1, top + 1) for m in range(n, top + 1)
                      if (n, m) != (1, 1) and n + m <= top]
        elif fam == "majority_complete_bipartite":
            tasks += [Task(fam, (n, m)) for n in range(2, top + 1) for m in range(n, top + 1)
                      if n + m <= top]
        elif fam == "tree":
            rng = random.Random(cfg.seed)
            for i in range(cfg.trees):
                n = rng.randint(3, cfg.tree_max_n)
                tasks.append(Task(fam, (n, rng.getrandbits(32))))
        else:
            raise ValueError(f"unknown family {fam!r}")
    return tasks


def _construct(task: Task):
    fam, p = task.family, task.params
    makers: dict[str, Callable] = {
        "path": color_path, "cycle": color_cycle, "complete": color_complete,
        "complete_bipartite": color_complete_bipartite,
        "majority_complete": mnsd_complete,
        "majority_complete_bipartite": mnsd_complete_bipartite,
    }
    if fam == "tree":
        g = generate(FamilySpec("random_tree", p[0], seed=p[1]))
        k, c = color_tree(g)
        return g, k, 3 if has_equal_even_adjacency(g) else 2, "quasi_majority"
    k, c = makers[fam](*p)
    mode = "majority" if fam.startswith("majority") else "quasi_majority"
    return c.graph, k, None, mode


def _evaluate(args) -> Row:
    task, cfg = args
    g, k, predicted, mode = _construct(task)
    oracle = None
    status = "skipped"
    if g.m <= cfg.oracle_max_edges:
        res = min_index(g, mode, SearchBudget(max(k, 1) + 1, cfg.node_limit, cfg.time_limit), workers=1)
        if res.status == "exact":
            oracle = res.k
            ok = oracle == k and (predicted is None or predicted == k)
            status = "match" if ok else "mismatch"
        else:
            status = "unknown"
    elif predicted is not None and predicted != k:
        status = "mismatch"
    return Row(task.family, task.params, mode, g.m, k, predicted, oracle, status)


def run(cfg: HarnessConfig, workers: int | None = None) -> list[Row]:
    if workers is None:
        workers = max(1, int(os.environ.get("NSD_FORGE_THREADS", "1") or 1))
    jobs = [(t, cfg) for t in build_tasks(cfg)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate, jobs, chunksize=8))
    else:
        rows = [_evaluate(j) for j in jobs]
    return sorted(rows, key=lambda r: r.key)


def to_tsv(rows: list[Row]) -> str:
    head = "family\tparams\tmode\tedges\tconstructed_k\tpredicted_k\toracle_k\tstatus"
    lines = [head]
    for r in rows:
        cells = [r.family, ",".join(map(str, r.params)), r.mode, r.edges, r.constructed_k,
                 "" if r.predicted_k is None else r.predicted_k,
                 "" if r.oracle_k is None else r.oracle_k, r.status]
        lines.append("\t".join(map(str, cells)))
    return "\n".join(lines) + "\n"


def to_records(rows: list[Row]) -> list[dict]:
    return [asdict(r) for r in rows]


def bipartite_survey(samples: int, seed: int = 0, max_side: int = 5,
                     time_limit: float = 5.0) -> dict:
    """Exact QM indices of small random nice bipartite graphs.

    Records how often each index occurs; nothing is concluded from it.
    """
    rng = random.Random(seed)
    hist: dict[int, int] = {}
    unknown = 0
    worst: list[tuple[int, int]] | None = None
    done = 0
    while done < samples:
        a, b = rng.randint(1, max_side), rng.randint(1, max_side)
        edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.5]
        g = build_graph(a + b, edges)
        if not g.m or not is_nice(g):
            continue
        done += 1
        res = min_index(g, "quasi_majority", SearchBudget(6, None, time_limit), workers=1)
        if res.k is None:
            unknown += 1
            continue
        hist[res.k] = hist.get(res.k, 0) + 1
        if res.k == max(hist):
            worst = list(g.edges)
    return {"samples": samples, "histogram": dict(sorted(hist.items())),
            "max_observed": max(hist) if hist else None, "unknown": unknown, "example": worst}
