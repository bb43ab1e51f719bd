"""Stored base colorings (hand transcriptions and search-derived witnesses)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..coloring import EdgeColoring
from ..graph import FamilySpec, Graph, generate

__all__ = ["Fixture", "load", "names"]


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    mode: str
    k: int
    colors: tuple[int, ...]
    sums: tuple[int, ...]
    derived: bool
    provenance: str

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.graph, self.colors, self.k)


def names() -> list[str]:
    files = resources.files(__name__)
    return sorted(json.loads(p.read_text())["name"] for p in files.iterdir() if p.name.endswith(".json"))


@lru_cache(maxsize=None)
def load(name: str) -> Fixture:
    path = resources.files(__name__) / (name.replace(",", "_") + ".json")
    data = json.loads(path.read_text())
    spec = data["graph"]
    g = generate(FamilySpec(spec["family"], spec["n"], spec.get("m", 0)))
    return Fixture(data["name"], g, data["mode"], data["k"], tuple(data["colors"]),
                   tuple(data["sums"]), data["derived"], data["provenance"])
