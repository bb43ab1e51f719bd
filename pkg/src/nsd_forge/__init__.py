"""Neighbor-sum-distinguishing edge colorings under quasi-majority and majority caps."""

from __future__ import annotations

from .coloring import EdgeColoring, VerificationReport, verify
from .dispatch import color_graph
from .exact import KERNEL, SearchBudget, find_coloring, min_index
from .graph import FamilySpec, Graph, GraphInputError, build_graph, generate, read_graph

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring",
    "FamilySpec",
    "Graph",
    "GraphInputError",
    "KERNEL",
    "SearchBudget",
    "VerificationReport",
    "build_graph",
    "color_graph",
    "find_coloring",
    "generate",
    "min_index",
    "read_graph",
    "verify",
]
