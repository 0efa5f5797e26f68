"""Injective edge-colouring of graphs.

Two edges conflict when they are the end edges of a path of length three
or lie in a common triangle; an injective edge-colouring gives conflicting
edges different colours.  The package offers an exact solver, constructive
upper bounds for sparse graphs, the star-colouring correspondence and a
small command-line tool.
"""

from __future__ import annotations

from .coloring import (EdgeColoring, VertexColoring, Verdict, injective_to_star, is_injective,
                       star_to_injective, verify_injective, verify_star_coloring)
from .errors import InjColorError
from .graph import Graph, conflict_graph, edges_conflict, mad_exact
from .solver import SolveResult, brute_force_index, injective_chromatic_index, is_k_colorable

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring", "Graph", "InjColorError", "SolveResult", "Verdict", "VertexColoring",
    "brute_force_index", "conflict_graph", "edges_conflict", "injective_chromatic_index",
    "injective_to_star", "is_injective", "is_k_colorable", "mad_exact", "star_to_injective",
    "verify_injective", "verify_star_coloring",
]
