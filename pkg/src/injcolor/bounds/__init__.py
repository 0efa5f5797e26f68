"""Constructive upper bounds: each method returns a colouring together with
the palette size it promises."""

from __future__ import annotations

from .basic import BoundResult, color_path_or_cycle, color_tree, path_or_cycle_index
from .brooks import brooks_proper_coloring
from .degree import (bipartite_bound, color_bipartite, color_general, color_subcubic_bipartite,
                     general_bound)
from .engine import ReductionStep, ReductionTrace, color_by_trace
from .mad import (MAD3, MAD73, MAD83, OUTERPLANAR, PALETTES, THRESHOLDS, color_subcubic_mad,
                  find_reducible_configuration, reduce_graph)
from .outerplanar import color_outerplanar_subcubic, reduce_outerplanar, verify_strong_property
from .probe import ProbeReport, conjecture_probe, connected_subcubic_graphs

__all__ = [
    "BoundResult", "ProbeReport", "ReductionStep", "ReductionTrace",
    "MAD3", "MAD73", "MAD83", "OUTERPLANAR", "PALETTES", "THRESHOLDS",
    "bipartite_bound", "brooks_proper_coloring", "color_bipartite", "color_by_trace",
    "color_general", "color_outerplanar_subcubic", "color_path_or_cycle",
    "color_subcubic_bipartite", "color_subcubic_mad", "color_tree", "conjecture_probe",
    "connected_subcubic_graphs", "find_reducible_configuration", "general_bound",
    "path_or_cycle_index", "reduce_graph", "reduce_outerplanar", "verify_strong_property",
]
