"""Every constructive bound next to the exact value.

The constructive methods never search: they follow a proof.  Here we run
each one on a graph that satisfies its hypothesis and compare the palette
it uses with the bound it promises and with the true index.
"""

from __future__ import annotations

import random

from injcolor import corpus
from injcolor.bounds import (color_bipartite, color_general, color_outerplanar_subcubic,
                             color_path_or_cycle, color_subcubic_bipartite, color_subcubic_mad,
                             color_tree)
from injcolor.generators import random_sparse_subcubic, random_tree
from injcolor.graph import mad_exact
from injcolor.solver import injective_chromatic_index

rng = random.Random(1)
sparse = random_sparse_subcubic(12, rng)

CASES = [
    ("pathcycle", color_path_or_cycle, corpus.get("C10").graph),
    ("tree", color_tree, random_tree(15, rng)),
    ("general", color_general, corpus.get("petersen").graph),
    ("bipartite", color_bipartite, corpus.get("K4_7").graph),
    ("subcubic-bipartite", color_subcubic_bipartite, corpus.get("heawood").graph),
    ("mad73", lambda g: color_subcubic_mad(g, "mad73"), corpus.get("fig2_sun").graph),
    ("mad3", lambda g: color_subcubic_mad(g, "mad3"), sparse),
    ("outerplanar", color_outerplanar_subcubic, corpus.get("fig3_outerplanar").graph),
]


def main() -> None:
    print(f"{'method':<20}{'m':>4}{'mad':>8}{'used':>6}{'bound':>7}{'exact':>7}")
    for method, color, g in CASES:
        res = color(g)
        exact = injective_chromatic_index(g).index
        print(f"{method:<20}{g.m:>4}{str(mad_exact(g)):>8}{res.palette_size:>6}"
              f"{res.bound_claimed:>7}{exact:>7}")


if __name__ == "__main__":
    main()
