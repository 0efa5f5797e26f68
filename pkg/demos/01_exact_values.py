"""Exact injective chromatic indices of a few classical graphs.

For each graph we print the index, the size of the conflict clique used as
a lower bound, and one optimal colouring.  When the clique is smaller than
the index, the solver had to prove that index - 1 colours do not suffice.
"""

from __future__ import annotations

from injcolor import corpus
from injcolor.solver import brute_force_index, injective_chromatic_index

NAMES = ["P6", "C5", "C8", "K3_3", "K4", "prism", "petersen", "heawood",
         "fig1_bipartite_cubic", "fig2_sun", "fig3_outerplanar"]


def main() -> None:
    print(f"{'graph':<22}{'n':>4}{'m':>4}{'index':>7}{'clique':>8}  colouring")
    for name in NAMES:
        g = corpus.get(name).graph
        res = injective_chromatic_index(g)
        colours = "".join(str(c) for c in res.coloring)
        print(f"{name:<22}{g.n:>4}{g.m:>4}{res.index:>7}{len(res.lower_bound_certificate):>8}  {colours}")

    # the Petersen graph has no fixture value; the brute-force oracle agrees
    pet = corpus.get("petersen").graph
    print("\npetersen, definitional brute force:", brute_force_index(pet))


if __name__ == "__main__":
    main()
