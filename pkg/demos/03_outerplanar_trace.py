"""Watch the outerplanar algorithm take the fig3 graph apart and colour it back.

Configurations are peeled off one at a time.  Colouring replays the list
backwards, each step extending the colouring over the edges it removed.
The result uses five colours, which this graph needs.
"""

from __future__ import annotations

from injcolor import corpus
from injcolor.bounds import color_outerplanar_subcubic, verify_strong_property
from injcolor.corpus import FIG3_LABELS


def label(v: int) -> str:
    return FIG3_LABELS[v]


def main() -> None:
    g = corpus.get("fig3_outerplanar").graph
    res = color_outerplanar_subcubic(g)
    print("reduction steps (first removed first):")
    for i, step in enumerate(res.trace.steps):
        roles = ", ".join(f"{k}={label(v)}" for k, v in step.roles.items() if isinstance(v, int))
        edges = " ".join(f"{label(g.edges[e][0])}{label(g.edges[e][1])}" for e in step.removed)
        print(f"  {i}: {step.kind:<16} [{roles}]  removes {edges}")
    print("\nfinal colouring:")
    for e, (u, v) in enumerate(g.edges):
        print(f"  {label(u)}-{label(v)}: {res.coloring[e]}")
    print("\ncolours used:", res.palette_size)
    print("every 3-edge path through two 2-vertices shows two colours:",
          bool(verify_strong_property(g, res.coloring)))


if __name__ == "__main__":
    main()
