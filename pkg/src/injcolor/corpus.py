"""Named fixture graphs with known injective chromatic indices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import networkx as nx

from .errors import FixtureError, UnknownName
from .graph import Graph, degrees, girth, is_bipartite, mad_exact


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    expected_index: int | None
    provenance: str
    expected_mad: Fraction | None = None


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def heawood() -> Graph:
    """LCF notation [5, -5]^7: a 14-cycle plus chords i -> i+5 for even i."""
    pairs = [(i, (i + 1) % 14) for i in range(14)]
    pairs += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, pairs)


def fig1_bipartite_cubic() -> Graph:
    # v1..v10 -> 0..9
    named = [(1, 3), (1, 4), (1, 7), (2, 3), (2, 4), (2, 6), (3, 8), (4, 5), (5, 6),
             (5, 10), (6, 9), (7, 8), (7, 9), (8, 10), (9, 10)]
    return Graph(10, [(a - 1, b - 1) for a, b in named])


def fig2_sun() -> Graph:
    """C5 on 0..4 with a pendant vertex i+5 on every cycle vertex i."""
    return Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)])


FIG3_LABELS = ("u", "u1", "u2", "u3", "u4", "u5", "v", "v1", "v2", "v3", "v4", "v5")


def fig3_outerplanar() -> Graph:
    ix = {name: i for i, name in enumerate(FIG3_LABELS)}
    named = ["u u1", "u u2", "u1 u2", "u v", "u1 u5", "u2 u3", "u3 u4", "u4 u5", "u3 u5",
             "v v1", "v v2", "v1 v2", "v1 v5", "v2 v3", "v3 v4", "v4 v5", "v3 v5"]
    return Graph(12, [(ix[a], ix[b]) for a, b in (s.split() for s in named)])


PROP_PATHS = "paths: index 2 for n >= 4 (Cardoso et al.)"
PROP_CYCLES = "cycles: index 2 if n = 0 mod 4, else 3 (Cardoso et al.)"


@lru_cache(maxsize=None)
def _table() -> dict[str, NamedGraph]:
    t: dict[str, NamedGraph] = {}

    def add(ng: NamedGraph) -> None:
        t[ng.name] = ng

    for n in range(2, 13):
        idx = 1 if n <= 3 else 2
        prov = PROP_PATHS if n >= 4 else "trivial: all edges pairwise adjacent, no triangle"
        add(NamedGraph(f"P{n}", path(n), idx, prov))
    for n in range(3, 13):
        add(NamedGraph(f"C{n}", cycle(n), 2 if n % 4 == 0 else 3, PROP_CYCLES, Fraction(2)))
    for k in range(2, 9):
        add(NamedGraph(f"K1_{k}", star(k), 1, "stars need one colour"))
    add(NamedGraph("K3_3", complete_bipartite(3, 3), 3, "complete bipartite K_{p,q}: min(p,q)", Fraction(3)))
    add(NamedGraph("K4_7", complete_bipartite(4, 7), 4, "complete bipartite K_{p,q}: min(p,q)", Fraction(56, 11)))
    add(NamedGraph("K4", complete(4), 6, "cubic graph with index 6", Fraction(3)))
    add(NamedGraph("prism", prism(), 6, "cubic graph with index 6", Fraction(3)))
    add(NamedGraph("petersen", petersen(), None, "value recorded by the exact solver", Fraction(3)))
    add(NamedGraph("heawood", heawood(), 4, "(3,6)-cage, 4-colourable and optimal", Fraction(3)))
    add(NamedGraph("fig1_bipartite_cubic", fig1_bipartite_cubic(), 5,
                   "cubic bipartite graph needing 5 colours", Fraction(3)))
    add(NamedGraph("fig2_sun", fig2_sun(), 4, "subcubic, mad 2, index 4", Fraction(2)))
    add(NamedGraph("fig3_outerplanar", fig3_outerplanar(), 5,
                   "outerplanar with max degree 3 needing 5 colours"))
    return t


def names() -> list[str]:
    return list(_table())


def get(name: str) -> NamedGraph:
    try:
        return _table()[name]
    except KeyError:
        raise UnknownName(name) from None


def all_graphs() -> list[NamedGraph]:
    return list(_table().values())


def check_structure(name: str) -> None:
    """Structural facts the transcribed fixtures must satisfy.

    Raises :class:`FixtureError`: a failure means the fixture is wrong.
    """
    ng = get(name)
    g = ng.graph
    deg = degrees(g)
    if name == "fig1_bipartite_cubic":
        if set(deg) != {3} or not is_bipartite(g):
            raise FixtureError("fig1 must be cubic and bipartite")
    elif name == "fig3_outerplanar":
        if max(deg) != 3:
            raise FixtureError("fig3 must have maximum degree 3")
    elif name == "fig2_sun":
        if max(deg) > 3 or mad_exact(g) != 2:
            raise FixtureError("fig2 must be subcubic with mad exactly 2")
    elif name == "heawood":
        if (g.n, g.m) != (14, 21) or girth(g) != 6 or nx.diameter(g.to_networkx()) != 3:
            raise FixtureError("heawood must have 14 vertices, 21 edges, girth 6, diameter 3")
    if ng.expected_mad is not None and mad_exact(g) != ng.expected_mad:
        raise FixtureError(f"{name}: mad differs from the recorded value")
