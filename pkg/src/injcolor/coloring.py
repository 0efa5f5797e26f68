"""Edge and vertex colourings, their validators, and the two transformations
between star vertex-colourings and injective edge-colourings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import NotInjective, NotStarColoring, PartialColoring
from .graph import Graph, conflict_neighbors, connected_components, edges_conflict


@dataclass(frozen=True)
class EdgeColoring:
    """Total map edge id -> positive colour."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 1 for c in self.colors):
            raise ValueError("edge colours are positive integers")

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def normalized(self) -> "EdgeColoring":
        """Same partition into classes, colours renumbered 1..k by first use."""
        remap: dict[int, int] = {}
        for c in self.colors:
            remap.setdefault(c, len(remap) + 1)
        return EdgeColoring(tuple(remap[c] for c in self.colors))


@dataclass(frozen=True)
class VertexColoring:
    """Total map vertex id -> opaque hashable colour token."""

    colors: tuple[Hashable, ...]

    def __getitem__(self, v: int):
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.valid


def _as_colors(g: Graph, c) -> tuple[int, ...]:
    colors = c.colors if isinstance(c, EdgeColoring) else tuple(c)
    if len(colors) != g.m or any(x is None for x in colors):
        raise PartialColoring(f"expected a colour for each of the {g.m} edges")
    return colors


def _middle(g: Graph, e: int, f: int) -> int:
    """Edge joining the two conflicting edges ``e`` and ``f``."""
    a, b = g.edges[e]
    c, d = g.edges[f]
    shared = {a, b} & {c, d}
    if shared:
        (x,) = shared
        return g.edge_id(b if a == x else a, d if c == x else c)
    for u in (a, b):
        for w in (c, d):
            if g.has_edge(u, w):
                return g.edge_id(u, w)
    raise AssertionError("edges do not conflict")


def verify_injective(g: Graph, c) -> Verdict:
    """Check an edge colouring; the witness is ``(e, middle, f)`` with c(e) == c(f)."""
    colors = _as_colors(g, c)
    for e in range(g.m):
        clash = [f for f in conflict_neighbors(g, e) if f > e and colors[f] == colors[e]]
        if clash:
            f = min(clash)
            return Verdict(False, (e, _middle(g, e, f), f))
    return Verdict(True)


def is_injective(g: Graph, c) -> bool:
    return verify_injective(g, c).valid


def verify_star_coloring(g: Graph, vc) -> Verdict:
    """Proper, and no path on four vertices carries only two colours.

    Witness: an edge ``(u, v)`` for improperness, else a 4-vertex path.
    """
    col = vc.colors if isinstance(vc, VertexColoring) else tuple(vc)
    if len(col) != g.n:
        raise PartialColoring(f"expected a colour for each of the {g.n} vertices")
    for u, v in g.edges:
        if col[u] == col[v]:
            return Verdict(False, (u, v))
    for b, c in g.edges:
        for x, y in ((b, c), (c, b)):
            for a in sorted(g.adjacency[x]):
                if a == y or col[a] != col[y]:
                    continue
                for d in sorted(g.adjacency[y]):
                    if d != x and d != a and col[d] == col[x]:
                        return Verdict(False, (a, x, y, d))
    return Verdict(True)


# -- induced star forests -------------------------------------------------------

@dataclass(frozen=True)
class StarForestDecomposition:
    classes: tuple[frozenset[int], ...]

    def to_coloring(self, m: int) -> EdgeColoring:
        colors = [0] * m
        for i, cls in enumerate(self.classes, start=1):
            for e in cls:
                colors[e] = i
        return EdgeColoring(tuple(colors))


def is_induced_star_forest(g: Graph, edge_ids: Iterable[int]) -> bool:
    """Every component is a star and no other edge of ``g`` joins its vertices."""
    ids = set(edge_ids)
    verts = {x for e in ids for x in g.edges[e]}
    for u in verts:
        for e in g.incident[u]:
            if e not in ids and (g.edges[e][0] in verts and g.edges[e][1] in verts):
                return False
    # in a star forest every edge has an endpoint of class-degree one
    deg: dict[int, int] = {}
    for e in ids:
        for x in g.edges[e]:
            deg[x] = deg.get(x, 0) + 1
    for e in ids:
        u, v = g.edges[e]
        if deg[u] > 1 and deg[v] > 1:
            return False
    return True


def star_forest_decomposition(g: Graph, c) -> StarForestDecomposition:
    colors = _as_colors(g, c)
    verdict = verify_injective(g, colors)
    if not verdict:
        raise NotInjective(f"conflict {verdict.witness}")
    by_color: dict[int, set[int]] = {}
    for e, col in enumerate(colors):
        by_color.setdefault(col, set()).add(e)
    classes = tuple(frozenset(by_color[k]) for k in sorted(by_color))
    for cls in classes:
        assert is_induced_star_forest(g, cls), cls
    return StarForestDecomposition(classes)


# -- transformations ------------------------------------------------------------

def _sort_tokens(tokens):
    try:
        return sorted(tokens)
    except TypeError:
        return sorted(tokens, key=repr)


def star_to_injective(g: Graph, vc) -> EdgeColoring:
    """Colour each edge by the unordered pair of its endpoint colours.

    Uses at most k(k-1)/2 colours for a star colouring with k colours.
    """
    col = vc.colors if isinstance(vc, VertexColoring) else tuple(vc)
    verdict = verify_star_coloring(g, col)
    if not verdict:
        raise NotStarColoring(f"violation {verdict.witness}")
    rank = {t: i for i, t in enumerate(_sort_tokens(set(col)))}
    pairs = []
    for u, v in g.edges:
        i, j = sorted((rank[col[u]], rank[col[v]]))
        pairs.append((i, j))
    dense = {p: k for k, p in enumerate(sorted(set(pairs)), start=1)}
    return EdgeColoring(tuple(dense[p] for p in pairs))


def injective_to_star(g: Graph, c) -> VertexColoring:
    """Colour every vertex by the set of edge colours around it (as a 0/1 tuple).

    Degree-one vertices get the all-zero vector.  An isolated edge has both
    ends of degree one, so one end instead gets the unit vector of its colour.
    """
    colors = _as_colors(g, c)
    verdict = verify_injective(g, colors)
    if not verdict:
        raise NotInjective(f"conflict {verdict.witness}")
    palette = sorted(set(colors))
    pos = {col: i for i, col in enumerate(palette)}
    k = len(palette)
    zero = (0,) * k
    out: list[tuple[int, ...]] = [zero] * g.n
    for comp in connected_components(g):
        if len(comp) == 2:
            u, v = comp
            bits = [0] * k
            bits[pos[colors[g.edge_id(u, v)]]] = 1
            out[u], out[v] = zero, tuple(bits)
            continue
        for v in comp:
            if g.degree(v) < 2:
                continue
            bits = [0] * k
            for e in g.incident[v]:
                bits[pos[colors[e]]] = 1
            out[v] = tuple(bits)
    return VertexColoring(tuple(out))


# -- helpers used by tests and the acceptance suite ----------------------------

def _star_ok_at(g: Graph, col: list, v: int) -> bool:
    """No violation involving the freshly coloured vertex ``v`` (None = uncoloured)."""
    cv = col[v]
    adj = g.adjacency
    for a in adj[v]:
        if col[a] == cv:
            return False
    # v as an end vertex: v-a-b-d with col(b) == col(v), col(d) == col(a)
    for a in adj[v]:
        ca = col[a]
        if ca is None:
            continue
        for b in adj[a]:
            if b == v or col[b] != cv:
                continue
            for d in adj[b]:
                if d != a and d != v and col[d] == ca:
                    return False
    # v as an inner vertex: x-v-y-z with col(x) == col(y), col(z) == col(v)
    for y in adj[v]:
        cy = col[y]
        if cy is None:
            continue
        has_x = any(x != y and col[x] == cy for x in adj[v])
        if not has_x:
            continue
        for z in adj[y]:
            if z != v and col[z] == cv:
                # need x distinct from z
                if any(x != y and x != z and col[x] == cy for x in adj[v]):
                    return False
    return True


def greedy_star_coloring(g: Graph, order: Sequence[int] | None = None) -> VertexColoring:
    """Smallest-colour-first star colouring along ``order`` (default 0..n-1)."""
    col: list = [None] * g.n
    for v in order if order is not None else range(g.n):
        c = 1
        while True:
            col[v] = c
            if _star_ok_at(g, col, v):
                break
            c += 1
    return VertexColoring(tuple(col))


def brute_force_injective_check(g: Graph, colors: Sequence[int]) -> bool:
    """Quadratic definitional check used as an oracle in tests."""
    for e, f in combinations(range(g.m), 2):
        if colors[e] == colors[f] and edges_conflict(g, e, f):
            return False
    return True
