"""Simple undirected graphs, structural queries and the edge conflict graph.

Vertices are ``0..n-1`` and edges are numbered ``0..m-1`` in insertion
order.  Everything in this module is immutable and side-effect free.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    LoopEdge,
    NotBipartite,
    SameEdge,
    VertexOutOfRange,
)

Edge = tuple[int, int]


class Graph:
    """Immutable finite simple graph with stable vertex and edge ids."""

    __slots__ = ("n", "edges", "adjacency", "incident", "_index", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized: list[Edge] = []
        index: dict[Edge, int] = {}
        adjacency: list[set[int]] = [set() for _ in range(n)]
        incident: list[list[int]] = [[] for _ in range(n)]
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise DuplicateEdge(f"edge {key} appears twice")
            index[key] = len(normalized)
            incident[u].append(len(normalized))
            incident[v].append(len(normalized))
            normalized.append(key)
            adjacency[u].add(v)
            adjacency[v].add(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normalized)
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adjacency)
        self.incident: tuple[tuple[int, ...], ...] = tuple(tuple(i) for i in incident)
        self._index = index
        self._hash = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """Id of edge ``uv``; ``KeyError`` when absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def subgraph_edges(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph keeping only ``edge_ids`` (vertex ids preserved)."""
        keep = sorted(set(edge_ids))
        return Graph(self.n, [self.edges[i] for i in keep])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` plus the old ids."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        pairs = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), pairs), old

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``pairs`` and return the corresponding :class:`Graph`."""
    return Graph(n, pairs)


def degrees(g: Graph) -> list[int]:
    return [len(a) for a in g.adjacency]


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("maximum degree of the empty graph")
    return max(degrees(g))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the empty graph")
    return min(degrees(g))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]
    delta_a: int
    delta_b: int


def bipartition(g: Graph) -> Bipartition:
    """Two-colour ``g`` by BFS; the least vertex of each component goes to side A.

    Raises :class:`NotBipartite` carrying an odd cycle (as a vertex list).
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(g.adjacency[x]):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    raise NotBipartite(_odd_cycle(parent, x, y))
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(v for v in range(g.n) if side[v] == 1)
    deg = degrees(g)
    return Bipartition(
        side_a=a,
        side_b=b,
        delta_a=max((deg[v] for v in a), default=0),
        delta_b=max((deg[v] for v in b), default=0),
    )


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    # x and y are adjacent and on the same BFS level parity
    path_x = [x]
    while parent[path_x[-1]] != -1:
        path_x.append(parent[path_x[-1]])
    path_y = [y]
    while parent[path_y[-1]] != -1:
        path_y.append(parent[path_y[-1]])
    on_x = set(path_x)
    lca = next(v for v in path_y if v in on_x)
    left = path_x[: path_x.index(lca) + 1]
    right = path_y[: path_y.index(lca)]
    return left[::-1] + right  # lca ... x, y ... (back to lca)


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except NotBipartite:
        return False
    return True


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


# -- maximum average degree -------------------------------------------------

def _denser_than(g: Graph, threshold: Fraction) -> bool:
    """True iff some non-empty vertex set S has 2|E(S)| > threshold * |S|.

    Selection-problem min cut: each edge pays 2q, each chosen vertex costs p.
    """
    p, q = threshold.numerator, threshold.denominator
    if g.m == 0:
        return threshold < 0
    net = nx.DiGraph()
    for i, (u, v) in enumerate(g.edges):
        node = ("e", i)
        net.add_edge("s", node, capacity=2 * q)
        net.add_edge(node, ("v", u))
        net.add_edge(node, ("v", v))
    for v in range(g.n):
        if g.adjacency[v]:
            net.add_edge(("v", v), "t", capacity=p)
    cut = nx.minimum_cut_value(net, "s", "t")
    return 2 * q * g.m - cut > 0


def density_candidates(g: Graph) -> list[Fraction]:
    """Every value ``2e/v`` that an induced subgraph of ``g`` could attain."""
    values = set()
    for v in range(1, g.n + 1):
        for e in range(0, min(g.m, v * (v - 1) // 2) + 1):
            values.add(Fraction(2 * e, v))
    return sorted(values)


def mad_exact(g: Graph) -> Fraction:
    """Maximum average degree as an exact fraction.

    Binary search over :func:`density_candidates`, one min cut per probe.
    """
    if g.n == 0:
        raise EmptyGraph("mad of the empty graph")
    cands = density_candidates(g)
    lo, hi = 0, len(cands) - 1
    # invariant: mad > cands[i] for i < lo, and mad <= cands[hi]
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_than(g, cands[mid]):
            lo = mid + 1
        else:
            hi = mid
    return cands[lo]


# -- conflicts ----------------------------------------------------------------

def edges_conflict(g: Graph, e: int, f: int) -> bool:
    """Whether edges ``e`` and ``f`` may not share a colour.

    They conflict when they are the two end edges of a path of length three,
    or when they lie on a common triangle.  Merely adjacent edges do not.
    """
    if e == f:
        raise SameEdge(f"edge {e} compared with itself")
    a, b = g.edges[e]
    c, d = g.edges[f]
    shared = {a, b} & {c, d}
    if shared:
        (x,) = shared
        y = b if a == x else a
        z = d if c == x else c
        return g.has_edge(y, z)
    adj = g.adjacency
    return c in adj[a] or d in adj[a] or c in adj[b] or d in adj[b]


def conflict_neighbors(g: Graph, e: int) -> set[int]:
    """All edges in conflict with ``e``."""
    a, b = g.edges[e]
    around = {a, b} | g.adjacency[a] | g.adjacency[b]
    out = set()
    for x in around:
        for f in g.incident[x]:
            if f != e and f not in out and edges_conflict(g, e, f):
                out.add(f)
    return out


@dataclass(frozen=True)
class ConflictGraph:
    """Graph on the edge ids of ``source``; adjacency means "conflict"."""

    base: Graph
    source: Graph

    def source_edge(self, vertex: int) -> Edge:
        return self.source.edges[vertex]


def conflict_graph(g: Graph) -> ConflictGraph:
    pairs = []
    for e in range(g.m):
        for f in conflict_neighbors(g, e):
            if e < f:
                pairs.append((e, f))
    pairs.sort()
    return ConflictGraph(base=Graph(g.m, pairs), source=g)


def conflict_masks(g: Graph) -> list[int]:
    """Conflict neighbourhoods of the edges as integer bitmasks."""
    masks = [0] * g.m
    for e in range(g.m):
        for f in conflict_neighbors(g, e):
            masks[e] |= 1 << f
    return masks
