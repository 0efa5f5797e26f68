"""Constructive Brooks colouring: at most Δ colours unless a component is
complete or an odd cycle."""

from __future__ import annotations

from collections import deque

import networkx as nx

from ..coloring import VertexColoring
from ..graph import Graph, connected_components


def _bfs_order(adj: dict[int, set[int]], root: int) -> list[int]:
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def _greedy(adj: dict[int, set[int]], order: list[int], color: dict[int, int]) -> None:
    for v in order:
        used = {color[w] for w in adj[v] if w in color}
        c = 1
        while c in used:
            c += 1
        color[v] = c


def _color_regular_2connected(adj: dict[int, set[int]]) -> dict[int, int]:
    """Find v with non-adjacent neighbours u, w such that removing u, w keeps
    the graph connected; colour u, w alike and finish greedily towards v."""
    verts = sorted(adj)
    for v in verts:
        nb = sorted(adj[v])
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if w in adj[u]:
                    continue
                rest = {x: adj[x] - {u, w} for x in verts if x not in (u, w)}
                order = _bfs_order(rest, v)
                if len(order) != len(rest):
                    continue
                color = {u: 1, w: 1}
                _greedy(adj, order[::-1], color)
                return color
    raise AssertionError("2-connected regular graph without a Brooks triple")


def _color_component(adj: dict[int, set[int]]) -> dict[int, int]:
    verts = sorted(adj)
    if len(verts) == 1:
        return {verts[0]: 1}
    deg = {v: len(adj[v]) for v in verts}
    delta = max(deg.values())
    if all(deg[v] == len(verts) - 1 for v in verts):
        return {v: i + 1 for i, v in enumerate(verts)}
    color: dict[int, int] = {}
    if delta <= 2:
        # path or cycle: greedy along the walk gives 2 colours, or 3 on odd cycles
        start = next((v for v in verts if deg[v] == 1), verts[0])
        walk = [start]
        prev = None
        while True:
            nxt = [w for w in sorted(adj[walk[-1]]) if w != prev and w not in walk]
            if not nxt:
                break
            prev = walk[-1]
            walk.append(nxt[0])
        _greedy(adj, walk, color)
        return color
    low = [v for v in verts if deg[v] < delta]
    if low:
        _greedy(adj, _bfs_order(adj, low[0])[::-1], color)
        return color
    cuts = sorted(nx.articulation_points(nx.Graph([(u, w) for u in verts for w in adj[u]])))
    if cuts:
        c = cuts[0]
        rest = {x: adj[x] - {c} for x in verts if x != c}
        first = set(_bfs_order(rest, min(adj[c])))
        part1 = first | {c}
        part2 = (set(verts) - first)
        col1: dict[int, int] = {}
        col2: dict[int, int] = {}
        for part, col in ((part1, col1), (part2, col2)):
            sub = {x: adj[x] & part for x in part}
            _greedy(sub, _bfs_order(sub, c)[::-1], col)
        # rename colours of the second part so that both agree on c
        a, b = col1[c], col2[c]
        swap = {a: b, b: a}
        color.update(col1)
        for x, k in col2.items():
            color[x] = swap.get(k, k)
        return color
    return _color_regular_2connected(adj)


def brooks_proper_coloring(g: Graph) -> VertexColoring:
    """Proper vertex colouring with colours ``1..`` applied per component.

    Uses at most Δ colours on a component unless it is complete or an odd
    cycle, in which case Δ + 1 are used.
    """
    color = [0] * g.n
    for comp in connected_components(g):
        adj = {v: set(g.adjacency[v]) for v in comp}
        for v, c in _color_component(adj).items():
            color[v] = c
    return VertexColoring(tuple(color))
