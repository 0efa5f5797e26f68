"""Exact colourings of paths, cycles and trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..coloring import EdgeColoring, verify_injective
from ..errors import NotForest, NotPathOrCycle
from ..graph import Graph, conflict_graph, connected_components, degrees, is_forest


@dataclass(frozen=True)
class BoundResult:
    coloring: EdgeColoring
    bound_claimed: int
    method: str
    trace: object | None = field(default=None, compare=False)

    @property
    def palette_size(self) -> int:
        return self.coloring.palette_size


def _walk(g: Graph, comp: list[int]) -> tuple[list[int], bool]:
    """Edge ids of a path/cycle component in traversal order, and is-cycle flag."""
    ends = [v for v in comp if g.degree(v) == 1]
    closed = not ends
    start = ends[0] if ends else comp[0]
    order: list[int] = []
    prev, cur = -1, start
    while True:
        nxt = [w for w in sorted(g.adjacency[cur]) if w != prev]
        if not nxt:
            break
        order.append(g.edge_id(cur, nxt[0]))
        prev, cur = cur, nxt[0]
        if cur == start:
            break
    return order, closed


def _cycle_colors(length: int) -> list[int]:
    """Colours along a cycle of ``length`` edges with the optimal palette.

    Runs of two equal colours whenever the length is even, so that every
    three consecutive edges show exactly two colours.
    """
    if length % 4 == 0:
        return [1 if (i // 2) % 2 == 0 else 2 for i in range(length)]
    if length % 2 == 0:
        runs = length // 2
        run_color = [1 if r % 2 == 0 else 2 for r in range(runs)]
        run_color[-1] = 3
        return [run_color[i // 2] for i in range(length)]
    out = [0] * length
    # edges i and i+2 conflict: walk the single conflict cycle 0, 2, 4, ...
    for p in range(length):
        out[(2 * p) % length] = 1 if p % 2 == 0 else 2
    out[(2 * (length - 1)) % length] = 3
    return out


def path_or_cycle_index(g: Graph) -> int:
    """Optimal palette size for a disjoint union of paths and cycles."""
    best = 0
    for comp in connected_components(g):
        m = sum(g.degree(v) for v in comp) // 2
        if m == 0:
            continue
        if m == len(comp):  # cycle
            best = max(best, 2 if m % 4 == 0 else 3)
        else:
            best = max(best, 1 if m <= 2 else 2)
    return best


def path_cycle_pattern(g: Graph, comp: list[int]) -> dict[int, int]:
    """Optimal colours for one path or cycle component, keyed by edge id."""
    if len(comp) == 1:
        return {}
    order, closed = _walk(g, comp)
    pattern = _cycle_colors(len(order)) if closed else [
        1 if (i // 2) % 2 == 0 else 2 for i in range(len(order))]
    return dict(zip(order, pattern))


def color_path_or_cycle(g: Graph) -> BoundResult:
    """Optimal colouring of paths and cycles (pattern 1,1,2,2,... where possible)."""
    if g.n and max(degrees(g)) > 2:
        raise NotPathOrCycle("maximum degree exceeds 2")
    colors = [0] * g.m
    for comp in connected_components(g):
        for e, c in path_cycle_pattern(g, comp).items():
            colors[e] = c
    result = BoundResult(EdgeColoring(tuple(colors)), path_or_cycle_index(g), "pathcycle")
    assert verify_injective(g, result.coloring)
    return result


def two_color_if_possible(g: Graph) -> EdgeColoring | None:
    """An injective colouring with at most two colours when one exists.

    Two colours suffice exactly when the conflict graph is bipartite.
    """
    cg = conflict_graph(g).base
    side = [0] * g.m
    for root in range(g.m):
        if side[root]:
            continue
        side[root] = 1
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for f in cg.adjacency[e]:
                if not side[f]:
                    side[f] = 3 - side[e]
                    queue.append(f)
                elif side[f] == side[e]:
                    return None
    return EdgeColoring(tuple(side))


def color_tree(g: Graph) -> BoundResult:
    """Colour a forest with at most three colours.

    One colour if no two edges conflict, two if the conflict graph is
    bipartite, otherwise every edge from a parent at depth d gets colour
    ``d mod 3 + 1`` (all child edges of a vertex share a colour, which then
    differs from the colours used one and two levels up).
    """
    if not is_forest(g):
        raise NotForest("graph contains a cycle")
    if g.m == 0:
        raise NotForest("forest has no edges")
    two = two_color_if_possible(g)
    if two is not None:
        return BoundResult(two.normalized(), 3, "tree")
    colors = [0] * g.m
    for comp in connected_components(g):
        root = comp[0]
        depth = {root: 0}
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for c in sorted(g.adjacency[p]):
                if c not in depth:
                    depth[c] = depth[p] + 1
                    colors[g.edge_id(p, c)] = depth[p] % 3 + 1
                    queue.append(c)
    coloring = EdgeColoring(tuple(colors))
    if not verify_injective(g, coloring):  # pragma: no cover - guarded by the argument above
        from ..solver import is_k_colorable

        coloring = is_k_colorable(g, 3)
        assert coloring is not None
    return BoundResult(coloring, 3, "tree")
