"""Bounds in terms of maximum degree: the general 2(Δ-1)² bound and the
bipartite bounds obtained by colouring one side at distance two."""

from __future__ import annotations

from ..coloring import EdgeColoring, verify_injective
from ..errors import DegreeTooLarge, DegreeTooSmall, IsolatedVertex
from ..graph import Graph, bipartition, conflict_graph, connected_components, degrees
from .basic import BoundResult, color_path_or_cycle
from .brooks import brooks_proper_coloring


def general_bound(delta: int) -> int:
    return 2 * (delta - 1) ** 2


def color_general(g: Graph) -> BoundResult:
    """Brooks colouring of the conflict graph, read back onto the edges."""
    delta = max(degrees(g), default=0)
    if delta < 3:
        raise DegreeTooSmall("the general bound needs maximum degree at least 3")
    bound = general_bound(delta)
    cg = conflict_graph(g).base
    for comp in connected_components(cg):
        k = len(comp)
        # the conflict graph has maximum degree <= bound, and a component
        # equal to K_{bound+1} would force a vertex of degree > Δ
        assert not (k == bound + 1 and all(cg.degree(v) == k - 1 for v in comp))
    vc = brooks_proper_coloring(cg)
    coloring = EdgeColoring(vc.colors)
    result = BoundResult(coloring, bound, "general")
    assert verify_injective(g, coloring) and coloring.palette_size <= bound
    return result


def _check_bipartite_input(g: Graph):
    if any(d == 0 for d in degrees(g)):
        raise IsolatedVertex("bipartite bounds need every vertex to have an edge")
    return bipartition(g)


def bipartite_bound(delta_a: int, delta_b: int) -> int:
    delta = max(delta_a, delta_b)
    if delta >= 3:
        return min(delta_a * (delta_b - 1), delta_b * (delta_a - 1)) + 1
    return 3 if delta == 2 else 1


def _side_graph(g: Graph, side: frozenset[int]) -> tuple[Graph, list[int]]:
    """Vertices of ``side`` joined when at distance two in ``g``."""
    verts = sorted(side)
    ix = {v: i for i, v in enumerate(verts)}
    pairs = set()
    for v in verts:
        for u in g.adjacency[v]:
            for w in g.adjacency[u]:
                if w != v and ix[v] < ix[w]:
                    pairs.add((ix[v], ix[w]))
    return Graph(len(verts), sorted(pairs)), verts


def _choose_side(bp) -> frozenset[int]:
    # colouring side S costs Δ_S(Δ_other - 1) + 1; ties go to side A
    cost_a = bp.delta_a * (bp.delta_b - 1)
    cost_b = bp.delta_b * (bp.delta_a - 1)
    return bp.side_a if cost_a <= cost_b else bp.side_b


def _edges_from_side(g: Graph, side: frozenset[int], vcolor: dict[int, int]) -> EdgeColoring:
    return EdgeColoring(tuple(vcolor[u if u in side else v] for u, v in g.edges))


def color_bipartite(g: Graph) -> BoundResult:
    bp = _check_bipartite_input(g)
    bound = bipartite_bound(bp.delta_a, bp.delta_b)
    delta = max(bp.delta_a, bp.delta_b)
    if delta == 1:
        coloring = EdgeColoring((1,) * g.m)
    elif delta == 2:
        coloring = color_path_or_cycle(g).coloring
    else:
        side = _choose_side(bp)
        sg, verts = _side_graph(g, side)
        vc = brooks_proper_coloring(sg)
        coloring = _edges_from_side(g, side, {v: vc[i] for i, v in enumerate(verts)})
    assert verify_injective(g, coloring) and coloring.palette_size <= bound
    return BoundResult(coloring, bound, "bipartite")


def color_subcubic_bipartite(g: Graph) -> BoundResult:
    """At most six colours; a side-graph component equal to K7 comes from a
    Heawood component, which is coloured exactly with four."""
    from ..solver import is_k_colorable

    if max(degrees(g), default=0) > 3:
        raise DegreeTooLarge("subcubic bipartite colouring needs maximum degree at most 3")
    bp = _check_bipartite_input(g)
    if max(bp.delta_a, bp.delta_b) <= 2:
        coloring = color_path_or_cycle(g).coloring if g.m else EdgeColoring(())
        return BoundResult(coloring, 6, "subcubic-bipartite")
    side = _choose_side(bp)
    sg, verts = _side_graph(g, side)
    vc = brooks_proper_coloring(sg)
    vcolor = {v: vc[i] for i, v in enumerate(verts)}
    colors = list(_edges_from_side(g, side, vcolor).colors)
    for comp in connected_components(sg):
        if len(comp) == 7 and all(sg.degree(i) == 6 for i in comp):
            members = {verts[i] for i in comp}
            ids = [e for e, (u, v) in enumerate(g.edges) if u in members or v in members]
            sub = g.subgraph_edges(ids)
            exact = is_k_colorable(sub, 4)
            assert exact is not None, "a Heawood component is 4-colourable"
            for pos, e in enumerate(sorted(ids)):
                colors[e] = exact[pos]
    coloring = EdgeColoring(tuple(colors))
    assert verify_injective(g, coloring) and coloring.palette_size <= 6
    return BoundResult(coloring, 6, "subcubic-bipartite")
