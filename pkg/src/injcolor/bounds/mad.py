"""Subcubic graphs of bounded maximum average degree.

Each threshold comes with a list of reducible configurations.  Peeling them
off one at a time always succeeds below the threshold; colouring replays
the peeled steps backwards.
"""

from __future__ import annotations

from fractions import Fraction

from ..coloring import EdgeColoring, verify_injective
from ..errors import DegreeTooLarge, PreconditionViolated, ReductionStalled
from ..graph import Graph, mad_exact
from .basic import BoundResult, color_path_or_cycle
from .engine import ReductionStep, ReductionTrace, WorkingGraph, color_by_trace

MAD73 = "mad73"
MAD83 = "mad83"
MAD3 = "mad3"
OUTERPLANAR = "outerplanar"

THRESHOLDS = {MAD73: Fraction(7, 3), MAD83: Fraction(8, 3), MAD3: Fraction(3)}
PALETTES = {MAD73: 4, MAD83: 6, MAD3: 7}


def _step(wg: WorkingGraph, kind: str, roles: dict[str, int],
          order: list[tuple[tuple[int, int] | None, ...]]) -> ReductionStep:
    groups = []
    for group in order:
        ids = tuple(wg.eid(*p) for p in group if p is not None)
        if ids:
            groups.append(ids)
    removed = tuple(e for grp in groups for e in grp)
    assert len(set(removed)) == len(removed)
    return ReductionStep(kind, roles, removed, tuple(groups))


def _leaf_of(wg: WorkingGraph, v: int) -> int | None:
    """Lowest neighbour of ``v`` with degree one, if any."""
    return next((w for w in wg.neighbors(v) if wg.degree(w) == 1), None)


def _pend(wg: WorkingGraph, v: int) -> tuple[int, int] | None:
    w = _leaf_of(wg, v)
    return None if w is None else (v, w)


# -- threshold 7/3 ------------------------------------------------------------------

def _core_neighbors(wg: WorkingGraph, v: int) -> list[int]:
    """Neighbours of ``v`` in the graph without its 1-vertices."""
    return [w for w in wg.neighbors(v) if wg.degree(w) >= 2]


def _find_mad73(wg: WorkingGraph) -> ReductionStep | None:
    n = wg.g.n
    deg = [wg.degree(v) for v in range(n)]
    for u in range(n):
        if deg[u] == 1:
            (v,) = wg.adj[u]
            if deg[v] == 1:
                return _step(wg, "isolated-edge", {"u": u, "v": v}, [((u, v),)])
    for u in range(n):
        if deg[u] == 2:
            u1 = _leaf_of(wg, u)
            if u1 is not None:
                (u2,) = wg.adj[u] - {u1}
                return _step(wg, "weak-2-vertex", {"u": u, "u1": u1, "u2": u2}, [((u1, u),)])
    for u in range(n):
        if deg[u] == 3:
            leaves = [w for w in wg.neighbors(u) if deg[w] == 1]
            if len(leaves) >= 2:
                (u3,) = wg.adj[u] - set(leaves[:2])
                return _step(wg, "3-vertex-two-leaves",
                             {"u": u, "u1": leaves[0], "u2": leaves[1], "u3": u3},
                             [((leaves[0], u),)])
    core = {v: _core_neighbors(wg, v) for v in range(n) if deg[v] >= 2}
    two = {v for v, nb in core.items() if len(nb) == 2}

    # triangle uvw with v, w of core degree 2
    for v in sorted(two):
        a, b = core[v]
        for w, u in ((a, b), (b, a)):
            if w in two and u in wg.adj[w]:
                order = [((u, v),), ((u, w),), ((v, w),), (_pend(wg, v),), (_pend(wg, w),)]
                return _step(wg, "triangle", {"u": u, "v": v, "w": w}, order)
    # 4-cycle xuvwx with u, v, w of core degree 2
    for v in sorted(two):
        u, w = core[v]
        if u in two and w in two:
            (x,) = set(core[u]) - {v}
            (x2,) = set(core[w]) - {v}
            if x == x2 and x != v:
                order = [((x, u),), ((u, v),), (_pend(wg, v),), (_pend(wg, u),), ((w, v),)]
                return _step(wg, "four-cycle", {"x": x, "u": u, "v": v, "w": w}, order)
    # path xuvwy with u, v, w of core degree 2
    for v in sorted(two):
        u, w = core[v]
        if u in two and w in two:
            (x,) = set(core[u]) - {v}
            (y,) = set(core[w]) - {v}
            if len({x, u, v, w, y}) == 5:
                order = [((u, v),), ((v, w),), (_pend(wg, v),), (_pend(wg, w),), (_pend(wg, u),)]
                return _step(wg, "path", {"x": x, "u": u, "v": v, "w": w, "y": y}, order)
    # 3-vertex u with three 2-neighbours, two of which (y, z) have a 2-neighbour
    for u in sorted(core):
        nb = core[u]
        if len(nb) != 3 or not all(s in two for s in nb):
            continue
        red = [s for s in nb if any(t in two for t in core[s] if t != u)]
        if len(red) < 2:
            continue
        y, z = red[0], red[1]
        (x,) = set(nb) - {y, z}
        (x1,) = set(core[x]) - {u}
        y1 = min(t for t in core[y] if t != u and t in two)
        z1 = min(t for t in core[z] if t != u and t in two)
        p = {s: _pend(wg, s) for s in (x, y, z, x1, y1, z1)}
        order = [((u, x), (u, y), (u, z)),
                 (p[z1], (z, z1)), (p[y1], (y, y1)), (p[x1], (x, x1)),
                 (p[z],), (p[y],), (p[x],)]
        return _step(wg, "3-vertex-2-neighbours",
                     {"u": u, "x": x, "y": y, "z": z, "x1": x1, "y1": y1, "z1": z1}, order)
    return None


# -- threshold 8/3 and 3 ------------------------------------------------------------

def _find_one_vertex(wg: WorkingGraph) -> ReductionStep | None:
    for u in range(wg.g.n):
        if wg.degree(u) == 1:
            (v,) = wg.adj[u]
            return _step(wg, "1-vertex", {"u": u, "v": v}, [((u, v),)])
    return None


def _find_mad83(wg: WorkingGraph) -> ReductionStep | None:
    found = _find_one_vertex(wg)
    if found:
        return found
    n = wg.g.n
    for u in range(n):
        if wg.degree(u) != 2:
            continue
        for v in wg.neighbors(u):
            if wg.degree(v) == 2:
                (t,) = wg.adj[u] - {v}
                (w,) = wg.adj[v] - {u}
                return _step(wg, "adjacent-2-vertices", {"u": u, "v": v, "t": t, "w": w},
                             [((u, v),), ((v, w),)])
    for u in range(n):
        if wg.degree(u) != 3:
            continue
        twos = [s for s in wg.neighbors(u) if wg.degree(s) == 2]
        if len(twos) >= 2:
            v, w = twos[0], twos[1]
            (y,) = wg.adj[v] - {u}
            (z,) = wg.adj[w] - {u}
            return _step(wg, "3-vertex-two-2-neighbours", {"u": u, "v": v, "w": w, "y": y, "z": z},
                         [((v, y),), ((w, z),), ((u, v),), ((u, w),)])
    return None


def _find_mad3(wg: WorkingGraph) -> ReductionStep | None:
    found = _find_one_vertex(wg)
    if found:
        return found
    for u in range(wg.g.n):
        if wg.degree(u) == 2:
            v, w = wg.neighbors(u)
            return _step(wg, "2-vertex", {"u": u, "v": v, "w": w}, [((u, v),), ((u, w),)])
    return None


_FINDERS = {MAD73: _find_mad73, MAD83: _find_mad83, MAD3: _find_mad3}


def _ruleset(name: str) -> str:
    key = str(name).lower().replace("/", "").replace("_", "")
    if key not in (MAD73, MAD83, MAD3, OUTERPLANAR):
        raise ValueError(f"unknown ruleset {name!r}")
    return key


def find_reducible_configuration(g: Graph | WorkingGraph, ruleset: str) -> ReductionStep | None:
    """First configuration of ``ruleset`` present in ``g``, scanning the rules
    in order and vertices by increasing id; ``None`` if there is none."""
    key = _ruleset(ruleset)
    wg = g if isinstance(g, WorkingGraph) else WorkingGraph(g)
    if key == OUTERPLANAR:
        from .outerplanar import find_outerplanar_configuration

        return find_outerplanar_configuration(wg)
    return _FINDERS[key](wg)


def reduce_graph(g: Graph, ruleset: str) -> ReductionTrace:
    """Peel configurations until no edge is left."""
    key = _ruleset(ruleset)
    wg = WorkingGraph(g)
    trace = ReductionTrace()
    while wg.alive:
        step = _FINDERS[key](wg)
        if step is None:
            raise ReductionStalled(f"no {key} configuration in a graph with {len(wg.alive)} edges")
        wg.remove(step.removed)
        trace.steps.append(step)
    return trace


def color_subcubic_mad(g: Graph, threshold: str, *, trust_mad: bool = False) -> BoundResult:
    """Colour a subcubic graph with mad below ``threshold`` using 4, 6 or 7 colours."""
    key = _ruleset(threshold)
    if key == OUTERPLANAR:
        raise ValueError("use color_outerplanar_subcubic for the outerplanar rules")
    palette = PALETTES[key]
    if g.n and max(g.degree(v) for v in range(g.n)) > 3:
        raise DegreeTooLarge("the mad bounds need maximum degree at most 3")
    if not trust_mad and g.n and mad_exact(g) >= THRESHOLDS[key]:
        raise PreconditionViolated(f"mad is not below {THRESHOLDS[key]}")
    if g.m == 0:
        return BoundResult(EdgeColoring(()), palette, key)
    if max(g.degree(v) for v in range(g.n)) <= 2:
        return BoundResult(color_path_or_cycle(g).coloring, palette, key)
    trace = reduce_graph(g, key)
    colors = color_by_trace(g, trace, palette)
    coloring = EdgeColoring(tuple(colors))
    assert verify_injective(g, coloring) and coloring.palette_size <= palette
    return BoundResult(coloring, palette, key, trace)
