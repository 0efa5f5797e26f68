"""Outerplanar graphs of maximum degree 3: five colours, and every simple path
of length three shows exactly two of them.

A path is *simple* when its interior vertices have degree 2 in the host
graph.  The reductions are: a pendant edge at a 3-vertex, a pendant path,
and a chain of 2-vertices closing a cycle either at a single 3-vertex or
at two adjacent 3-vertices.  Two terminal shapes are coloured outright: a
path or cycle with one pendant edge, and two cycles sharing an edge.
"""

from __future__ import annotations

from ..coloring import EdgeColoring, Verdict, verify_injective
from ..errors import DegreeTooLarge, ReductionStalled
from ..graph import Graph, connected_components
from .basic import BoundResult, path_cycle_pattern
from .engine import ReductionStep, ReductionTrace, WorkingGraph, color_by_trace, search_colors

PALETTE = 5


# -- the strengthened property ------------------------------------------------------

def strong_violations(g: Graph, c) -> list[tuple[int, int, int]]:
    """Simple paths of length three (as edge-id triples) not showing exactly two colours."""
    colors = c.colors if isinstance(c, EdgeColoring) else tuple(c)
    out = []
    for v2 in range(g.n):
        if g.degree(v2) != 2:
            continue
        for v3 in g.adjacency[v2]:
            if v3 < v2 or g.degree(v3) != 2:
                continue
            (v1,) = g.adjacency[v2] - {v3}
            (v4,) = g.adjacency[v3] - {v2}
            if v1 == v4:
                continue
            path = (g.edge_id(v1, v2), g.edge_id(v2, v3), g.edge_id(v3, v4))
            if len({colors[e] for e in path}) != 2:
                out.append(path)
    return sorted(out)


def verify_strong_property(g: Graph, c) -> Verdict:
    bad = strong_violations(g, c)
    return Verdict(not bad, bad[0] if bad else None)


# -- configurations -----------------------------------------------------------------

def _low(banned, palette: int = PALETTE) -> int | None:
    return next((c for c in range(1, palette + 1) if c not in banned), None)


def _alternate(first: int, second: int, count: int, offset: int = 0) -> list[int]:
    """``first first second second ...`` of length ``count``, shifted by ``offset``."""
    return [first if ((i + offset) // 2) % 2 == 0 else second for i in range(count)]


def _chain_run(wg: WorkingGraph, s: int) -> tuple[list[int], int, int] | None:
    """Maximal run of 2-vertices through ``s`` with its two outer neighbours,
    or ``None`` when the run closes up on itself."""
    run = [s]
    ends = []
    for first in wg.neighbors(s):
        prev, cur = s, first
        side = []
        while wg.degree(cur) == 2 and cur != s:
            side.append(cur)
            (nxt,) = wg.adj[cur] - {prev}
            prev, cur = cur, nxt
        if cur == s:
            return None
        ends.append((side, cur))
    (left, a), (right, b) = ends
    run = left[::-1] + run + right
    return run, a, b


def find_outerplanar_configuration(wg: WorkingGraph) -> ReductionStep | None:
    n = wg.g.n
    eid = wg.eid
    for v1 in range(n):
        if wg.degree(v1) != 1:
            continue
        (v2,) = wg.adj[v1]
        if wg.degree(v2) == 3:
            w1, w2 = sorted(wg.adj[v2] - {v1})
            e = eid(v1, v2)
            return ReductionStep("pendant", {"v1": v1, "v2": v2, "w1": w1, "w2": w2}, (e,), ((e,),))
        if wg.degree(v2) == 2:
            path = [v1, v2]
            while wg.degree(path[-1]) == 2:
                (nxt,) = wg.adj[path[-1]] - {path[-2]}
                path.append(nxt)
            if wg.degree(path[-1]) != 3:
                continue
            k = len(path)
            # delete v1..v_{k-2}; edges listed from v_{k-1} outwards
            edges = tuple(eid(path[i], path[i - 1]) for i in range(k - 2, 0, -1))
            roles = {f"v{i + 1}": v for i, v in enumerate(path)}
            return ReductionStep("pendant-path", roles, edges, tuple((e,) for e in edges),
                                 plan=_plan_pendant_path)
    seen: set[int] = set()
    for s in range(n):
        if wg.degree(s) != 2 or s in seen:
            continue
        found = _chain_run(wg, s)
        if found is None:
            continue
        run, a, b = found
        seen.update(run)
        if a == b:
            # cycle x v1 ... vk y x with y the last 2-vertex
            if run[-1] < run[0]:
                run = run[::-1]
            x = a
            (x1,) = wg.adj[x] - {run[0], run[-1]}
            roles = {"x": x, "x1": x1, "y": run[-1]}
            roles.update({f"v{i + 1}": v for i, v in enumerate(run[:-1])})
            edges = tuple(eid(run[i], run[i + 1]) for i in range(len(run) - 1))
            recolor = (eid(x, run[0]), eid(x, run[-1]))
            return ReductionStep("chain-loop", roles, edges, tuple((e,) for e in edges),
                                 recolor=recolor, plan=_plan_chain_loop)
        if b in wg.adj[a]:
            x, y = (a, b) if a < b else (b, a)
            if run[0] not in wg.adj[x]:
                run = run[::-1]
            roles = {"x": x, "y": y}
            roles.update({f"v{i + 1}": v for i, v in enumerate(run)})
            full = [x] + run + [y]
            edges = tuple(eid(full[i], full[i + 1]) for i in range(len(full) - 1))
            return ReductionStep("chain-cycle", roles, edges, tuple((e,) for e in edges),
                                 plan=_plan_chain_cycle)
    return None


def _chain(roles: dict[str, int]) -> list[int]:
    k = sum(1 for key in roles if key.startswith("v") and key[1:].isdigit())
    return [roles[f"v{i}"] for i in range(1, k + 1)]


def _at(wg: WorkingGraph, colors: list[int], v: int, skip: int | None = None) -> set[int]:
    """Colours on the edges at ``v`` (optionally ignoring edge ``skip``)."""
    return {colors[e] for e in wg.edges_at(v) if e != skip and colors[e]}


# -- scripted extensions --------------------------------------------------------------

def _plan_pendant_path(wg, colors, step, palette):
    path = _chain(step.roles)
    k = len(path)
    vk, vk1 = path[-1], path[-2]
    alpha = _low(_at(wg, colors, vk))
    beta = _low({alpha})
    return dict(zip(step.removed, _alternate(alpha, beta, len(step.removed))))


def _plan_chain_loop(wg, colors, step, palette):
    r = step.roles
    x, x1, y = r["x"], r["x1"], r["y"]
    vs = _chain(r)
    k = len(vs)
    eid = wg.eid
    xv1, xy, xx1 = eid(x, vs[0]), eid(x, y), eid(x, x1)
    out = {}
    if k == 1:
        near = {colors[f] for f in wg.edges_at(x1) if f != xx1}
        alpha = _low(near | {colors[xv1]})
        beta = _low({alpha, colors[xv1], colors[xx1]})
        return {xy: alpha, eid(y, vs[0]): beta}
    at_x1 = _at(wg, colors, x1)
    alpha = _low(at_x1)
    beta = _low(at_x1 | {alpha})
    gamma = _low({alpha, beta, colors[xx1]})
    out[xv1], out[xy], out[eid(y, vs[-1])] = alpha, beta, beta
    inner = [eid(vs[i], vs[i + 1]) for i in range(k - 1)]
    pattern = _alternate(alpha, gamma, k - 1, offset=1) if k % 2 == 0 else _alternate(gamma, alpha, k - 1)
    out.update(zip(inner, pattern))
    return out


def _plan_chain_cycle(wg, colors, step, palette):
    r = step.roles
    x, y = r["x"], r["y"]
    vs = _chain(r)
    k = len(vs)
    eid = wg.eid
    (x1,) = wg.adj[x] - {y, vs[0]}
    (y1,) = wg.adj[y] - {x, vs[-1]}
    xy = eid(x, y)
    if x1 == y1:
        alpha, beta, gamma = colors[eid(x1, x)], colors[xy], colors[eid(y, x1)]
        (x2,) = wg.adj[x1] - {x, y}
        f = colors[eid(x1, x2)]
        if k == 1:
            a = _low({beta, gamma, f})
            b = _low({alpha, beta, a, f})
            return {eid(x, vs[0]): a, eid(y, vs[0]): b}
        if k % 2 == 0:
            lam = _low({alpha, gamma, f, beta})
            seq = [eid(x, vs[0])] + [eid(vs[i], vs[i + 1]) for i in range(k - 1)]
            out = dict(zip(seq, _alternate(lam, alpha, k)))
            out[eid(vs[-1], y)] = _low({f, alpha, lam})
            return out
        xi = _low({alpha, beta, gamma, f})
        lam = _low({alpha, beta, gamma, xi})
        out = {eid(x, vs[0]): beta, eid(vs[-1], y): xi}
        seq = [eid(vs[i], vs[i + 1]) for i in range(k - 1)]
        out.update(zip(seq, _alternate(lam, alpha, k - 1)))
        return out
    # x1 != y1: x1-x-y-y1 is a simple path of the smaller graph, so xy shares
    # its colour with exactly one of xx1, yy1; mirror so that it is xx1
    if colors[xy] == colors[eid(y, y1)] and colors[xy] != colors[eid(x, x1)]:
        x, y, x1, y1, vs = y, x, y1, x1, vs[::-1]
    alpha, beta = colors[eid(x, x1)], colors[eid(y, y1)]
    if colors[xy] != alpha:
        return None
    if k == 1:
        near_x = {colors[f] for f in wg.edges_at(x1) if f != eid(x, x1)}
        gamma = _low(near_x | {alpha, beta})
        near_y = {colors[f] for f in wg.edges_at(y1) if f != eid(y, y1)}
        lam = _low(near_y | {alpha, gamma})
        return {eid(x, vs[0]): gamma, eid(y, vs[0]): lam}
    out = {eid(x, vs[0]): alpha}
    back = [eid(vs[i], vs[i - 1]) for i in range(k - 1, 0, -1)]  # v_k v_{k-1}, ..., v2 v1
    if k % 2 == 0:
        gamma = _low(_at(wg, colors, y1) | {alpha})
        out.update(zip([eid(y, vs[-1])] + back, _alternate(gamma, beta, k)))
        return out
    gamma = _low({alpha, beta})
    lam = _low({alpha, gamma})
    out.update(zip(back, _alternate(gamma, lam, k - 1)))
    work = list(colors)
    for e, c in out.items():
        work[e] = c
    last = eid(vs[-1], y)
    out[last] = _low({work[f] for f in wg.conflicts(last)})
    return out


# -- terminal shapes ------------------------------------------------------------------

def _plan_pathcycle(wg, colors, step, palette):
    comp = sorted({v for e in step.removed for v in wg.g.edges[e]})
    sub = Graph(wg.g.n, [wg.g.edges[e] for e in sorted(step.removed)])
    pattern = path_cycle_pattern(sub, comp)
    ids = sorted(step.removed)
    return {ids[e]: c for e, c in pattern.items()}


def _plan_pendant_terminal(wg, colors, step, palette):
    """A path or cycle H plus one pendant edge v1v2 at a vertex of H."""
    r = step.roles
    v1, v2 = r["v1"], r["v2"]
    eid = wg.eid
    rest = [e for e in step.removed if e != eid(v1, v2)]
    cycle = all(wg.degree(v) == 2 for e in rest for v in wg.g.edges[e] if v != v2)
    if not cycle or len(rest) <= 3:
        # spider or triangle with a pendant: three colours suffice
        work = list(colors)
        if search_colors(wg, work, sorted(step.removed), 3, step.strong):
            return {e: work[e] for e in step.removed}
        return None
    # cycle v2 v3 ... vi v2: v2v3 = v3v4 = α, v1v2 = β, then γγλλ... onwards
    v3 = min(wg.adj[v2] - {v1})
    walk = [v2, v3]
    while True:
        (nxt,) = wg.adj[walk[-1]] - {walk[-2]}
        if nxt == v2:
            break
        walk.append(nxt)
    edges = [eid(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]
    out = {edges[0]: 1, edges[1]: 1, eid(v1, v2): 2}
    out.update(zip(edges[2:], _alternate(3, 4, len(edges) - 2)))
    return out


def theta_coloring(x: int, y: int, vs: list[int], ws: list[int], eid) -> dict[int, int]:
    """Four colours on two cycles x v1..vi y x and x w1..wj y x sharing xy.

    Every simple path of length three shows exactly two colours.
    """
    if len(vs) >= 2 and len(ws) == 1:
        vs, ws = ws, vs
    i, j = len(vs), len(ws)
    a, b, c, d = 1, 2, 3, 4  # alpha, beta, gamma, lambda
    out = {}
    if i >= 2:
        out[eid(x, vs[0])] = out[eid(x, ws[0])] = out[eid(x, y)] = a
        out[eid(y, ws[-1])] = b
        wpath = [eid(ws[t], ws[t - 1]) for t in range(j - 1, 0, -1)]
        out.update(zip(wpath, _alternate(b, c, j - 1, offset=1) if j % 2 == 0 else _alternate(c, b, j - 1)))
        vpath = [eid(y, vs[-1])] + [eid(vs[t], vs[t - 1]) for t in range(i - 1, 0, -1)]
        # the λ/γ phase follows the parity of the v-side length i
        out.update(zip(vpath, _alternate(d, c, i, offset=1) if i % 2 == 1 else _alternate(d, c, i)))
        return out
    out[eid(x, vs[0])] = out[eid(x, ws[0])] = a
    out[eid(y, vs[0])] = b
    out[eid(x, y)] = c
    if j == 1:
        out[eid(y, ws[0])] = b
        return out
    wpath = [eid(y, ws[-1])] + [eid(ws[t], ws[t - 1]) for t in range(j - 1, 0, -1)]
    out.update(zip(wpath, _alternate(b, d, j, offset=1) if j % 2 == 1 else _alternate(d, b, j)))
    return out


def _plan_theta(wg, colors, step, palette):
    r = step.roles
    x, y = r["x"], r["y"]
    vs = _chain(r)
    # the other x-y path avoids the edge xy and the chain
    (w1,) = wg.adj[x] - {y, vs[0]}
    ws = [w1]
    while True:
        (nxt,) = wg.adj[ws[-1]] - {ws[-2] if len(ws) > 1 else x}
        if nxt == y:
            break
        ws.append(nxt)
    return theta_coloring(x, y, vs, ws, wg.eid)


# -- driver ---------------------------------------------------------------------------

def reduce_outerplanar(g: Graph) -> ReductionTrace:
    """Peel every component down to a terminal shape."""
    wg = WorkingGraph(g)
    trace = ReductionTrace()
    for comp in connected_components(g):
        comp_edges = sorted({e for v in comp for e in g.incident[v]})
        if not comp_edges:
            continue
        if max(g.degree(v) for v in comp) <= 2:
            odd_cycle = len(comp_edges) == len(comp) and len(comp) % 2 == 1
            step = ReductionStep("pathcycle", {"v": comp[0]}, tuple(comp_edges), (tuple(comp_edges),),
                                 plan=_plan_pathcycle, strong=not odd_cycle)
            wg.remove(step.removed)
            trace.steps.append(step)
            continue
        while True:
            live = sorted(e for e in wg.alive if g.edges[e][0] in comp)
            step = find_outerplanar_configuration(_restrict(wg, live))
            if step is None:
                raise ReductionStalled(f"no outerplanar configuration in a component with {len(live)} edges")
            wg.remove(step.removed)
            if wg.max_degree() <= 2 and step.kind in ("pendant", "chain-cycle") and _in(wg, comp):
                wg.restore(step.removed)
                kind = "pendant-terminal" if step.kind == "pendant" else "theta"
                plan = _plan_pendant_terminal if kind == "pendant-terminal" else _plan_theta
                step = ReductionStep(kind, step.roles, tuple(live), (tuple(live),), plan=plan)
                wg.remove(step.removed)
                trace.steps.append(step)
                break
            trace.steps.append(step)
    return trace


def _restrict(wg: WorkingGraph, live: list[int]) -> WorkingGraph:
    return wg if len(live) == len(wg.alive) else WorkingGraph(wg.g, live)


def _in(wg: WorkingGraph, comp: list[int]) -> bool:
    return any(wg.degree(v) for v in comp)


def color_outerplanar_subcubic(g: Graph) -> BoundResult:
    if g.n and max(g.degree(v) for v in range(g.n)) > 3:
        raise DegreeTooLarge("the outerplanar bound needs maximum degree at most 3")
    trace = reduce_outerplanar(g)
    colors = color_by_trace(g, trace, PALETTE, strong=True)
    coloring = EdgeColoring(tuple(colors))
    assert verify_injective(g, coloring) and coloring.palette_size <= PALETTE
    exempt = {e for s in trace.steps if not s.strong for e in s.removed}
    assert all(set(p) <= exempt for p in strong_violations(g, coloring))
    return BoundResult(coloring, PALETTE, "outerplanar", trace)
