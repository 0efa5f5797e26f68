"""Shared machinery for colouring by reducible configurations.

A configuration is peeled off a mutable working copy of the graph and
recorded in a :class:`ReductionTrace`.  Colouring then replays the trace
backwards: each step restores its edges and extends the colouring, first
with the scripted rule of the corresponding lemma, then (only if that
rule's output fails the local check) by exhaustive search over the
restored edges, and finally over the restored edges plus their
neighbourhood.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..errors import ExtensionFailed
from ..graph import Graph

Plan = Callable[["WorkingGraph", list[int], "ReductionStep", int], "dict[int, int] | None"]


class WorkingGraph:
    """Mutable spanning subgraph of ``g``; edges keep their ids in ``g``."""

    def __init__(self, g: Graph, alive: Iterable[int] | None = None):
        self.g = g
        self.alive: set[int] = set(range(g.m)) if alive is None else set(alive)
        self.adj: list[set[int]] = [set() for _ in range(g.n)]
        for e in self.alive:
            u, v = g.edges[e]
            self.adj[u].add(v)
            self.adj[v].add(u)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def eid(self, u: int, v: int) -> int:
        return self.g.edge_id(u, v)

    def edges_at(self, v: int) -> list[int]:
        return sorted(self.g.edge_id(v, w) for w in self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def remove(self, edges: Iterable[int]) -> None:
        for e in edges:
            self.alive.remove(e)
            u, v = self.g.edges[e]
            self.adj[u].discard(v)
            self.adj[v].discard(u)

    def restore(self, edges: Iterable[int]) -> None:
        for e in edges:
            self.alive.add(e)
            u, v = self.g.edges[e]
            self.adj[u].add(v)
            self.adj[v].add(u)

    def conflicts(self, e: int) -> set[int]:
        """Alive edges in conflict with ``e`` in the current graph."""
        a, b = self.g.edges[e]
        adj = self.adj
        out = set()
        for x, o in ((a, b), (b, a)):
            for y in adj[x]:
                if y == o:
                    continue
                if y in adj[o]:
                    out.add(self.g.edge_id(x, y))
                for z in adj[y]:
                    if z != x and z != o:
                        out.add(self.g.edge_id(y, z))
        return out

    def simple_paths_through(self, e: int) -> list[tuple[int, int, int]]:
        """Paths of three edges containing ``e`` whose two interior vertices
        have degree 2 and whose four vertices are distinct."""
        adj = self.adj
        eid = self.g.edge_id
        out = set()
        a, b = self.g.edges[e]
        for x, y in ((a, b), (b, a)):
            # e as the middle edge
            if len(adj[x]) == 2 and len(adj[y]) == 2:
                (p,) = adj[x] - {y}
                (q,) = adj[y] - {x}
                if p != q:
                    out.add(_canon((eid(p, x), e, eid(y, q))))
            # e as an end edge x-y-z-w
            if len(adj[y]) == 2:
                (z,) = adj[y] - {x}
                if len(adj[z]) == 2:
                    (w,) = adj[z] - {y}
                    if w != x:
                        out.add(_canon((e, eid(y, z), eid(z, w))))
        return sorted(out)


def _canon(path: tuple[int, int, int]) -> tuple[int, int, int]:
    return path if path[0] < path[2] else path[::-1]


# -- trace ----------------------------------------------------------------------

@dataclass
class ReductionStep:
    kind: str
    roles: dict[str, int]
    removed: tuple[int, ...]
    order: tuple[tuple[int, ...], ...]
    recolor: tuple[int, ...] = ()
    plan: Plan | None = field(default=None, repr=False, compare=False)
    strong: bool = True  # whether the strengthened path property is enforced
    level: int = -1  # 0 scripted, 1 search over removed, 2 widened search


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)

    def levels(self) -> list[int]:
        return [s.level for s in self.steps]

    def replay(self, g: Graph) -> bool:
        """Remove forward to the base graph, restore backward; True when the
        restored edge set equals that of ``g`` and every step was legal."""
        alive = set(range(g.m))
        for s in self.steps:
            if not set(s.removed) <= alive:
                return False
            alive -= set(s.removed)
        for s in reversed(self.steps):
            if alive & set(s.removed):
                return False
            alive |= set(s.removed)
        return alive == set(range(g.m))


# -- checks ---------------------------------------------------------------------

def _local_ok(wg: WorkingGraph, colors: list[int], touched: Sequence[int], strong: bool) -> bool:
    """No violation involving a touched edge, either as an end or a middle edge."""
    t = set(touched)
    for e in t:
        ce = colors[e]
        if ce and any(colors[f] == ce for f in wg.conflicts(e)):
            return False
        a, b = wg.g.edges[e]
        for f in wg.edges_at(a):
            if f == e or not colors[f]:
                continue
            # f-e-h is a path of length three, or f, e, h close a triangle
            if any(h != e and h != f and colors[h] == colors[f] for h in wg.edges_at(b)):
                return False
        if strong:
            for p in wg.simple_paths_through(e):
                cols = [colors[x] for x in p]
                if all(cols) and len(set(cols)) != 2:
                    return False
    return True


def _assignment_ok(wg: WorkingGraph, colors: list[int], e: int, strong: bool) -> bool:
    ce = colors[e]
    if any(colors[f] == ce for f in wg.conflicts(e)):
        return False
    if strong:
        for p in wg.simple_paths_through(e):
            cols = [colors[x] for x in p]
            if all(cols) and len(set(cols)) != 2:
                return False
    return True


def lowest_free(wg: WorkingGraph, colors: list[int], edges: Sequence[int], palette: int,
                avoid: Iterable[int] = ()) -> int | None:
    """Lowest colour usable simultaneously on every edge of ``edges``."""
    banned = set(avoid)
    for e in edges:
        banned.update(colors[f] for f in wg.conflicts(e) if f not in edges)
    for c in range(1, palette + 1):
        if c not in banned:
            return c
    return None


def greedy_groups(wg: WorkingGraph, colors: list[int], step: ReductionStep, palette: int) -> dict[int, int] | None:
    """Colour the groups of ``step.order`` in turn, each with one common colour."""
    work = list(colors)
    out = {}
    for group in step.order:
        c = lowest_free(wg, work, group, palette)
        if c is None:
            return None
        for e in group:
            work[e] = c
            out[e] = c
    return out


def search_colors(wg: WorkingGraph, colors: list[int], variables: list[int], palette: int,
            strong: bool, budget: int = 2_000_000) -> bool:
    for e in variables:
        colors[e] = 0
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == len(variables):
            return _local_ok(wg, colors, variables, strong)
        nodes += 1
        if nodes > budget:
            return False
        e = variables[i]
        for c in range(1, palette + 1):
            colors[e] = c
            if _assignment_ok(wg, colors, e, strong) and rec(i + 1):
                return True
        colors[e] = 0
        return False

    return rec(0)


def extend(wg: WorkingGraph, colors: list[int], step: ReductionStep, palette: int,
           strong: bool = False) -> None:
    """Restore ``step`` into ``wg`` and extend ``colors`` over it in place."""
    strong = strong and step.strong
    wg.restore(step.removed)
    removed = list(step.removed)
    plan = step.plan or greedy_groups
    saved = list(colors)
    proposal = plan(wg, colors, step, palette)
    if proposal is not None and all(1 <= c <= palette for c in proposal.values()):
        for e, c in proposal.items():
            colors[e] = c
        touched = set(removed) | set(proposal)
        if all(colors[e] for e in removed) and _local_ok(wg, colors, sorted(touched), strong):
            step.level = 0
            return
    colors[:] = saved
    for e in removed:
        colors[e] = 0
    if search_colors(wg, colors, removed, palette, strong):
        step.level = 1
        return
    colors[:] = saved
    wider = set(removed) | set(step.recolor)
    for e in list(wider):
        for x in wg.g.edges[e]:
            wider.update(wg.edges_at(x))
    variables = removed + sorted(wider - set(removed))
    if search_colors(wg, colors, variables, palette, strong):
        step.level = 2
        return
    colors[:] = saved
    raise ExtensionFailed(f"cannot extend the colouring over a {step.kind} step")


def color_by_trace(g: Graph, trace: ReductionTrace, palette: int, *, strong: bool = False,
                   base: list[int] | None = None) -> list[int]:
    """Replay ``trace`` backwards from the graph left after all removals."""
    removed = set()
    for s in trace.steps:
        removed.update(s.removed)
    wg = WorkingGraph(g, set(range(g.m)) - removed)
    colors = list(base) if base is not None else [0] * g.m
    for s in reversed(trace.steps):
        extend(wg, colors, s, palette, strong)
    return colors
