"""Exact injective chromatic index.

The index of ``g`` is the chromatic number of its conflict graph; we decide
k-colourability of that graph with a DSATUR backtracking search whose first
few vertices are pinned to a clique.  :func:`brute_force_index` is an
independent oracle that never builds the conflict graph.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass

from .coloring import EdgeColoring
from .errors import NoEdges, TooLarge
from .graph import Graph, conflict_masks

BRUTE_FORCE_MAX_EDGES = 20


@dataclass(frozen=True)
class SolveResult:
    index: int
    coloring: EdgeColoring
    lower_bound_certificate: tuple[int, ...]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- cliques -------------------------------------------------------------------

def _greedy_clique(masks: list[int], candidates: int) -> list[int]:
    clique: list[int] = []
    cand = candidates
    while cand:
        best = max(_bits(cand), key=lambda v: ((masks[v] & cand).bit_count(), -v))
        clique.append(best)
        cand &= masks[best]
    return clique


def _max_clique(masks: list[int], budget: int) -> list[int]:
    n = len(masks)
    full = (1 << n) - 1
    best = _greedy_clique(masks, full)
    nodes = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy colouring of the candidate set; returns (vertex, colour) pairs
        out = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~masks[v] & ~low
                uncolored &= ~low
                out.append((v, color))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            return
        order = color_bound(cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            new = cand & masks[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)
            if nodes > budget:
                return

    expand([], full)
    return best


def max_conflict_clique(g: Graph, budget: int = 200_000) -> tuple[int, ...]:
    """A clique of the conflict graph, maximum unless ``budget`` nodes run out."""
    if g.m == 0:
        return ()
    masks = conflict_masks(g)
    return tuple(sorted(_max_clique(masks, budget)))


# -- k-colourability -------------------------------------------------------------

class _Search:
    def __init__(self, masks: list[int], k: int, pinned: list[int], priority: list[int]):
        self.masks = masks
        self.n = len(masks)
        self.k = k
        self.nbrs = [list(_bits(m)) for m in masks]
        self.degree = [len(x) for x in self.nbrs]
        self.priority = priority
        self.color = [-1] * self.n
        self.count = [[0] * k for _ in range(self.n)]
        self.sat = [0] * self.n
        self.pinned = pinned
        self.nodes = 0

    def assign(self, v: int, c: int) -> bool:
        """Colour v; False if some neighbour is left with no colour."""
        self.color[v] = c
        ok = True
        for u in self.nbrs[v]:
            row = self.count[u]
            if row[c] == 0:
                self.sat[u] += 1
                if self.sat[u] == self.k and self.color[u] == -1:
                    ok = False
            row[c] += 1
        return ok

    def unassign(self, v: int) -> None:
        c = self.color[v]
        self.color[v] = -1
        for u in self.nbrs[v]:
            row = self.count[u]
            row[c] -= 1
            if row[c] == 0:
                self.sat[u] -= 1

    def pick(self) -> int:
        best = -1
        key = None
        for v in range(self.n):
            if self.color[v] != -1:
                continue
            cand = (self.sat[v], self.degree[v], self.priority[v])
            if key is None or cand > key:
                key, best = cand, v
        return best

    def run(self) -> list[int] | None:
        for i, v in enumerate(self.pinned):
            if not self.assign(v, i):
                return None
        limit = sys.getrecursionlimit()
        if self.n + 50 > limit:
            sys.setrecursionlimit(self.n + 100)
        if self._solve(len(self.pinned), len(self.pinned) - 1):
            return list(self.color)
        return None

    def _solve(self, colored: int, max_used: int) -> bool:
        if colored == self.n:
            return True
        self.nodes += 1
        v = self.pick()
        row = self.count[v]
        top = min(self.k - 1, max_used + 1)
        for c in range(top + 1):
            if row[c]:
                continue
            ok = self.assign(v, c)
            if ok and self._solve(colored + 1, max(max_used, c)):
                return True
            self.unassign(v)
        return False


def _colorable(masks: list[int], k: int, clique: list[int], seed: int | None) -> list[int] | None:
    n = len(masks)
    if n == 0:
        return []
    if len(clique) > k:
        return None
    if seed is None:
        priority = [-v for v in range(n)]  # lowest id wins ties
    else:
        perm = list(range(n))
        random.Random(seed).shuffle(perm)
        priority = perm
    return _Search(masks, k, list(clique), priority).run()


def is_k_colorable(g: Graph, k: int, *, tie_break_seed: int | None = None) -> EdgeColoring | None:
    """An injective edge colouring with at most ``k`` colours, or ``None``.

    ``tie_break_seed`` shuffles the DSATUR tie-breaking order; the answer
    (colourable or not) never depends on it.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.m == 0:
        return EdgeColoring(())
    masks = conflict_masks(g)
    clique = _greedy_clique(masks, (1 << g.m) - 1)
    col = _colorable(masks, k, clique, tie_break_seed)
    if col is None:
        return None
    return EdgeColoring(tuple(c + 1 for c in col))


def _dsatur_greedy(masks: list[int]) -> list[int]:
    n = len(masks)
    nbrs = [list(_bits(m)) for m in masks]
    color = [-1] * n
    forb: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] == -1),
                key=lambda u: (len(forb[u]), len(nbrs[u]), -u))
        c = 0
        while c in forb[v]:
            c += 1
        color[v] = c
        for u in nbrs[v]:
            forb[u].add(c)
    return color


def injective_chromatic_index(g: Graph, *, clique_budget: int = 200_000) -> SolveResult:
    """Exact index by ascending k from the conflict-clique lower bound."""
    if g.m == 0:
        raise NoEdges("the injective chromatic index needs at least one edge")
    masks = conflict_masks(g)
    clique = _max_clique(masks, clique_budget)
    greedy = _dsatur_greedy(masks)
    upper = max(greedy) + 1
    for k in range(len(clique), upper):
        col = _colorable(masks, k, clique, None)
        if col is not None:
            return SolveResult(k, EdgeColoring(tuple(c + 1 for c in col)), tuple(sorted(clique)))
    return SolveResult(upper, EdgeColoring(tuple(c + 1 for c in greedy)), tuple(sorted(clique)))


# -- definitional oracle -------------------------------------------------------------

def _consecutive_partners(g: Graph, e: int) -> set[int]:
    """Edges f forming, with e and some middle edge, three consecutive edges."""
    out = set()
    a, b = g.edges[e]
    for x, y in ((a, b), (b, a)):
        for z in g.adjacency[x]:
            if z == y:
                continue
            for w in g.adjacency[z]:
                if w == x:
                    continue
                # y-x-z-w is a path when w != y, a triangle when w == y
                out.add(g.edge_id(z, w))
    out.discard(e)
    return out


def brute_force_index(g: Graph) -> int:
    """Smallest k admitting a colouring with no consecutive triple e1,e2,e3
    such that c(e1) == c(e3), found by plain backtracking over the edges."""
    if g.m == 0:
        raise NoEdges("the injective chromatic index needs at least one edge")
    if g.m > BRUTE_FORCE_MAX_EDGES:
        raise TooLarge(f"{g.m} edges exceeds the brute-force guard of {BRUTE_FORCE_MAX_EDGES}")
    partners = [_consecutive_partners(g, e) for e in range(g.m)]
    earlier = [[f for f in partners[e] if f < e] for e in range(g.m)]
    color = [0] * g.m

    def extend(e: int, k: int, used: int) -> bool:
        if e == g.m:
            return True
        banned = {color[f] for f in earlier[e]}
        for c in range(1, min(k, used + 1) + 1):
            if c in banned:
                continue
            color[e] = c
            if extend(e + 1, k, max(used, c)):
                return True
        color[e] = 0
        return False

    k = 1
    while not extend(0, k, 0):
        k += 1
    return k
