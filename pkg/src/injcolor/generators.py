"""Seeded random graph families used by the tests, the probe and the demos.

Every function takes a :class:`random.Random` so that results depend only
on the seed the caller chose.
"""

from __future__ import annotations

import random

from .graph import Graph


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random attachment: vertex i hangs off a random earlier vertex."""
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_graph_max_edges(n: int, max_edges: int, rng: random.Random) -> Graph:
    """G(n, p) trimmed to at most ``max_edges`` edges."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    m = rng.randint(1, min(max_edges, len(pairs))) if pairs else 0
    return Graph(n, sorted(pairs[:m]))


def random_max_degree(n: int, delta: int, rng: random.Random, fill: float = 1.0) -> Graph:
    """Random graph with maximum degree at most ``delta``, built by inserting
    random pairs while both ends have room."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    target = int(fill * delta * n / 2)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if len(edges) >= target:
            break
        if deg[u] < delta and deg[v] < delta:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, sorted(edges))


def random_subcubic(n: int, rng: random.Random) -> Graph:
    return random_max_degree(n, 3, rng, fill=rng.uniform(0.3, 1.0))


def random_connected_subcubic(n: int, rng: random.Random) -> Graph:
    """Random spanning tree of maximum degree 3, then random extra edges."""
    deg = [0] * n
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        v = order[i]
        choices = [u for u in order[:i] if deg[u] < 3]
        u = rng.choice(choices)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    extra = rng.randint(0, n)
    for _ in range(4 * extra):
        if extra == 0:
            break
        u, v = rng.randrange(n), rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u != v and key not in edges and deg[u] < 3 and deg[v] < 3:
            edges.add(key)
            deg[u] += 1
            deg[v] += 1
            extra -= 1
    return Graph(n, sorted(edges))


def _drop_isolated(n: int, edges: list[tuple[int, int]]) -> Graph:
    used = sorted({x for e in edges for x in e})
    ix = {v: i for i, v in enumerate(used)}
    return Graph(len(used), [(ix[u], ix[v]) for u, v in edges])


def random_bipartite(a: int, b: int, p: float, rng: random.Random, max_degree: int | None = None) -> Graph:
    """Random bipartite graph between ``0..a-1`` and ``a..a+b-1``; isolated
    vertices are dropped so the result has minimum degree at least one."""
    deg = [0] * (a + b)
    edges = []
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() >= p:
            continue
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return _drop_isolated(a + b, sorted(edges))


def subdivide(g: Graph, rng: random.Random, times: int) -> Graph:
    """Subdivide ``times`` randomly chosen edges (repeats allowed)."""
    edges = list(g.edges)
    n = g.n
    for _ in range(times):
        if not edges:
            break
        i = rng.randrange(len(edges))
        u, v = edges.pop(i)
        edges += [(u, n), (n, v)]
        n += 1
    return Graph(n, edges)


def random_sparse_subcubic(n: int, rng: random.Random) -> Graph:
    """Connected subcubic graph with long threads of 2-vertices, which keeps
    the maximum average degree low."""
    base = random_connected_subcubic(max(2, n // 3), rng)
    return subdivide(base, rng, rng.randint(0, 2 * n))


# -- outerplanar constructions ---------------------------------------------------

def fused_polygons(count: int, rng: random.Random, max_size: int = 7, pendants: float = 0.2) -> Graph:
    """Polygons glued edge to edge along the outer face, with optional pendant
    paths.  Every gluing uses an outer edge whose ends have degree 2, so the
    result is outerplanar with maximum degree 3."""
    size = rng.randint(3, max_size)
    edges = [(i, (i + 1) % size) for i in range(size)]
    n = size
    deg = [2] * size
    outer = set(range(size))  # indexes into edges
    for _ in range(count - 1):
        if rng.random() < pendants:
            cand = [v for v in range(n) if deg[v] <= 2]
            if not cand:
                break
            u = rng.choice(cand)
            length = rng.randint(1, 3)
            prev = u
            for _ in range(length):
                edges.append((prev, n))
                outer.add(len(edges) - 1)
                deg[prev] += 1
                deg.append(1)
                prev = n
                n += 1
            continue
        cand = [i for i in sorted(outer) if deg[edges[i][0]] <= 2 and deg[edges[i][1]] <= 2]
        if not cand:
            break
        i = rng.choice(cand)
        u, v = edges[i]
        outer.discard(i)
        new = rng.randint(1, max_size - 2)
        chain = [u] + list(range(n, n + new)) + [v]
        deg += [2] * new
        n += new
        deg[u] += 1
        deg[v] += 1
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b))
            outer.add(len(edges) - 1)
    return Graph(n, edges)


def subcubic_fan(k: int, rng: random.Random) -> Graph:
    """A path ``p0..pk`` and a hub joined to ``p0``, one inner vertex and ``pk``."""
    k = max(k, 2)
    hub = k + 1
    mid = rng.randint(1, k - 1)
    return Graph(k + 2, [(i, i + 1) for i in range(k)] + [(hub, 0), (hub, mid), (hub, k)])


def random_outerplanar_subcubic(rng: random.Random, max_polygons: int = 6) -> Graph:
    if rng.random() < 0.2:
        return subcubic_fan(rng.randint(2, 10), rng)
    return fused_polygons(rng.randint(2, max_polygons), rng)
