"""Empirical check of the conjectured bounds on subcubic graphs.

Every connected subcubic graph up to a small order is enumerated, random
samples of larger order are added, and the exact injective chromatic
index of each is compared with the conjectured value (6 in general, 5 for
bipartite graphs) and with the proven bound above it.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

import networkx as nx

from ..corpus import get
from ..generators import random_bipartite, random_connected_subcubic
from ..graph import Graph, is_bipartite, is_connected, is_forest
from ..io import to_graph6
from ..solver import injective_chromatic_index

SUBCUBIC = "subcubic"
SUBCUBIC_BIPARTITE = "subcubic-bipartite"

# conjectured value, proven upper bound
LIMITS = {SUBCUBIC: (6, 8), SUBCUBIC_BIPARTITE: (5, 6)}
CORPUS = {SUBCUBIC: ("K4", "prism", "petersen", "fig1_bipartite_cubic"),
          SUBCUBIC_BIPARTITE: ("heawood", "fig1_bipartite_cubic", "K3_3")}


@dataclass
class ProbeReport:
    family: str
    checked: int = 0
    enumerated: int = 0
    sampled: int = 0
    max_index: int = 0
    argmax: str = ""
    tree_max: int = 0
    histogram: Counter = field(default_factory=Counter)
    above_conjecture: list[str] = field(default_factory=list)
    above_bound: list[str] = field(default_factory=list)

    @property
    def conjecture(self) -> int:
        return LIMITS[self.family][0]

    @property
    def bound(self) -> int:
        return LIMITS[self.family][1]

    @property
    def ok(self) -> bool:
        return not self.above_bound

    def summary(self) -> str:
        hist = " ".join(f"{k}:{v}" for k, v in sorted(self.histogram.items()))
        return (f"{self.family}: {self.checked} graphs ({self.enumerated} enumerated, "
                f"{self.sampled} sampled), max index {self.max_index} ({self.argmax}), "
                f"trees max {self.tree_max}, above {self.conjecture}: {len(self.above_conjecture)}, "
                f"above {self.bound}: {len(self.above_bound)}; histogram {hist}")


def _to_graph(h: nx.Graph) -> Graph:
    ix = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(ix), sorted((min(ix[u], ix[v]), max(ix[u], ix[v])) for u, v in h.edges))


def connected_subcubic_graphs(max_n: int) -> list[list[Graph]]:
    """All connected subcubic graphs on ``1..max_n`` vertices up to isomorphism,
    as ``out[n - 1]``.

    A connected graph always has a vertex whose removal keeps it connected,
    so every graph on ``n`` vertices arises from one on ``n - 1`` vertices by
    adding a vertex joined to one, two or three vertices of degree below 3.
    """
    from itertools import combinations

    levels: list[list[nx.Graph]] = []
    current = [nx.empty_graph(1)] if max_n >= 1 else []
    while current and len(levels) < max_n:
        levels.append(current)
        n = len(levels)
        if n == max_n:
            break
        buckets: dict[str, list[nx.Graph]] = {}
        nxt = []
        for h in current:
            room = [v for v in h.nodes if h.degree(v) < 3]
            for k in (1, 2, 3):
                for sub in combinations(room, k):
                    cand = h.copy()
                    cand.add_edges_from((n, v) for v in sub)
                    key = nx.weisfeiler_lehman_graph_hash(cand, iterations=3)
                    bucket = buckets.setdefault(key, [])
                    if not any(nx.is_isomorphic(cand, other) for other in bucket):
                        bucket.append(cand)
                        nxt.append(cand)
        current = nxt
    return [[_to_graph(h) for h in level] for level in levels]


def _sample(family: str, rng: random.Random, max_n: int) -> Graph:
    if family == SUBCUBIC:
        return random_connected_subcubic(rng.randint(2, max_n), rng)
    while True:
        a = rng.randint(1, max_n // 2)
        b = rng.randint(1, max(1, max_n - a))
        g = random_bipartite(a, b, rng.uniform(0.3, 0.9), rng, max_degree=3)
        if g.m:
            comp = max(nx.connected_components(g.to_networkx()), key=len)
            return _to_graph(g.to_networkx().subgraph(comp))


def conjecture_probe(seed: int, count: int, max_n: int, *, family: str = SUBCUBIC,
                     sample_max_n: int = 14, include_corpus: bool = True) -> ProbeReport:
    """Exhaustive sweep up to ``max_n`` vertices, then ``count`` random connected
    samples with at most ``sample_max_n`` vertices."""
    if family not in LIMITS:
        raise ValueError(f"unknown family {family!r}")
    report = ProbeReport(family)
    conj, bound = LIMITS[family]

    def record(g: Graph) -> None:
        if g.m == 0:
            return
        idx = injective_chromatic_index(g).index
        report.checked += 1
        report.histogram[idx] += 1
        if idx > report.max_index:
            report.max_index, report.argmax = idx, to_graph6(g)
        if is_forest(g):
            report.tree_max = max(report.tree_max, idx)
        if idx > conj:
            report.above_conjecture.append(to_graph6(g))
        if idx > bound:
            report.above_bound.append(to_graph6(g))

    for level in connected_subcubic_graphs(max_n):
        for g in level:
            if family == SUBCUBIC_BIPARTITE and not is_bipartite(g):
                continue
            report.enumerated += 1
            record(g)
    rng = random.Random(seed)
    for _ in range(count):
        g = _sample(family, rng, sample_max_n)
        assert is_connected(g)
        report.sampled += 1
        record(g)
    if include_corpus:
        for name in CORPUS[family]:
            record(get(name).graph)
    return report
