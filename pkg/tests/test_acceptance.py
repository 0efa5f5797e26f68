"""End-to-end acceptance checks, one test per criterion.

Each test records PASS/FAIL with a short detail line; conftest prints the
table at the end of the run.  Runtime limits are part of each criterion.
"""

from __future__ import annotations

import random
import shutil
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations

import networkx as nx

from injcolor import corpus
from injcolor.bounds import (bipartite_bound, color_bipartite, color_general,
                             color_outerplanar_subcubic, color_path_or_cycle,
                             color_subcubic_bipartite, color_subcubic_mad, color_tree,
                             conjecture_probe, general_bound, verify_strong_property)
from injcolor.coloring import (greedy_star_coloring, injective_to_star, star_to_injective,
                               verify_injective, verify_star_coloring)
from injcolor.generators import (random_bipartite, random_graph, random_graph_max_edges,
                                 random_max_degree, random_outerplanar_subcubic,
                                 random_sparse_subcubic, random_subcubic, random_tree)
from injcolor.graph import Graph, bipartition, degrees, is_forest, mad_exact
from injcolor.io import parse_graph, write_graph
from injcolor.solver import brute_force_index, injective_chromatic_index
from oracles import star_ok


class Check:
    """Collects failures for one criterion and records the verdict."""

    def __init__(self, record, number: int, limit: float):
        self.record, self.number, self.limit = record, number, limit
        self.failures: list[str] = []
        self.start = time.perf_counter()
        self.notes: list[str] = []

    def expect(self, cond: bool, what: str) -> None:
        if not cond:
            self.failures.append(what)

    def finish(self) -> None:
        elapsed = time.perf_counter() - self.start
        self.expect(elapsed < self.limit, f"runtime {elapsed:.1f}s exceeds {self.limit:.0f}s")
        ok = not self.failures
        detail = f"{elapsed:.1f}s; " + "; ".join(self.notes + self.failures[:5])
        self.record[self.number] = (ok, detail)
        print(f"criterion {self.number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, self.failures[:10]


def _index(g: Graph) -> int:
    return injective_chromatic_index(g).index


# -- 1 ------------------------------------------------------------------------------------

def test_criterion_1_known_values(acceptance_record):
    chk = Check(acceptance_record, 1, 60)
    for n in range(4, 13):
        chk.expect(_index(corpus.path(n)) == 2, f"P{n}")
    for n in range(3, 13):
        chk.expect(_index(corpus.cycle(n)) == (2 if n % 4 == 0 else 3), f"C{n}")
    for k in range(1, 9):
        chk.expect(_index(corpus.star(k)) == 1, f"K1_{k}")
    rng = random.Random(2024)
    worst = 0
    for _ in range(200):
        t = random_tree(rng.randint(2, 20), rng)
        worst = max(worst, _index(t))
    chk.expect(worst <= 3, f"a tree needed {worst} colours")
    expected = {"K3_3": 3, "K4_7": 4, "K4": 6, "prism": 6, "heawood": 4,
                "fig1_bipartite_cubic": 5, "fig2_sun": 4, "fig3_outerplanar": 5}
    for name, value in expected.items():
        got = _index(corpus.get(name).graph)
        chk.expect(got == value, f"{name}: {got} != {value}")
    chk.expect(mad_exact(corpus.get("fig2_sun").graph) == 2, "fig2 mad")
    chk.notes.append(f"200 trees max {worst}")
    chk.finish()


# -- 2 ------------------------------------------------------------------------------------

def test_criterion_2_conflict_graph_equivalence(acceptance_record):
    chk = Check(acceptance_record, 2, 120)
    rng = random.Random(7)
    for i in range(500):
        g = random_graph_max_edges(rng.randint(2, 9), 12, rng)
        if g.m == 0:
            continue
        a, b = brute_force_index(g), _index(g)
        chk.expect(a == b, f"graph {i}: brute {a} vs solver {b}")
    chk.notes.append("500 graphs with m <= 12")
    chk.finish()


# -- 3 ------------------------------------------------------------------------------------

def _gen_general(rng):
    g = random_max_degree(rng.randint(5, 12), rng.choice((3, 4, 5)), rng, fill=rng.uniform(0.5, 1))
    return g if g.m and max(degrees(g)) >= 3 else None


def _gen_bipartite(rng):
    g = random_bipartite(rng.randint(1, 7), rng.randint(1, 7), rng.uniform(0.2, 0.8), rng)
    return g if g.m else None


def _gen_subcubic_bipartite(rng):
    g = random_bipartite(rng.randint(1, 9), rng.randint(1, 9), rng.uniform(0.2, 0.8), rng, max_degree=3)
    return g if g.m else None


def _gen_mad(threshold):
    def gen(rng):
        g = random_sparse_subcubic(rng.randint(4, 16), rng) if rng.random() < 0.7 else \
            random_subcubic(rng.randint(3, 12), rng)
        return g if g.m and mad_exact(g) < threshold else None
    return gen


def _gen_outerplanar(rng):
    return random_outerplanar_subcubic(rng)


def _gen_tree(rng):
    return random_tree(rng.randint(2, 20), rng)


def _gen_pathcycle(rng):
    g = random_max_degree(rng.randint(2, 16), 2, rng, fill=rng.uniform(0.3, 1))
    return g if g.m else None


def _claimed(method: str, g: Graph) -> int:
    if method == "general":
        return general_bound(max(degrees(g)))
    if method == "bipartite":
        bp = bipartition(g)
        return bipartite_bound(bp.delta_a, bp.delta_b)
    return {"subcubic-bipartite": 6, "mad73": 4, "mad83": 6, "mad3": 7,
            "outerplanar": 5, "tree": 3}[method]


METHODS = {
    "general": (color_general, _gen_general),
    "bipartite": (color_bipartite, _gen_bipartite),
    "subcubic-bipartite": (color_subcubic_bipartite, _gen_subcubic_bipartite),
    "mad73": (lambda g: color_subcubic_mad(g, "mad73"), _gen_mad(Fraction(7, 3))),
    "mad83": (lambda g: color_subcubic_mad(g, "mad83"), _gen_mad(Fraction(8, 3))),
    "mad3": (lambda g: color_subcubic_mad(g, "mad3"), _gen_mad(Fraction(3))),
    "outerplanar": (color_outerplanar_subcubic, _gen_outerplanar),
    "tree": (color_tree, _gen_tree),
    "pathcycle": (color_path_or_cycle, _gen_pathcycle),
}


def _precondition(method: str, g: Graph) -> bool:
    if g.m == 0:
        return False
    deg = degrees(g)
    d = max(deg)
    if method == "general":
        return d >= 3
    if method in ("bipartite", "subcubic-bipartite"):
        ok = min(deg) >= 1 and nx.is_bipartite(g.to_networkx())
        return ok and (method == "bipartite" or d <= 3)
    if method.startswith("mad"):
        return d <= 3 and mad_exact(g) < {"mad73": Fraction(7, 3), "mad83": Fraction(8, 3),
                                          "mad3": Fraction(3)}[method]
    if method == "outerplanar":
        if d > 3:
            return False
        h = g.to_networkx()
        h.add_edges_from((g.n, v) for v in range(g.n))
        return nx.check_planarity(h)[0]
    if method == "tree":
        return is_forest(g)
    return d <= 2


def _check_bound(chk: Check, method: str, g: Graph, label: str) -> None:
    color, _ = METHODS[method]
    res = color(g)
    claimed = res.bound_claimed
    if method == "pathcycle":
        exact = _index(g)
        chk.expect(res.palette_size == claimed == exact, f"{method} {label}: not exact")
        return
    chk.expect(claimed == _claimed(method, g), f"{method} {label}: claimed {claimed}")
    chk.expect(bool(verify_injective(g, res.coloring)), f"{method} {label}: invalid colouring")
    chk.expect(res.palette_size <= claimed, f"{method} {label}: {res.palette_size} > {claimed}")
    if g.m <= 40:
        chk.expect(_index(g) <= res.palette_size, f"{method} {label}: index above palette")


def test_criterion_3_bound_soundness(acceptance_record):
    chk = Check(acceptance_record, 3, 600)
    counts = {}
    for method, (_, gen) in METHODS.items():
        for ng in corpus.all_graphs():
            if _precondition(method, ng.graph):
                _check_bound(chk, method, ng.graph, ng.name)
        rng = random.Random(sum(map(ord, method)))
        done = 0
        while done < 1000:
            g = gen(rng)
            if g is None:
                continue
            chk.expect(_precondition(method, g), f"{method} #{done}: generator broke the precondition")
            _check_bound(chk, method, g, f"#{done}")
            done += 1
        counts[method] = done
    chk.notes.append(f"1000 random graphs x {len(counts)} methods + corpus")
    chk.finish()


# -- 4 ------------------------------------------------------------------------------------

def test_criterion_4_subcubic_ceiling(acceptance_record):
    chk = Check(acceptance_record, 4, 900)
    general = conjecture_probe(0, 2000, 9)
    bip = conjecture_probe(0, 2000, 9, family="subcubic-bipartite")
    chk.expect(general.enumerated == sum([1, 1, 2, 6, 10, 29, 64, 194, 531]), "enumeration count")
    chk.expect(not general.above_bound, f"index > 8 found: {general.above_bound[:3]}")
    chk.expect(not bip.above_bound, f"bipartite index > 6 found: {bip.above_bound[:3]}")
    chk.expect(bip.max_index >= 5, "bipartite maximum below 5")
    chk.expect(general.max_index == 6, "K4/prism value 6 not reported")
    chk.expect(general.tree_max <= 3 and bip.tree_max <= 3, "a tree above 3")
    chk.notes.append(f"subcubic max {general.max_index}, above 6: {len(general.above_conjecture)}; "
                     f"bipartite max {bip.max_index}, above 5: {len(bip.above_conjecture)}")
    print(general.summary())
    print(bip.summary())
    chk.finish()


# -- 5 ------------------------------------------------------------------------------------

def _mad_brute(g: Graph) -> Fraction:
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    best = Fraction(0)
    for s in range(1, 1 << g.n):
        e = sum(1 for m in masks if m & s == m)
        best = max(best, Fraction(2 * e, bin(s).count("1")))
    return best


def test_criterion_5_mad_oracle(acceptance_record):
    chk = Check(acceptance_record, 5, 60)
    rng = random.Random(5)
    for i in range(200):
        g = random_graph(rng.randint(1, 12), rng.uniform(0.1, 0.7), rng)
        a, b = mad_exact(g), _mad_brute(g)
        chk.expect(a == b, f"graph {i}: {a} vs {b}")
    chk.notes.append("200 graphs n <= 12")
    chk.finish()


# -- 6 ------------------------------------------------------------------------------------

def _min_degree_two(rng) -> Graph:
    n = rng.randint(4, 12)
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges = {(min(e), max(e)) for e in edges}
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.15:
            edges.add((u, v))
    return Graph(n, sorted(edges))


def test_criterion_6_transformations(acceptance_record):
    chk = Check(acceptance_record, 6, 120)
    rng = random.Random(6)
    for i in range(300):
        g = random_graph(rng.randint(2, 12), rng.uniform(0.15, 0.6), rng)
        order = list(range(g.n))
        rng.shuffle(order)
        vc = greedy_star_coloring(g, order)
        chk.expect(star_ok(g, vc.colors), f"star input {i}")
        k = vc.palette_size
        ec = star_to_injective(g, vc)
        chk.expect(bool(verify_injective(g, ec)), f"star->injective {i} invalid")
        chk.expect(g.m == 0 or ec.palette_size <= k * (k - 1) // 2, f"star->injective {i} too many")
    tight = 0
    for i in range(300):
        g = _min_degree_two(rng) if i % 2 else random_graph(rng.randint(2, 12), rng.uniform(0.2, 0.6), rng)
        if g.m == 0:
            g = Graph(2, [(0, 1)])
        ec = injective_chromatic_index(g).coloring
        k = ec.palette_size
        vc = injective_to_star(g, ec)
        chk.expect(bool(verify_star_coloring(g, vc)) and star_ok(g, vc.colors), f"injective->star {i}")
        limit = 2 ** k - 1 if min(degrees(g)) >= 2 else 2 ** k
        tight += min(degrees(g)) >= 2
        chk.expect(vc.palette_size <= limit, f"injective->star {i}: {vc.palette_size} > {limit}")
    chk.notes.append(f"300 + 300 colourings, {tight} with min degree >= 2")
    chk.finish()


# -- 7 ------------------------------------------------------------------------------------

def test_criterion_7_outerplanar(acceptance_record):
    chk = Check(acceptance_record, 7, 60)
    rng = random.Random(77)
    worst = 0
    for i in range(100):
        g = random_outerplanar_subcubic(rng)
        res = color_outerplanar_subcubic(g)
        worst = max(worst, res.palette_size)
        chk.expect(bool(verify_injective(g, res.coloring)), f"graph {i} invalid")
        chk.expect(res.palette_size <= 5, f"graph {i}: {res.palette_size} colours")
        chk.expect(bool(verify_strong_property(g, res.coloring)), f"graph {i}: path property")
    fig3 = corpus.get("fig3_outerplanar").graph
    res = color_outerplanar_subcubic(fig3)
    chk.expect(res.palette_size == 5 and bool(verify_strong_property(fig3, res.coloring)), "fig3")
    chk.notes.append(f"100 graphs max {worst} colours, fig3 {res.palette_size}")
    chk.finish()


# -- 8 ------------------------------------------------------------------------------------

def _inj_command() -> list[str]:
    exe = shutil.which("inj")
    return [exe] if exe else [sys.executable, "-m", "injcolor.cli"]


def test_criterion_8_formats_and_corpus_check(acceptance_record):
    chk = Check(acceptance_record, 8, 120)
    rng = random.Random(8)
    graphs = [random_graph(rng.randint(1, 10), rng.uniform(0, 0.7), rng) for _ in range(300)]
    graphs += [ng.graph for ng in corpus.all_graphs()]
    for i, g in enumerate(graphs):
        for fmt in ("edgelist", "dimacs"):
            chk.expect(parse_graph(write_graph(g, fmt), fmt) == g, f"{fmt} round trip {i}")
        text = write_graph(g, "graph6")
        back = parse_graph(text, "graph6")
        chk.expect(sorted(back.edges) == sorted(g.edges) and back.n == g.n, f"graph6 round trip {i}")
        chk.expect(write_graph(back, "graph6") == text, f"graph6 re-encode {i}")
    proc = subprocess.run(_inj_command() + ["corpus", "--check"], capture_output=True, text=True)
    chk.expect(proc.returncode == 0, f"inj corpus --check exited {proc.returncode}")
    chk.notes.append(f"{len(graphs)} graphs x 3 formats; corpus --check exit {proc.returncode}")
    chk.finish()
