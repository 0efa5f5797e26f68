from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from injcolor.corpus import get
from injcolor.errors import (DuplicateEdge, EmptyGraph, LoopEdge, NotBipartite, SameEdge,
                             VertexOutOfRange)
from injcolor.graph import (Graph, bipartition, build_graph, conflict_graph, connected_components,
                            degrees, edges_conflict, girth, is_bipartite, mad_exact, max_degree,
                            min_degree)
from oracles import conflict_by_sets, graphs, mad_by_subsets


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3 and g.edges == ((0, 1), (1, 2), (0, 2))


@pytest.mark.parametrize("n,pairs,exc", [
    (2, [(0, 0)], LoopEdge),
    (4, [(0, 1), (0, 1)], DuplicateEdge),
    (4, [(0, 1), (1, 0)], DuplicateEdge),
    (3, [(0, 3)], VertexOutOfRange),
])
def test_build_rejects(n, pairs, exc):
    with pytest.raises(exc):
        build_graph(n, pairs)


def test_degrees():
    assert set(degrees(get("petersen").graph)) == {3}
    assert sorted(degrees(get("K1_5").graph)) == [1, 1, 1, 1, 1, 5]
    assert degrees(get("P4").graph) == [1, 2, 2, 1]
    with pytest.raises(EmptyGraph):
        max_degree(Graph(0))
    with pytest.raises(EmptyGraph):
        min_degree(Graph(0))


def test_girth():
    assert girth(get("heawood").graph) == 6
    assert girth(get("K4").graph) == 3
    assert girth(get("P7").graph) == math.inf
    assert girth(get("C11").graph) == 11


def test_bipartition_even_cycle():
    bp = bipartition(get("C6").graph)
    assert len(bp.side_a) == len(bp.side_b) == 3


def test_bipartition_odd_cycle_witness():
    g = get("C5").graph
    with pytest.raises(NotBipartite) as info:
        bipartition(g)
    cyc = info.value.witness
    assert sorted(cyc) == list(range(5))
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))


def test_bipartition_fig1():
    # v1..v10 are vertices 0..9
    bp = bipartition(get("fig1_bipartite_cubic").graph)
    sides = {frozenset(bp.side_a), frozenset(bp.side_b)}
    assert sides == {frozenset({0, 1, 4, 7, 8}), frozenset({2, 3, 5, 6, 9})}


def test_mad_examples():
    assert mad_exact(get("fig2_sun").graph) == 2
    assert mad_exact(get("P4").graph) == Fraction(3, 2)
    assert mad_exact(get("petersen").graph) == 3
    assert mad_exact(get("K4_7").graph) == Fraction(56, 11)
    assert mad_exact(Graph(3)) == 0
    with pytest.raises(EmptyGraph):
        mad_exact(Graph(0))


def test_conflict_graph_examples():
    p4 = conflict_graph(get("P4").graph).base
    assert p4.edges == ((0, 2),)
    assert conflict_graph(get("C3").graph).base.m == 3
    k4 = conflict_graph(get("K4").graph).base
    assert k4.n == 6 and k4.m == 15


def test_edges_conflict_examples():
    p3 = get("P3").graph
    assert not edges_conflict(p3, 0, 1)
    k3 = get("C3").graph
    assert edges_conflict(k3, 0, 1) and edges_conflict(k3, 1, 2)
    assert edges_conflict(get("P4").graph, 0, 2)
    with pytest.raises(SameEdge):
        edges_conflict(k3, 1, 1)


def test_components():
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert sorted(map(len, connected_components(two))) == [3, 3]
    assert len(connected_components(get("petersen").graph)) == 1
    assert connected_components(Graph(5)) == [[0], [1], [2], [3], [4]]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_conflict_matches_set_oracle(g):
    for e in range(g.m):
        for f in range(g.m):
            if e != f:
                assert edges_conflict(g, e, f) == conflict_by_sets(g, e, f)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_mad_matches_subset_oracle(g):
    assert mad_exact(g) == mad_by_subsets(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_bipartite_agrees_with_networkx(g):
    import networkx as nx

    assert is_bipartite(g) == nx.is_bipartite(g.to_networkx())
