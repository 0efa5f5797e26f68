from __future__ import annotations

import networkx as nx
import pytest

from injcolor import corpus
from injcolor.bounds import conjecture_probe, connected_subcubic_graphs
from injcolor.errors import UnknownName
from injcolor.graph import girth, is_bipartite, mad_exact
from injcolor.solver import injective_chromatic_index


def test_enumeration_counts_small():
    # connected subcubic graphs on 1..7 vertices
    assert [len(level) for level in connected_subcubic_graphs(7)] == [1, 1, 2, 6, 10, 29, 64]


def test_probe_reports_six():
    report = conjecture_probe(0, 30, 5)
    assert report.max_index == 6 and report.ok
    assert report.tree_max <= 3
    assert not report.above_conjecture


def test_probe_bipartite_reaches_five():
    report = conjecture_probe(0, 30, 6, family="subcubic-bipartite")
    assert report.max_index >= 5 and report.ok
    assert report.tree_max <= 3


def test_probe_is_deterministic():
    a = conjecture_probe(3, 40, 4, include_corpus=False)
    b = conjecture_probe(3, 40, 4, include_corpus=False)
    assert a.histogram == b.histogram and a.argmax == b.argmax


def test_probe_unknown_family():
    with pytest.raises(ValueError):
        conjecture_probe(0, 1, 3, family="planar")


@pytest.mark.parametrize("name", corpus.names())
def test_fixture_value(name):
    ng = corpus.get(name)
    corpus.check_structure(name)
    if ng.expected_index is not None:
        assert injective_chromatic_index(ng.graph).index == ng.expected_index
    if ng.expected_mad is not None:
        assert mad_exact(ng.graph) == ng.expected_mad


def test_fixture_structure():
    heawood = corpus.get("heawood").graph
    assert (heawood.n, heawood.m, girth(heawood)) == (14, 21, 6)
    assert nx.diameter(heawood.to_networkx()) == 3
    fig1 = corpus.get("fig1_bipartite_cubic").graph
    assert is_bipartite(fig1) and {fig1.degree(v) for v in range(fig1.n)} == {3}


def test_unknown_name():
    with pytest.raises(UnknownName):
        corpus.get("dodecahedron")
