from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from injcolor.coloring import (EdgeColoring, VertexColoring, greedy_star_coloring, injective_to_star,
                               is_induced_star_forest, star_forest_decomposition, star_to_injective,
                               verify_injective, verify_star_coloring, brute_force_injective_check)
from injcolor.corpus import get
from injcolor.errors import NotInjective, NotStarColoring, PartialColoring
from injcolor.generators import random_tree
from injcolor.graph import Graph
from injcolor.solver import injective_chromatic_index
from oracles import graphs, star_ok


def test_c4_pairs_valid():
    assert verify_injective(get("C4").graph, [1, 1, 2, 2])


def test_c4_alternating_invalid():
    g = get("C4").graph  # edges (0,1) (1,2) (2,3) (0,3)
    verdict = verify_injective(g, [1, 2, 1, 2])
    assert not verdict
    e, middle, f = verdict.witness
    assert (e, f) == (0, 2)
    assert set(g.edges[middle]) & set(g.edges[e]) and set(g.edges[middle]) & set(g.edges[f])


def test_star_one_colour():
    assert verify_injective(get("K1_5").graph, EdgeColoring((1,) * 5))


def test_partial_coloring():
    with pytest.raises(PartialColoring):
        verify_injective(get("C4").graph, [1, 1, 2])


def test_star_validator_examples():
    p4 = get("P4").graph
    assert verify_star_coloring(p4, [1, 2, 3, 1])
    bad = verify_star_coloring(p4, [1, 2, 1, 2])
    assert not bad and bad.witness == (0, 1, 2, 3)
    improper = verify_star_coloring(p4, [1, 1, 2, 3])
    assert improper.witness == (0, 1)


def test_decomposition_star():
    d = star_forest_decomposition(get("K1_5").graph, [1] * 5)
    assert d.classes == (frozenset(range(5)),)


def test_decomposition_c4():
    g = get("C4").graph
    d = star_forest_decomposition(g, [1, 1, 2, 2])
    assert len(d.classes) == 2
    assert all(len(c) == 2 and is_induced_star_forest(g, c) for c in d.classes)


def test_decomposition_petersen_optimal():
    # Petersen needs 5 colours (DERIVED: exact solver and brute force agree)
    g = get("petersen").graph
    res = injective_chromatic_index(g)
    d = star_forest_decomposition(g, res.coloring)
    assert len(d.classes) == 5
    assert d.to_coloring(g.m) == res.coloring


def test_decomposition_rejects_invalid():
    with pytest.raises(NotInjective):
        star_forest_decomposition(get("C4").graph, [1, 2, 1, 2])


def test_star_to_injective_p4():
    ec = star_to_injective(get("P4").graph, [1, 2, 3, 1])
    assert ec.colors == (1, 3, 2) and ec.palette_size == 3


def test_star_to_injective_triangle():
    ec = star_to_injective(get("C3").graph, VertexColoring((1, 2, 3)))
    assert ec.palette_size == 3 and verify_injective(get("C3").graph, ec)


def test_star_to_injective_rejects():
    with pytest.raises(NotStarColoring):
        star_to_injective(get("P4").graph, [1, 2, 1, 2])


def test_injective_to_star_p4():
    vc = injective_to_star(get("P4").graph, [1, 1, 2])
    assert vc.colors == ((0, 0), (1, 0), (1, 1), (0, 0))
    assert verify_star_coloring(get("P4").graph, vc)


def test_injective_to_star_c4_min_degree_two():
    g = get("C4").graph
    vc = injective_to_star(g, [1, 1, 2, 2])
    assert set(vc.colors) <= {(1, 0), (1, 1), (0, 1)}
    assert verify_star_coloring(g, vc) and vc.palette_size <= 3


def test_injective_to_star_isolated_edge():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    vc = injective_to_star(g, [1, 1, 1])
    assert vc[0] != vc[1]
    assert verify_star_coloring(g, vc)


def test_injective_to_star_rejects():
    with pytest.raises(NotInjective):
        injective_to_star(get("C4").graph, [1, 2, 1, 2])


def test_trees_star_three_colours():
    rng = random.Random(11)
    for _ in range(40):
        t = random_tree(rng.randint(2, 15), rng)
        vc = greedy_star_coloring(t)
        if vc.palette_size == 3:
            ec = star_to_injective(t, vc)
            assert ec.palette_size <= 3 and verify_injective(t, ec)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_validator_matches_oracle(g):
    rng = random.Random(g.m * 31 + g.n)
    for _ in range(5):
        colors = [rng.randint(1, 3) for _ in range(g.m)]
        assert bool(verify_injective(g, colors)) == brute_force_injective_check(g, colors)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_star_validator_matches_oracle(g):
    rng = random.Random(g.m * 17 + g.n)
    for _ in range(5):
        col = [rng.randint(1, 3) for _ in range(g.n)]
        assert bool(verify_star_coloring(g, col)) == star_ok(g, col)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_transformations_round(g):
    vc = greedy_star_coloring(g)
    assert star_ok(g, vc.colors)
    k = vc.palette_size
    ec = star_to_injective(g, vc)
    assert verify_injective(g, ec)
    if g.m:
        assert ec.palette_size <= k * (k - 1) // 2
        back = injective_to_star(g, ec)
        assert star_ok(g, back.colors)
        assert back.palette_size <= 2 ** ec.palette_size
