import random

import pytest

from chipfire import GraphConstructionError
from chipfire.catalog import (
    banana_graph,
    complete_graph,
    connected_multigraphs,
    cycle_graph,
    path_graph,
    pentagon_with_chord,
    random_bridged_graph,
    random_connected_multigraph,
)


# -- named graphs ---------------------------------------------------------------


def test_banana_shape():
    g = banana_graph(4)
    assert g.vertices == ("p", "q")
    assert g.m == 4
    assert g.degrees == (4, 4)
    assert g.genus() == 3


def test_cycle_shape():
    g = cycle_graph(5)
    assert g.vertices == ("a", "b", "c", "d", "e")
    assert g.degrees == (2,) * 5
    assert g.genus() == 1
    digon = cycle_graph(2)
    assert digon.m == 2
    with pytest.raises(ValueError):
        cycle_graph(1)


def test_complete_shape():
    g = complete_graph(5)
    assert g.m == 10
    assert g.degrees == (4,) * 5


def test_path_shape():
    g = path_graph(4)
    assert g.degrees == (1, 2, 2, 1)
    assert g.genus() == 0


def test_pentagon_shape(pentagon):
    fresh = pentagon_with_chord()
    assert fresh.vertices == pentagon.vertices == ("v1", "v2", "v3", "v4", "v5")
    assert fresh.m == 6
    assert fresh.degrees == (3, 2, 3, 2, 2)
    assert fresh.genus() == 2


# -- the census -----------------------------------------------------------------


def test_census_tiny_counts():
    # hand counts: one empty graph, parallel-edge chains, paths and triangles
    assert sum(1 for _ in connected_multigraphs(1, 8)) == 1
    assert sum(1 for _ in connected_multigraphs(2, 8)) == 9
    assert sum(1 for _ in connected_multigraphs(3, 8)) == 41


def test_census_full_counts(catalog_full):
    assert len(catalog_full) == 505
    assert sum(1 for g in catalog_full if g.m <= 6) == 111


def test_census_members_are_in_bounds(catalog_full):
    for g in catalog_full:
        assert 1 <= g.n <= 5
        assert g.m <= 8
        # loopless and connected are construction invariants; spot check
        assert all(a != b for a, b in g.edges)


def test_census_contains_simple_classics(catalog_full):
    simple = [
        g
        for g in catalog_full
        if g.n == 5 and all(c <= 1 for row in g.adjacency for c in row)
    ]
    assert len(simple) == 19
    four = [
        g
        for g in catalog_full
        if g.n == 4 and all(c <= 1 for row in g.adjacency for c in row)
    ]
    assert len(four) == 6


def test_census_dedup_toggle():
    with_dup = sum(1 for _ in connected_multigraphs(3, 3, dedup=False))
    without = sum(1 for _ in connected_multigraphs(3, 3, dedup=True))
    assert with_dup > without


def test_census_deterministic_order():
    first = [g.edges for g in connected_multigraphs(3, 4)]
    second = [g.edges for g in connected_multigraphs(3, 4)]
    assert first == second


# -- random generators ------------------------------------------------------------


def test_random_multigraph_bounds():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_multigraph(rng)
        assert 1 <= g.n <= 5
        assert g.m <= 8 or g.m == g.n - 1


def test_random_multigraph_deterministic():
    a = random_connected_multigraph(random.Random(99))
    b = random_connected_multigraph(random.Random(99))
    assert a.vertices == b.vertices and a.edges == b.edges


def test_random_bridged_graph_has_bridge():
    rng = random.Random(7)
    for _ in range(20):
        g = random_bridged_graph(rng)
        bridges = g.bridges()
        assert bridges
        # the joining edge spans the two prefixed sides
        assert any(
            g.vertices[g.edges[e][0]][0] != g.vertices[g.edges[e][1]][0]
            for e in bridges
        )
