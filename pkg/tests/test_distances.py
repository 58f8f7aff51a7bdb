"""Doubled-distance primitives: BFS halves, eccentricity, diameter, centers."""

from __future__ import annotations

import networkx as nx

from treereconf import (
    Graph,
    Point,
    Pseudotree,
    SpanningTree,
    center_points,
    diameter_half,
    eccentricity_half,
    eccentricity_half_subgraph,
    half_distances,
    point_distances_half,
    point_sort_key,
)

from conftest import connected_family, from_networkx


def test_half_distances_from_midpoint(p3: Graph) -> None:
    got = half_distances(p3, {1, 2}, Point.midpoint(1))
    assert got == {
        Point.vertex(0): 1,
        Point.vertex(1): 1,
        Point.vertex(2): 3,
        Point.midpoint(1): 0,
        Point.midpoint(2): 2,
    }


def test_point_distances_on_path(p3: Graph) -> None:
    t = SpanningTree(p3, {1, 2})
    got = point_distances_half(t, Point.vertex(0))
    assert got == {
        Point.vertex(0): 0,
        Point.midpoint(1): 1,
        Point.vertex(1): 2,
        Point.midpoint(2): 3,
        Point.vertex(2): 4,
    }


def test_eccentricities(star3: Graph, c4: Graph) -> None:
    ts = SpanningTree(star3, {1, 2, 3})
    assert eccentricity_half(ts, Point.vertex(0)) == 2
    assert eccentricity_half(ts, Point.vertex(1)) == 4
    qc4 = Pseudotree(c4, {1, 2, 3, 4})
    assert eccentricity_half(qc4, Point.midpoint(1)) == 3
    assert eccentricity_half(qc4, Point.vertex(0)) == 4


def test_diameter_values(p3: Graph, star3: Graph) -> None:
    assert diameter_half(SpanningTree(p3, {1, 2})) == 4
    assert diameter_half(SpanningTree(star3, {1, 2, 3})) == 4


def test_center_point_sets(p3: Graph, star3: Graph, c4: Graph) -> None:
    assert center_points(SpanningTree(star3, {1, 2, 3}), 2) == {Point.vertex(0)}
    assert center_points(SpanningTree(p3, {1, 2}), 2) == {Point.vertex(1)}
    got = center_points(Pseudotree(c4, {1, 2, 3, 4}), 3)
    assert got == {Point.midpoint(e) for e in (1, 2, 3, 4)}
    assert center_points(SpanningTree(p3, {1, 2}), 1) == set()


def test_subgraph_eccentricity(c4: Graph) -> None:
    assert eccentricity_half_subgraph(c4, {1, 2, 3}, Point.vertex(0)) == 6
    assert eccentricity_half_subgraph(c4, {1, 2, 3, 4}, Point.midpoint(1)) == 3


def test_half_distances_match_networkx_on_trees() -> None:
    """Doubled vertex distances agree with an independent BFS on every tree."""
    for g in connected_family(5):
        if g.n < 2:
            continue
        ids = _some_tree_ids(g)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        for e in ids:
            nxg.add_edge(*g.edge(e))
        for src in range(g.n):
            plain = nx.single_source_shortest_path_length(nxg, src)
            got = half_distances(g, ids, Point.vertex(src))
            for v, dist in plain.items():
                assert got[Point.vertex(v)] == 2 * dist


def _some_tree_ids(g: Graph) -> frozenset[int]:
    """A deterministic spanning tree: greedy in ascending edge-id order."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: set[int] = set()
    for eid in g.edge_ids():
        u, v = g.edge(eid)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add(eid)
    return frozenset(chosen)


def test_diameter_equals_pairwise_maximum() -> None:
    """diameter_half equals the max doubled point distance, every small tree."""
    for g in connected_family(5):
        if g.n < 2:
            continue
        t = SpanningTree(g, _some_tree_ids(g))
        points = sorted(g.all_points(), key=point_sort_key)
        on_tree = [p for p in points if g.point_on(p, t.edge_ids)]
        best = 0
        for p in on_tree:
            dists = point_distances_half(t, p)
            best = max(best, max(dists.values()))
        assert diameter_half(t) == best
