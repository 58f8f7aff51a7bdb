"""Core graph, tree, pseudotree, flip, and serialization behavior."""

from __future__ import annotations

import itertools

import pytest

from treereconf import (
    Graph,
    Point,
    Pseudotree,
    SpanningTree,
    apply_flip,
    are_flip_adjacent,
    format_graph,
    format_tree,
    fundamental_cycle,
    is_pseudotree,
    parse_graph,
    parse_tree,
    point_sort_key,
    tree_path,
    unique_cycle,
    validate_spanning_tree,
)
from treereconf.graph import iter_edge_subsets, tree_components_without

from conftest import connected_family


def test_family_counts() -> None:
    """The exhaustive family has the known connected-graph counts per size."""
    by_n: dict[int, int] = {}
    for g in connected_family(6):
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def test_edge_ids_are_one_based_and_stable(p4: Graph) -> None:
    assert list(p4.edge_ids()) == [1, 2, 3]
    assert p4.edge(1) == (0, 1)
    assert p4.edge(3) == (2, 3)
    assert p4.edge_id(1, 0) == 1
    assert p4.edge_id(0, 2) is None


def test_graph_rejects_malformed_edges() -> None:
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_incident_is_sorted_with_edge_ids(k4: Graph) -> None:
    assert k4.incident(0) == ((1, 1), (2, 2), (3, 3))
    assert k4.incident(3) == ((0, 3), (1, 5), (2, 6))


def test_point_order_vertices_before_midpoints(p3: Graph) -> None:
    points = sorted(p3.all_points(), key=point_sort_key)
    assert points == [
        Point.vertex(0),
        Point.vertex(1),
        Point.vertex(2),
        Point.midpoint(1),
        Point.midpoint(2),
    ]


def test_spanning_tree_validation(c4: Graph) -> None:
    assert validate_spanning_tree(c4, {1, 2, 3})
    assert not validate_spanning_tree(c4, {1, 2})
    assert not validate_spanning_tree(c4, {1, 2, 3, 4})
    with pytest.raises(ValueError):
        SpanningTree(c4, {1, 3})  # wrong size
    tri = Graph(4, [(0, 1), (1, 2), (2, 0), (1, 3)])
    with pytest.raises(ValueError):
        SpanningTree(tri, {1, 2, 3})  # a cycle plus isolated vertex


def test_tree_degree_views(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    assert star.degrees() == [3, 1, 1, 1]
    assert star.degree(0) == 3
    assert star.max_degree() == 3
    assert star.canonical() == (1, 2, 3)


def test_tree_path_and_fundamental_cycle(c4: Graph) -> None:
    t = SpanningTree(c4, {1, 2, 3})
    assert tree_path(t, 0, 3) == ([0, 1, 2, 3], [1, 2, 3])
    assert tree_path(t, 2, 2) == ([2], [])
    cycle = fundamental_cycle(t, 4)
    assert sorted(cycle) == [1, 2, 3, 4]


def test_tree_components_without(c4: Graph) -> None:
    t = SpanningTree(c4, {1, 2, 3})
    side = tree_components_without(t, 2)
    assert side in (frozenset({0, 1}), frozenset({2, 3}))


def test_flip_adjacency_and_apply(k4: Graph) -> None:
    star0 = SpanningTree(k4, {1, 2, 3})
    star1 = SpanningTree(k4, {1, 4, 5})
    assert not are_flip_adjacent(star0, star1)
    assert are_flip_adjacent(star0, star0)
    u = apply_flip(star0, 3, 5)
    assert u.edge_ids == frozenset({1, 2, 5})
    assert are_flip_adjacent(star0, u)
    with pytest.raises(ValueError):
        apply_flip(star0, 1, 6)  # vertex 1 ends up isolated


def test_pseudotree_unique_cycle(c4: Graph, p4: Graph) -> None:
    q = Pseudotree(c4, {1, 2, 3, 4})
    verts, eids = unique_cycle(q)
    assert sorted(verts) == [0, 1, 2, 3]
    assert sorted(eids) == [1, 2, 3, 4]
    tree_like = Pseudotree(p4, {1, 2, 3})
    assert unique_cycle(tree_like) is None
    assert is_pseudotree(c4, {1, 2, 3, 4})
    assert is_pseudotree(c4, {1, 2, 3})
    assert not is_pseudotree(c4, {1, 2})


def test_graph_serialization_round_trip(k4: Graph) -> None:
    text = format_graph(k4)
    again = parse_graph(text)
    assert again.n == k4.n
    assert [again.edge(e) for e in again.edge_ids()] == [
        k4.edge(e) for e in k4.edge_ids()
    ]
    assert format_graph(again) == text


def test_tree_serialization_round_trip(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    text = format_tree(star)
    assert text == "1 2 3\n"
    again = parse_tree(k4, text)
    assert again.edge_ids == star.edge_ids


def test_parse_graph_rejects_garbage() -> None:
    with pytest.raises(ValueError):
        parse_graph("2\n0 1\n")
    with pytest.raises(ValueError):
        parse_graph("2 2\n0 1\n")
    with pytest.raises(ValueError):
        parse_tree(Graph(3, [(0, 1), (1, 2)]), "1 9\n")


def test_iter_edge_subsets_counts() -> None:
    ids = [1, 2, 3, 4, 5]
    for size in range(6):
        got = list(iter_edge_subsets(ids, size))
        assert len(got) == len(list(itertools.combinations(ids, size)))
        assert got == sorted(got)
