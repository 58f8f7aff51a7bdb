"""Diameter-constrained reconfiguration: witnesses, center graph, splitting."""

from __future__ import annotations

import itertools

import pytest

from treereconf import (
    Constraint,
    Graph,
    Point,
    Pseudotree,
    SpanningTree,
    build_center_aux_graph,
    build_cyclic_search,
    decide_small_diameter,
    diameter_half,
    eccentricity_half,
    enumerate_pseudotrees,
    enumerate_spanning_trees,
    find_good_cyclic_pseudotree,
    find_good_tree,
    flip_component_map,
    is_good_triple,
    lambda_labels,
    oracle_center_pair,
    point_sort_key,
    same_center_sequence,
    sequence_small_diameter,
    split_pseudotree,
    validate_sequence,
)


def test_opposite_midpoints_cyclic_witness(c4: Graph) -> None:
    """On the 4-cycle at d=3 the only witness joining opposite midpoints is
    the full cycle, which no tree search can find."""
    r1, r2 = Point.midpoint(1), Point.midpoint(3)
    assert find_good_tree(c4, 3, r1, r2) is None
    q = find_good_cyclic_pseudotree(c4, 3, r1, r2)
    assert q is not None
    assert q.edge_ids == frozenset({1, 2, 3, 4})
    assert is_good_triple(c4, 3, r1, r2, q)


def test_good_triple_rejects_bad_center(c4: Graph) -> None:
    q = Pseudotree(c4, {1, 2, 3, 4})
    assert not is_good_triple(c4, 3, Point.vertex(0), Point.vertex(2), q)


def test_lambda_labels_cover_all_vertices(p4: Graph) -> None:
    t = SpanningTree(p4, {1, 2, 3})
    lam = lambda_labels(p4, t, Point.vertex(1), Point.vertex(2))
    assert [v for v, _ in lam.items()] == [0, 1, 2, 3]


def test_decide_frozen_cases(k4: Graph, c4: Graph) -> None:
    star0 = SpanningTree(k4, {1, 2, 3})
    star1 = SpanningTree(k4, {1, 4, 5})
    assert decide_small_diameter(k4, 2, star0, star1) is False
    assert decide_small_diameter(k4, 2, star0, star0) is True
    for ids_a, ids_b in itertools.product(enumerate_spanning_trees(c4), repeat=2):
        ta, tb = SpanningTree(c4, ids_a), SpanningTree(c4, ids_b)
        assert decide_small_diameter(c4, 3, ta, tb) is True


def test_decide_rejects_oversized_endpoints(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    path = SpanningTree(k4, {1, 4, 6})
    with pytest.raises(ValueError):
        decide_small_diameter(k4, 2, star, path)  # the path has diameter 3


def test_decide_and_sequence_match_oracle_small() -> None:
    """Lazy decide, precomputed decide, and sequences agree with brute force."""
    tri = Graph(3, [(0, 1), (0, 2), (1, 2)])
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    for g in (tri, p4, c4, k4):
        search = build_cyclic_search(g)
        trees = [SpanningTree(g, ids) for ids in enumerate_spanning_trees(g)]
        for d in (1, 2, 3, 4):
            ok_trees = [t for t in trees if diameter_half(t) <= 2 * d]
            if not ok_trees:
                continue
            comp = flip_component_map(g, Constraint.diam_le(d))
            aux = build_center_aux_graph(g, d, search=search)
            for ta, tb in itertools.product(ok_trees, repeat=2):
                want = comp[ta.canonical()] == comp[tb.canonical()]
                assert decide_small_diameter(g, d, ta, tb) == want
                assert decide_small_diameter(g, d, ta, tb, aux=aux) == want
                seq = sequence_small_diameter(g, d, ta, tb, aux=aux)
                if want:
                    assert seq is not None
                    valid, reason = validate_sequence(seq)
                    assert valid, reason
                    assert seq.first().edge_ids == ta.edge_ids
                    assert seq.last().edge_ids == tb.edge_ids
                    assert seq.constraint == Constraint.diam_le(d)
                else:
                    assert seq is None


def test_witness_search_is_complete(c4: Graph, k4: Graph) -> None:
    """Tree search plus cyclic search find a witness iff any pseudotree works."""
    for g in (c4, k4):
        search = build_cyclic_search(g)
        pseudos = [Pseudotree(g, ids) for ids in enumerate_pseudotrees(g)]
        points = sorted(g.all_points(), key=point_sort_key)
        for d in (2, 3):
            for i, p in enumerate(points):
                for q in points[i + 1 :]:
                    found = find_good_tree(g, d, p, q) is not None or (
                        find_good_cyclic_pseudotree(g, d, p, q, search=search)
                        is not None
                    )
                    exhaustive = any(
                        is_good_triple(g, d, p, q, c) for c in pseudos
                    )
                    assert found == exhaustive, (d, p, q)


def test_oracle_center_pair_implies_connected(c4: Graph) -> None:
    pseudos = list(enumerate_pseudotrees(c4))
    points = sorted(c4.all_points(), key=point_sort_key)
    for d in (2, 3):
        aux = build_center_aux_graph(c4, d)
        for i, p in enumerate(points):
            for q in points[i + 1 :]:
                if oracle_center_pair(c4, d, p, q, pseudotrees=pseudos):
                    assert aux.same_component(p, q)


def test_center_aux_graph_edges_carry_witnesses(k4: Graph) -> None:
    aux = build_center_aux_graph(k4, 3)
    edges = aux.edges()
    assert edges, "K4 at d=3 must have auxiliary edges"
    for p, q in edges:
        tri = aux.witness(p, q)
        assert tri.r1 == p and tri.r2 == q
        assert is_good_triple(k4, 3, p, q, tri.q)
    with pytest.raises(KeyError):
        aux.witness(Point.vertex(0), Point.vertex(0))


def test_same_center_sequence_shared_vertex(c4: Graph) -> None:
    """Two 4-cycle paths sharing vertex 2 within doubled eccentricity 4."""
    pa = SpanningTree(c4, {1, 2, 3})
    pb = SpanningTree(c4, {2, 3, 4})
    seq = same_center_sequence(c4, 4, pa, pb, Point.vertex(2))
    valid, reason = validate_sequence(seq)
    assert valid, reason
    assert len(seq) == 1
    for t in seq.trees:
        assert eccentricity_half(t, Point.vertex(2)) <= 4


def test_same_center_sequence_shared_midpoint(c4: Graph) -> None:
    pa = SpanningTree(c4, {1, 2, 3})
    pc = SpanningTree(c4, {1, 2, 4})
    seq = same_center_sequence(c4, 5, pa, pc, Point.midpoint(1))
    valid, reason = validate_sequence(seq)
    assert valid, reason
    assert len(seq) == 1
    for t in seq.trees:
        assert eccentricity_half(t, Point.midpoint(1)) <= 5


def test_same_center_sequence_trivial(c4: Graph) -> None:
    pa = SpanningTree(c4, {1, 2, 3})
    seq = same_center_sequence(c4, 3, pa, pa, Point.midpoint(2))
    assert len(seq) == 0 and len(seq.trees) == 1


def test_same_center_sequence_rejects_non_center(c4: Graph) -> None:
    pa = SpanningTree(c4, {1, 2, 3})
    pb = SpanningTree(c4, {2, 3, 4})
    with pytest.raises(ValueError):
        same_center_sequence(c4, 3, pa, pb, Point.vertex(0))


def test_split_pseudotree_frozen(c4: Graph) -> None:
    r1, r2 = Point.midpoint(1), Point.midpoint(3)
    q = Pseudotree(c4, {1, 2, 3, 4})
    t1, t2 = split_pseudotree(c4, 3, q, r1, r2)
    assert sorted(t1.edge_ids) == [1, 2, 4]
    assert sorted(t2.edge_ids) == [2, 3, 4]
    assert eccentricity_half(t1, r1) <= 3
    assert eccentricity_half(t2, r2) <= 3
