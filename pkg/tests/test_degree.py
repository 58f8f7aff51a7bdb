"""Degree-constrained reconfiguration: hubs, auxiliary graph, relaxed regime."""

from __future__ import annotations

import itertools

import pytest

from treereconf import (
    Constraint,
    Graph,
    SpanningTree,
    build_degree_aux_graph,
    decide_large_max_degree,
    degree_aux_edge,
    degree_aux_witness,
    enumerate_spanning_trees,
    find_swap_edge,
    flip_component_map,
    high_degree_set,
    oracle_degree_pair,
    relaxed_small_degree_sequence,
    sequence_large_max_degree,
    shared_hub_sequence,
    validate_sequence,
)

# Two adjacent vertices that can each host a degree-3 hub, linked through
# shared leaves so both hubs fit in one spanning tree.
TWO_HUBS = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (3, 5)])


def test_high_degree_set(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    path = SpanningTree(k4, {1, 4, 6})
    assert high_degree_set(star, 3) == {0}
    assert high_degree_set(star, 2) == {0}
    assert high_degree_set(path, 3) == set()
    assert high_degree_set(path, 2) == {1, 2}


def test_aux_graph_frozen_shapes(k4: Graph) -> None:
    assert build_degree_aux_graph(k4, 3).edges() == []
    aux2 = build_degree_aux_graph(k4, 2)
    assert aux2.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert build_degree_aux_graph(TWO_HUBS, 3).edges() == [(0, 1)]


def test_aux_witness_pair_is_valid(k4: Graph) -> None:
    """Each auxiliary edge carries a flip-close tree pair with the two hubs."""
    for g, d in ((k4, 2), (TWO_HUBS, 3)):
        aux = build_degree_aux_graph(g, d)
        for u, v in aux.edges():
            w1, w2 = aux.witness(u, v)
            assert w1.degree(u) >= d
            assert w2.degree(v) >= d
            assert len(w1.edge_ids - w2.edge_ids) <= 1


def test_degree_aux_edge_matches_oracle_spotwise(k4: Graph) -> None:
    for g in (k4, TWO_HUBS):
        for d in (2, 3):
            for u, v in itertools.combinations(range(g.n), 2):
                assert degree_aux_edge(g, d, u, v) == oracle_degree_pair(g, d, u, v)


def test_degree_aux_witness_two_hubs() -> None:
    w = degree_aux_witness(TWO_HUBS, 3, 0, 1)
    assert w is not None
    w1, w2 = w
    assert w1.edge_ids == w2.edge_ids == frozenset({1, 2, 3, 4, 5})
    assert degree_aux_witness(TWO_HUBS, 3, 0, 2) is None


def test_decide_frozen_cases(k4: Graph) -> None:
    star0 = SpanningTree(k4, {1, 2, 3})
    star1 = SpanningTree(k4, {1, 4, 5})
    assert decide_large_max_degree(k4, 3, star0, star1) is False
    assert decide_large_max_degree(k4, 3, star0, star0) is True
    assert decide_large_max_degree(k4, 2, star0, star1) is True


def test_decide_requires_high_degree_endpoints(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    path = SpanningTree(k4, {1, 4, 6})
    with pytest.raises(ValueError):
        decide_large_max_degree(k4, 3, star, path)


def test_shared_hub_sequence_keeps_the_hub(k4: Graph) -> None:
    t1 = SpanningTree(k4, {1, 2, 5})
    t2 = SpanningTree(k4, {1, 2, 6})
    seq = shared_hub_sequence(k4, t1, t2, 0, 2)
    assert seq.steps == [(5, 6)]
    ok, reason = validate_sequence(seq)
    assert ok, reason
    for t in seq.trees:
        assert t.degree(0) >= 2


def test_sequence_matches_decide_and_validates(k4: Graph) -> None:
    """On K4 at d=2 every qualifying ordered pair gets a valid sequence."""
    trees = [SpanningTree(k4, ids) for ids in enumerate_spanning_trees(k4)]
    good = [t for t in trees if t.max_degree() >= 2]
    aux = build_degree_aux_graph(k4, 2)
    comp = flip_component_map(k4, Constraint.max_deg_ge(2))
    for ta, tb in itertools.product(good, repeat=2):
        want = comp[ta.canonical()] == comp[tb.canonical()]
        assert decide_large_max_degree(k4, 2, ta, tb, aux=aux) == want
        seq = sequence_large_max_degree(k4, 2, ta, tb, aux=aux)
        if want:
            assert seq is not None
            ok, reason = validate_sequence(seq)
            assert ok, reason
            assert seq.first().edge_ids == ta.edge_ids
            assert seq.last().edge_ids == tb.edge_ids
            assert seq.constraint == Constraint.max_deg_ge(2)
        else:
            assert seq is None


def test_sequence_none_when_disconnected(k4: Graph) -> None:
    star0 = SpanningTree(k4, {1, 2, 3})
    star1 = SpanningTree(k4, {1, 4, 5})
    assert sequence_large_max_degree(k4, 3, star0, star1) is None


def test_find_swap_edge(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    path = SpanningTree(k4, {1, 4, 6})
    eid = find_swap_edge(star, path, 3)
    assert eid in path.edge_ids - star.edge_ids
    x, y = k4.edge(eid)
    assert star.degree(x) <= 2 and star.degree(y) <= 2
    with pytest.raises(ValueError):
        find_swap_edge(star, star, 3)
    with pytest.raises(ValueError):
        find_swap_edge(path, star, 3)  # target is not below the bound


def test_relaxed_sequence_basic(k4: Graph) -> None:
    star = SpanningTree(k4, {1, 2, 3})
    path = SpanningTree(k4, {1, 4, 6})
    seq = relaxed_small_degree_sequence(k4, 3, star, path)
    assert len(seq) == len(star.edge_ids - path.edge_ids)
    assert seq.first().edge_ids == star.edge_ids
    assert seq.last().edge_ids == path.edge_ids
    assert seq.constraint == Constraint.max_deg_le(3)
    ok, reason = validate_sequence(seq)
    assert ok, reason


def test_relaxed_sequence_role_swap(k4: Graph) -> None:
    """Only the initial tree is below d-1: roles swap, result is reversed."""
    star = SpanningTree(k4, {1, 2, 3})
    path = SpanningTree(k4, {1, 4, 6})
    seq = relaxed_small_degree_sequence(k4, 3, path, star)
    assert seq.first().edge_ids == path.edge_ids
    assert seq.last().edge_ids == star.edge_ids
    ok, reason = validate_sequence(seq)
    assert ok, reason


def test_relaxed_sequence_preconditions(k4: Graph) -> None:
    star0 = SpanningTree(k4, {1, 2, 3})
    star1 = SpanningTree(k4, {1, 4, 5})
    with pytest.raises(ValueError):
        relaxed_small_degree_sequence(k4, 3, star0, star1)
    with pytest.raises(ValueError):
        relaxed_small_degree_sequence(k4, 2, star0, star1)
