"""Shared fixtures: named small graphs and the exhaustive connected family."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from treereconf import Graph, SpanningTree

# Connected graphs with up to six vertices, one per isomorphism class.
_EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}

_FAMILY_CACHE: dict[int, tuple[Graph, ...]] = {}


def from_networkx(nxg: "nx.Graph") -> Graph:
    """Relabel a networkx graph to 0..n-1 and fix a deterministic edge order."""
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = sorted(
        (min(index[a], index[b]), max(index[a], index[b])) for a, b in nxg.edges()
    )
    return Graph(len(nodes), edges)


def connected_family(max_n: int) -> tuple[Graph, ...]:
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    if max_n not in _FAMILY_CACHE:
        out = []
        for nxg in nx.graph_atlas_g():
            n = nxg.number_of_nodes()
            if n < 1 or n > max_n:
                continue
            if nx.is_connected(nxg):
                out.append(from_networkx(nxg))
        _FAMILY_CACHE[max_n] = tuple(out)
    return _FAMILY_CACHE[max_n]


def random_spanning_tree(g: Graph, rng: random.Random) -> SpanningTree:
    """A uniform-ish random spanning tree via a shuffled greedy forest."""
    order = list(g.edge_ids())
    rng.shuffle(order)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: set[int] = set()
    for eid in order:
        u, v = g.edge(eid)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add(eid)
            if len(chosen) == g.n - 1:
                break
    return SpanningTree(g, chosen)


def test_family_counts() -> None:
    """The exhaustive family has the known connected-graph counts per size."""
    family = connected_family(6)
    by_n: dict[int, int] = {}
    for g in family:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == _EXPECTED_COUNTS


@pytest.fixture(scope="session")
def family6() -> tuple[Graph, ...]:
    return connected_family(6)


@pytest.fixture(scope="session")
def family5() -> tuple[Graph, ...]:
    return tuple(g for g in connected_family(5))


@pytest.fixture
def triangle() -> Graph:
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def p3() -> Graph:
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def k4() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def star3() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])
