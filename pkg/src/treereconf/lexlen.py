"""
Lexicographically perturbed edge lengths and shortest paths.

Every edge nominally has length 1, perturbed by an infinitesimal unique to
its id so that distinct paths never tie: lengths are compared first by total,
then by the perturbation coefficients in ascending edge order.  Lengths are
stored doubled so half-edges (to midpoints) stay integral: a full edge
contributes total 2 and coefficient 2 at its own position, a half edge 1 and
1.

Four synthetic edge keys (-4..-1) are reserved ahead of the real ids for the
temporary edges that the center-search constructions attach to an added
apex vertex; their lengths are arbitrary values assigned by the caller.
A shortest-path tree under these lengths is unique up to ties among the
synthetic edges, and the solver asserts that no tie is ever hit from an
original source.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .graph import Graph, Point

#: Synthetic edge keys usable in an augmented graph, in tie-break order.
SYNTHETIC_KEYS = (-4, -3, -2, -1)


def _pos(key: int) -> int:
    """Coefficient position of an edge key in the dense vector (0 = total)."""
    return key + 5 if key < 0 else 4 + key


class LexLen:
    """A perturbed length: doubled total plus doubled perturbation coefficients.

    Internally a dense integer tuple — entry 0 is the doubled total, entries
    1..4 the coefficients of the synthetic keys -4..-1, entries 5.. those of
    the real edge ids 1..m.  Plain tuple comparison of the vectors is exactly
    the lexicographic length comparison.
    """

    __slots__ = ("vec",)

    def __init__(self, vec: Sequence[int]) -> None:
        self.vec = tuple(vec)

    @staticmethod
    def zero(m: int) -> "LexLen":
        """The zero length over a graph with m real edges."""
        return LexLen((0,) * (5 + m))

    @staticmethod
    def edge(m: int, key: int, half: bool = False) -> "LexLen":
        """The (half) length of one edge over a graph with m real edges."""
        unit = 1 if half else 2
        vec = [0] * (5 + m)
        vec[0] = unit
        vec[_pos(key)] = unit
        return LexLen(vec)

    @property
    def total2(self) -> int:
        """Doubled unperturbed total length."""
        return self.vec[0]

    @property
    def coeff2(self) -> dict[int, int]:
        """Sparse map edge key -> doubled perturbation coefficient."""
        out: dict[int, int] = {}
        for i, c in enumerate(self.vec):
            if i == 0 or c == 0:
                continue
            key = i - 5 if i <= 4 else i - 4
            out[key] = c
        return out

    def __add__(self, other: "LexLen") -> "LexLen":
        return LexLen(tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __lt__(self, other: "LexLen") -> bool:
        return self.vec < other.vec

    def __le__(self, other: "LexLen") -> bool:
        return self.vec <= other.vec

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LexLen):
            return NotImplemented
        return self.vec == other.vec

    def __hash__(self) -> int:
        return hash(self.vec)

    def __repr__(self) -> str:
        return f"LexLen(total2={self.total2}, coeff2={self.coeff2})"


class AugmentedGraph:
    """A graph plus one apex vertex and up to four synthetic keyed edges.

    The apex is vertex ``base.n``.  Each synthetic edge carries its own key
    from SYNTHETIC_KEYS and an explicit LexLen weight; parallel synthetic
    edges to the same endpoint are allowed (they stay distinguishable by
    key).  Real edges keep their standard perturbed unit lengths.
    """

    __slots__ = ("base", "apex", "extra")

    def __init__(
        self,
        base: Graph,
        extra: Iterable[tuple[int, int, LexLen]],
    ) -> None:
        self.base = base
        self.apex = base.n
        items: list[tuple[int, int, LexLen]] = []
        used: set[int] = set()
        for key, v, weight in extra:
            if key not in SYNTHETIC_KEYS:
                raise ValueError(f"synthetic key {key} out of range")
            if key in used:
                raise ValueError(f"synthetic key {key} used twice")
            if not 0 <= v < base.n:
                raise ValueError(f"synthetic edge endpoint {v} out of range")
            used.add(key)
            items.append((key, v, weight))
        items.sort(key=lambda it: it[0])
        self.extra = tuple(items)

    def __repr__(self) -> str:
        ends = [(k, v) for k, v, _ in self.extra]
        return f"AugmentedGraph(base={self.base!r}, extra={ends})"


class LexTreeResult:
    """Outcome of a lexicographic shortest-path run.

    Attributes:
        dist: map vertex -> LexLen of settled vertices.
        parent: map vertex -> (parent vertex, arrival edge key); seeds map to
            (None, seed edge key or None).
        tree_keys: frozenset of edge keys forming the shortest-path tree
            (for a midpoint source this includes the source edge itself).
        ties: number of equal-length alternate arrivals observed; zero
            whenever the perturbation guarantees uniqueness.
    """

    __slots__ = ("dist", "parent", "tree_keys", "ties")

    def __init__(
        self,
        dist: dict[int, LexLen],
        parent: dict[int, tuple[int | None, int | None]],
        tree_keys: frozenset[int],
        ties: int,
    ) -> None:
        self.dist = dist
        self.parent = parent
        self.tree_keys = tree_keys
        self.ties = ties

    def __repr__(self) -> str:
        return (
            f"LexTreeResult({len(self.dist)} vertices,"
            f" {len(self.tree_keys)} tree edges, ties={self.ties})"
        )


def _lex_dijkstra(
    n_total: int,
    adj: Sequence[Sequence[tuple[int, int, LexLen]]],
    seeds: Sequence[tuple[int, LexLen, int | None]],
) -> LexTreeResult:
    """Dijkstra over explicit (neighbor, key, weight) adjacency.

    Seeds are (vertex, starting length, arrival key) triples.  Equal-length
    arrivals are broken toward the smaller arrival key and counted as ties.
    """
    dist: dict[int, LexLen] = {}
    parent: dict[int, tuple[int | None, int | None]] = {}
    ties = 0
    heap: list[tuple[tuple[int, ...], int, int, int | None, int | None]] = []
    for v, d0, key in seeds:
        heapq.heappush(heap, (d0.vec, key if key is not None else -10**9, v, None, key))
    while heap:
        vec, _, v, pv, key = heapq.heappop(heap)
        if v in dist:
            if dist[v].vec == vec:
                ties += 1
            continue
        d = LexLen(vec)
        dist[v] = d
        parent[v] = (pv, key)
        for w, wkey, weight in adj[v]:
            if w in dist:
                continue
            heapq.heappush(heap, ((d + weight).vec, wkey, w, v, wkey))
    tree_keys = set()
    for v, (pv, key) in parent.items():
        if key is not None:
            tree_keys.add(key)
    return LexTreeResult(dist, parent, frozenset(tree_keys), ties)


def _plain_adjacency(
    g: Graph, edge_ids: Iterable[int] | None = None
) -> list[list[tuple[int, int, LexLen]]]:
    """(neighbor, key, weight) adjacency of g, optionally edge-restricted."""
    m = g.m
    adj: list[list[tuple[int, int, LexLen]]] = [[] for _ in range(g.n)]
    ids = g.edge_ids() if edge_ids is None else sorted(set(edge_ids))
    for eid in ids:
        u, v = g.edge(eid)
        w = LexLen.edge(m, eid)
        adj[u].append((v, eid, w))
        adj[v].append((u, eid, w))
    return adj


def _seeds_for_point(g: Graph, source: Point) -> list[tuple[int, LexLen, int | None]]:
    """Dijkstra seeds for a vertex or midpoint source."""
    m = g.m
    if source.kind == "v":
        return [(source.index, LexLen.zero(m), None)]
    eid = source.index
    u, v = g.edge(eid)
    half = LexLen.edge(m, eid, half=True)
    return [(u, half, eid), (v, half, eid)]


def lex_shortest_tree(
    g: Graph | AugmentedGraph,
    source: Point | int,
    edge_ids: Iterable[int] | None = None,
) -> LexTreeResult:
    """Shortest-path tree under perturbed lengths from a point or the apex.

    Parameters:
        g: a plain graph, or an augmented graph whose apex may be the source.
        source: a Point of the base graph, or the integer apex vertex id of
            an augmented graph.
        edge_ids: optional restriction to a subgraph of a plain g (not
            supported for augmented graphs).

    Returns:
        A LexTreeResult over the reachable vertices; for a midpoint source
        the source edge belongs to the tree.  The tie counter is zero for
        any source on a plain graph (the perturbation forbids ties there).
    """
    if isinstance(g, AugmentedGraph):
        if edge_ids is not None:
            raise ValueError("edge restriction applies to plain graphs only")
        base = g.base
        adj = _plain_adjacency(base)
        adj.append([])  # apex row
        for key, v, weight in g.extra:
            adj[g.apex].append((v, key, weight))
            adj[v].append((g.apex, key, weight))
        for row in adj:
            row.sort(key=lambda it: it[1])
        if isinstance(source, int):
            if source != g.apex:
                raise ValueError("integer source must be the apex vertex")
            seeds: list[tuple[int, LexLen, int | None]] = [
                (g.apex, LexLen.zero(base.m), None)
            ]
        else:
            seeds = _seeds_for_point(base, source)
        return _lex_dijkstra(base.n + 1, adj, seeds)
    if isinstance(source, int):
        raise ValueError("integer source only makes sense on an augmented graph")
    ids = None if edge_ids is None else set(edge_ids)
    if source.kind == "m" and ids is not None and source.index not in ids:
        raise ValueError(f"midpoint source edge {source.index} not in the subgraph")
    adj = _plain_adjacency(g, ids)
    for row in adj:
        row.sort(key=lambda it: it[1])
    return _lex_dijkstra(g.n, adj, _seeds_for_point(g, source))


def lex_vertex_distances(
    g: Graph, source: Point, edge_ids: Iterable[int] | None = None
) -> dict[int, LexLen]:
    """Perturbed distances from a point to every reachable vertex.

    Parameters:
        g: host graph.
        source: a vertex or midpoint; a midpoint source must lie on the
            walked subgraph.
        edge_ids: optional edge restriction (walk only these edges).

    Returns:
        Map vertex -> LexLen for reachable vertices.
    """
    ids = None if edge_ids is None else set(edge_ids)
    if source.kind == "m" and ids is not None and source.index not in ids:
        raise ValueError(f"midpoint source edge {source.index} not in the subgraph")
    adj = _plain_adjacency(g, ids)
    for row in adj:
        row.sort(key=lambda it: it[1])
    res = _lex_dijkstra(g.n, adj, _seeds_for_point(g, source))
    return res.dist


def lex_point_distance(
    g: Graph,
    source: Point,
    target: Point,
    edge_ids: Iterable[int] | None = None,
    dist: dict[int, LexLen] | None = None,
) -> LexLen:
    """Perturbed distance between two points, optionally along a subgraph.

    A midpoint target f is reached through whichever of its endpoints is
    lexicographically closer, plus half of f's own length; the perturbation
    makes that endpoint unique.

    Parameters:
        g: host graph.
        source, target: the two points.
        edge_ids: optional edge restriction; both points must lie on it.
        dist: optional precomputed ``lex_vertex_distances`` map for the same
            source and restriction, to avoid recomputation.

    Returns:
        The LexLen distance.

    Raises:
        ValueError: if the target is unreachable from the source.
    """
    if dist is None:
        dist = lex_vertex_distances(g, source, edge_ids)
    if target.kind == "v":
        if target.index not in dist:
            raise ValueError(f"target vertex {target.index} unreachable")
        return dist[target.index]
    eid = target.index
    if edge_ids is not None and eid not in set(edge_ids):
        raise ValueError(f"target midpoint edge {eid} not in the subgraph")
    if source.kind == "m" and source.index == eid:
        return LexLen.zero(g.m)
    u, v = g.edge(eid)
    best: LexLen | None = None
    for x in (u, v):
        if x in dist:
            cand = dist[x]
            if best is None or cand < best:
                best = cand
    if best is None:
        raise ValueError(f"target midpoint of edge {eid} unreachable")
    return best + LexLen.edge(g.m, eid, half=True)
