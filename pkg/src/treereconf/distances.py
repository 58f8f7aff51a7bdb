"""
Half-integral distances on trees and pseudotrees.

Distances are measured between points — vertices and edge midpoints — and are
stored doubled so they stay integral: a full edge contributes 2, a half edge
contributes 1.  Two vertices are at even doubled distance, a vertex and a
midpoint at odd doubled distance.  Eccentricities and diameters range over
vertices only; midpoints matter solely as center candidates, where a midpoint
center certifies an odd diameter bound.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, Point, Pseudotree, SpanningTree

#: Sentinel for "unreachable" in half-distance maps.
INFINITE = float("inf")


def _host_and_edges(q: SpanningTree | Pseudotree) -> tuple[Graph, frozenset[int]]:
    return q.host, q.edge_ids


def half_distances(
    g: Graph, edge_ids: Iterable[int], source: Point
) -> dict[Point, int]:
    """Doubled distances from a point along a subgraph given by edge ids.

    Runs a breadth-first search on the point graph in which every edge uv is
    split at its midpoint into two unit half-edges.  Only points reachable
    inside the subgraph appear in the result.  A midpoint source reaches both
    of its endpoints at distance 1.

    Parameters:
        g: host graph.
        edge_ids: the edges of the subgraph to walk.
        source: a vertex or the midpoint of one of the given edges.

    Returns:
        Map from reachable Point to doubled distance (source included at 0).
    """
    ids = sorted(set(edge_ids))
    id_set = set(ids)
    if source.kind == "m" and source.index not in id_set:
        raise ValueError(f"midpoint source edge {source.index} not in the subgraph")
    if source.kind == "v" and not 0 <= source.index < g.n:
        raise ValueError(f"vertex source {source.index} out of range")

    # Point adjacency: vertex <-> midpoint of each incident subgraph edge.
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for eid in ids:
        u, v = g.edge(eid)
        incident[u].append(eid)
        incident[v].append(eid)

    dist: dict[Point, int] = {source: 0}
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt: list[Point] = []
        for p in frontier:
            if p.kind == "v":
                nbrs = [Point.midpoint(eid) for eid in incident[p.index]]
            else:
                u, v = g.edge(p.index)
                nbrs = [Point.vertex(u), Point.vertex(v)]
            for q in nbrs:
                if q not in dist:
                    dist[q] = d
                    nxt.append(q)
        frontier = nxt
    return dist


def point_distances_half(
    q: SpanningTree | Pseudotree, source: Point
) -> dict[Point, int]:
    """Doubled distances from a point to every point of a tree or pseudotree.

    The structure is spanning and connected, so every vertex and every
    midpoint of its edges is reachable and present in the result.

    Parameters:
        q: a spanning tree or pseudotree.
        source: a vertex, or the midpoint of an edge of q.

    Returns:
        Map from every Point of q to its doubled distance from the source.
    """
    host, ids = _host_and_edges(q)
    return half_distances(host, ids, source)


def eccentricity_half(q: SpanningTree | Pseudotree, p: Point) -> int:
    """Doubled eccentricity of a point: its largest distance to any vertex."""
    host, _ = _host_and_edges(q)
    dist = point_distances_half(q, p)
    return max(dist[Point.vertex(v)] for v in range(host.n))


def diameter_half(q: SpanningTree | Pseudotree) -> int:
    """Doubled diameter: the largest vertex-to-vertex distance."""
    host, _ = _host_and_edges(q)
    best = 0
    for v in range(host.n):
        ecc = eccentricity_half(q, Point.vertex(v))
        if ecc > best:
            best = ecc
    return best


def center_points(q: SpanningTree | Pseudotree, d: int) -> set[Point]:
    """All points whose doubled eccentricity is at most d.

    With d the diameter bound in edge units, a tree has diameter <= d exactly
    when this set is nonempty: a vertex center certifies an even radius, a
    midpoint center an odd one.

    Parameters:
        q: a spanning tree or pseudotree.
        d: bound on the doubled eccentricity (the diameter bound itself).

    Returns:
        The set of center points (possibly empty).
    """
    host, ids = _host_and_edges(q)
    result: set[Point] = set()
    for v in range(host.n):
        p = Point.vertex(v)
        if eccentricity_half(q, p) <= d:
            result.add(p)
    for eid in sorted(ids):
        p = Point.midpoint(eid)
        if eccentricity_half(q, p) <= d:
            result.add(p)
    return result


def eccentricity_half_subgraph(g: Graph, edge_ids: Iterable[int], p: Point) -> int:
    """Doubled eccentricity of a point within an arbitrary subgraph.

    Ranges over the vertices covered by the subgraph's edges (plus isolated
    reachability from the source); vertices not reachable inside the subgraph
    are ignored.  Used for quick feasibility screens on cycles.
    """
    dist = half_distances(g, edge_ids, p)
    verts = [d for q, d in dist.items() if q.kind == "v"]
    return max(verts) if verts else 0
