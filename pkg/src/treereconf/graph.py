"""
Simple undirected graphs with stable 1-based edge ids, plus the spanning-tree
and pseudotree views used throughout the package.

Vertices are the integers 0..n-1.  Edges are unordered vertex pairs; the id of
an edge is its 1-based position in the input order and never changes, so every
derived structure (trees, sequences, serialized instances) can refer to edges
by id alone.

A spanning tree is represented as a frozen set of edge ids over a host graph;
a pseudotree is the same with either n-1 or n edges (at most one cycle).  A
point is either a vertex or the midpoint of an edge; midpoints are the extra
center candidates used by the diameter algorithms.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Point(NamedTuple):
    """A vertex or an edge midpoint.

    kind is "v" for a vertex (index = vertex id) or "m" for the midpoint of
    an edge (index = edge id).
    """

    kind: str
    index: int

    def is_vertex(self) -> bool:
        return self.kind == "v"

    def is_midpoint(self) -> bool:
        return self.kind == "m"

    def __repr__(self) -> str:
        if self.kind == "v":
            return f"Point.vertex({self.index})"
        return f"Point.midpoint({self.index})"

    @staticmethod
    def vertex(v: int) -> "Point":
        return Point("v", v)

    @staticmethod
    def midpoint(edge_id: int) -> "Point":
        return Point("m", edge_id)


def point_sort_key(p: Point) -> tuple[int, int]:
    """Deterministic point ordering: vertices first, then midpoints, ids ascending."""
    return (0 if p.kind == "v" else 1, p.index)


class Graph:
    """A simple undirected graph with stable 1-based edge ids.

    Immutable after construction.  Edge ids are 1..m in input order; edge id e
    corresponds to ``edges[e - 1]``.

    Attributes:
        n: number of vertices (labeled 0..n-1).
        edges: tuple of (u, v) pairs in input order.
        m: number of edges.
    """

    __slots__ = ("n", "edges", "m", "_adj", "_edge_index", "_connected")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        edge_list: list[tuple[int, int]] = []
        seen: set[frozenset[int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"parallel edge ({u},{v}) not allowed")
            seen.add(key)
            edge_list.append((u, v))
        self.n = n
        self.edges = tuple(edge_list)
        self.m = len(edge_list)

        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        index: dict[frozenset[int], int] = {}
        for eid, (u, v) in enumerate(self.edges, start=1):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            index[frozenset((u, v))] = eid
        self._adj = tuple(tuple(nbrs) for nbrs in adj)
        self._edge_index = index

        # Connectivity, computed once (the graph never changes).
        seen_v = [False] * n
        stack = [0]
        seen_v[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for y, _ in self._adj[x]:
                if not seen_v[y]:
                    seen_v[y] = True
                    count += 1
                    stack.append(y)
        self._connected = count == n

    # -- basic queries ---------------------------------------------------

    def edge(self, edge_id: int) -> tuple[int, int]:
        """Return the endpoint pair of an edge id (1-based)."""
        if not 1 <= edge_id <= self.m:
            raise ValueError(f"edge id {edge_id} out of range 1..{self.m}")
        return self.edges[edge_id - 1]

    def edge_id(self, u: int, v: int) -> int | None:
        """Return the id of edge uv, or None if uv is not an edge."""
        return self._edge_index.get(frozenset((u, v)))

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edge_index

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """All (neighbor, edge id) pairs at vertex v, in input-edge order."""
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self._adj[v]]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def is_connected(self) -> bool:
        return self._connected

    def edge_ids(self) -> range:
        """All edge ids, ascending."""
        return range(1, self.m + 1)

    def all_points(self) -> list[Point]:
        """All vertices and all edge midpoints, in deterministic order."""
        pts = [Point.vertex(v) for v in range(self.n)]
        pts.extend(Point.midpoint(e) for e in self.edge_ids())
        return pts

    def point_on(self, p: Point, edge_ids: frozenset[int] | None = None) -> bool:
        """Whether a point lies on this graph (or on the given edge subset)."""
        if p.kind == "v":
            return 0 <= p.index < self.n
        if not 1 <= p.index <= self.m:
            return False
        return edge_ids is None or p.index in edge_ids

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _forest_check(g: Graph, edge_ids: Iterable[int]) -> tuple[int, bool]:
    """Union-find over the given edges; returns (edge count, acyclic)."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = 0
    acyclic = True
    for eid in edge_ids:
        u, v = g.edge(eid)
        ru, rv = find(u), find(v)
        if ru == rv:
            acyclic = False
        else:
            parent[ru] = rv
        count += 1
    return count, acyclic


def validate_spanning_tree(g: Graph, edge_ids: Iterable[int]) -> bool:
    """True iff the edge-id set is a spanning tree of g."""
    ids = set(edge_ids)
    if len(ids) != g.n - 1:
        return False
    try:
        count, acyclic = _forest_check(g, ids)
    except ValueError:
        return False
    # n-1 edges and no cycle means a spanning tree.
    return count == g.n - 1 and acyclic


class SpanningTree:
    """A spanning tree of a host graph, stored as a frozen set of edge ids."""

    __slots__ = ("host", "edge_ids")

    def __init__(self, host: Graph, edge_ids: Iterable[int], _checked: bool = False) -> None:
        ids = frozenset(edge_ids)
        if not _checked and not validate_spanning_tree(host, ids):
            raise ValueError(f"edge ids {sorted(ids)} are not a spanning tree")
        self.host = host
        self.edge_ids = ids

    def degrees(self) -> list[int]:
        deg = [0] * self.host.n
        for eid in self.edge_ids:
            u, v = self.host.edge(eid)
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return sum(1 for _, eid in self.host.incident(v) if eid in self.edge_ids)

    def max_degree(self) -> int:
        return max(self.degrees())

    def incident_ids(self, v: int) -> set[int]:
        """Tree-edge ids incident to vertex v."""
        return {eid for _, eid in self.host.incident(v) if eid in self.edge_ids}

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex (neighbor, edge id) lists restricted to tree edges."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.host.n)]
        for eid in sorted(self.edge_ids):
            u, v = self.host.edge(eid)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def canonical(self) -> tuple[int, ...]:
        """Sorted edge-id tuple, the canonical hashable form."""
        return tuple(sorted(self.edge_ids))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.host is other.host and self.edge_ids == other.edge_ids

    def __hash__(self) -> int:
        return hash((id(self.host), self.edge_ids))

    def __repr__(self) -> str:
        return f"SpanningTree({sorted(self.edge_ids)})"


class Pseudotree:
    """A connected spanning subgraph with at most one cycle (n-1 or n edges)."""

    __slots__ = ("host", "edge_ids")

    def __init__(self, host: Graph, edge_ids: Iterable[int]) -> None:
        ids = frozenset(edge_ids)
        if len(ids) not in (host.n - 1, host.n):
            raise ValueError(f"pseudotree needs n-1 or n edges, got {len(ids)}")
        count, _ = _forest_check(host, ids)
        # Connected iff the edge count allows at most one independent cycle:
        # n-1 edges must form a tree, n edges must leave one cycle only.
        if not _is_connected_subgraph(host, ids):
            raise ValueError("pseudotree edge set is not connected/spanning")
        self.host = host
        self.edge_ids = ids

    def is_tree(self) -> bool:
        return len(self.edge_ids) == self.host.n - 1

    def adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.host.n)]
        for eid in sorted(self.edge_ids):
            u, v = self.host.edge(eid)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pseudotree):
            return NotImplemented
        return self.host is other.host and self.edge_ids == other.edge_ids

    def __hash__(self) -> int:
        return hash((id(self.host), self.edge_ids))

    def __repr__(self) -> str:
        return f"Pseudotree({sorted(self.edge_ids)})"


def _is_connected_subgraph(g: Graph, edge_ids: frozenset[int]) -> bool:
    """Whether the subgraph with the given edges spans and connects all of V."""
    if g.n == 1:
        return True
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for eid in edge_ids:
        u, v = g.edge(eid)
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == g.n


def is_pseudotree(g: Graph, edge_ids: Iterable[int]) -> bool:
    """True iff the edge-id set is a connected spanning subgraph with <= 1 cycle."""
    ids = frozenset(edge_ids)
    if len(ids) not in (g.n - 1, g.n):
        return False
    return _is_connected_subgraph(g, ids)


def unique_cycle(q: Pseudotree) -> tuple[list[int], list[int]] | None:
    """The unique cycle of a pseudotree, or None for a tree.

    Returns (vertex list, edge-id list) with vertices in cycle order starting
    at the smallest cycle vertex, walking first toward its smaller cycle
    neighbor; edge i connects vertex i to vertex i+1 (cyclically).
    """
    if q.is_tree():
        return None
    # Strip degree-1 vertices repeatedly; what survives is the cycle.
    adj = {v: dict() for v in range(q.host.n)}
    for eid in q.edge_ids:
        u, v = q.host.edge(eid)
        adj[u][v] = eid
        adj[v][u] = eid
    leaves = [v for v in adj if len(adj[v]) == 1]
    while leaves:
        v = leaves.pop()
        (w, _), = adj[v].items()
        del adj[v]
        del adj[w][v]
        if len(adj[w]) == 1:
            leaves.append(w)
    cycle_vertices = sorted(v for v in adj if adj[v])
    start = cycle_vertices[0]
    nxt = min(adj[start])
    verts = [start]
    eids = [adj[start][nxt]]
    prev, cur = start, nxt
    while cur != start:
        verts.append(cur)
        a, b = sorted(adj[cur])
        nxt = b if a == prev else a
        eids.append(adj[cur][nxt])
        prev, cur = cur, nxt
    return verts, eids


def are_flip_adjacent(t1: SpanningTree, t2: SpanningTree) -> bool:
    """True iff the trees are equal or differ by a single edge flip."""
    if t1.host is not t2.host:
        raise ValueError("trees live on different host graphs")
    return len(t1.edge_ids - t2.edge_ids) <= 1


def apply_flip(t: SpanningTree, remove: int, add: int) -> SpanningTree:
    """Apply one edge flip and return the new tree; error if invalid."""
    if remove not in t.edge_ids:
        raise ValueError(f"edge {remove} not in the tree")
    if add in t.edge_ids:
        raise ValueError(f"edge {add} already in the tree")
    new_ids = (t.edge_ids - {remove}) | {add}
    if not validate_spanning_tree(t.host, new_ids):
        raise ValueError(f"flip -{remove}/+{add} does not yield a spanning tree")
    return SpanningTree(t.host, new_ids, _checked=True)


def tree_path(t: SpanningTree, a: int, b: int) -> tuple[list[int], list[int]]:
    """The unique a-b path in a spanning tree as (vertex list, edge-id list)."""
    if a == b:
        return [a], []
    adj = t.adjacency()
    parent: dict[int, tuple[int, int]] = {a: (-1, 0)}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y, eid in adj[x]:
            if y not in parent:
                parent[y] = (x, eid)
                stack.append(y)
    verts = [b]
    eids: list[int] = []
    cur = b
    while cur != a:
        prev, eid = parent[cur]
        eids.append(eid)
        verts.append(prev)
        cur = prev
    verts.reverse()
    eids.reverse()
    return verts, eids


def fundamental_cycle(t: SpanningTree, add: int) -> list[int]:
    """Edge ids of the unique cycle of t + add (the added edge included)."""
    if add in t.edge_ids:
        raise ValueError(f"edge {add} already in the tree")
    u, v = t.host.edge(add)
    _, path_ids = tree_path(t, u, v)
    return path_ids + [add]


def tree_components_without(t: SpanningTree, remove: int) -> frozenset[int]:
    """Vertex set of one side of the cut created by deleting a tree edge.

    Returns the component containing the smaller endpoint of the removed edge.
    """
    if remove not in t.edge_ids:
        raise ValueError(f"edge {remove} not in the tree")
    u, v = t.host.edge(remove)
    root = min(u, v)
    adj = t.adjacency()
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y, eid in adj[x]:
            if eid != remove and y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


# -- file formats --------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the plain graph format: line 1 ``n m``, then m lines ``u v``.

    Vertices are 0-based; the edge on the i-th edge line gets id i (1-based).
    """
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("graph text too short")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"expected {m} edge lines, got {(len(tokens) - 2) // 2}")
    edges = [
        (int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i]))
        for i in range(m)
    ]
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str, require_connected: bool = True) -> Graph:
    """Load a graph file; decision operations require connected inputs."""
    with open(path, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    if require_connected and not g.is_connected():
        raise ValueError(f"graph in {path} is not connected")
    return g


def parse_tree(g: Graph, text: str) -> SpanningTree:
    """Parse a tree file: one line of space-separated edge ids."""
    ids = [int(tok) for tok in text.split()]
    return SpanningTree(g, ids)


def format_tree(t: SpanningTree) -> str:
    return " ".join(str(eid) for eid in sorted(t.edge_ids)) + "\n"


def load_tree(g: Graph, path: str) -> SpanningTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(g, fh.read())


def save_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def connected_graphs_are_required(g: Graph) -> None:
    """Raise unless g is connected (shared precondition of decision ops)."""
    if not g.is_connected():
        raise ValueError("operation requires a connected graph")


def iter_edge_subsets(ids: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """All size-k subsets of the given ids (ascending order)."""
    from itertools import combinations

    return combinations(ids, size)
