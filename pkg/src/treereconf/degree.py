"""
Spanning-tree reconfiguration under a minimum bound on the maximum degree.

Two spanning trees whose maximum degree is at least d can be transformed
into each other through trees of maximum degree at least d exactly when an
auxiliary graph on the vertices connects their high-degree vertex sets.  The
auxiliary edge relation between two vertices u and v asks for a tree pair,
equal or one flip apart, giving u degree >= d in the first and v degree
>= d in the second; it reduces to counting common neighborhoods.  All the
positive answers are constructive: witness tree pairs for auxiliary edges,
hub-preserving flip sequences within one high-degree vertex, and a stitched
end-to-end sequence along an auxiliary path.

A relaxed variant with an upper degree bound is also here: when one endpoint
tree has maximum degree <= d-1 and the other <= d, a shortest sequence under
max degree <= d always exists and is produced directly.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, SpanningTree, fundamental_cycle
from .sequence import Constraint, ReconfSequence


def high_degree_set(t: SpanningTree, d: int) -> set[int]:
    """Vertices of degree at least d in the tree."""
    return {v for v, deg in enumerate(t.degrees()) if deg >= d}


def shared_hub_sequence(
    g: Graph, t1: SpanningTree, t2: SpanningTree, u: int, d: int
) -> ReconfSequence:
    """Transform t1 into t2 keeping vertex u of degree >= d throughout.

    First the edges of t2 at u are pulled into the current tree one flip at
    a time (each flip adds a t2-edge at u and removes a cycle edge outside
    t2, so u's degree never drops below d) until d of them are shared; the
    remainder is an unconstrained transformation, which never removes shared
    edges and therefore keeps those d edges at u in every tree.

    Parameters:
        g: host graph.
        t1, t2: spanning trees with u of degree >= d in both.
        u: the shared hub vertex.
        d: the degree bound.

    Returns:
        A validated-shape sequence tagged with the max-degree >= d
        constraint.

    Raises:
        ValueError: if u has degree < d in either tree.
    """
    if t1.degree(u) < d or t2.degree(u) < d:
        raise ValueError(f"vertex {u} must have degree >= {d} in both trees")
    hub_t2 = t2.incident_ids(u)
    trees = [t1]
    steps: list[tuple[int, int]] = []
    cur = t1
    while len(cur.incident_ids(u) & hub_t2) < d:
        add = min(hub_t2 - cur.incident_ids(u))
        cycle = fundamental_cycle(cur, add)
        remove = min(e for e in cycle if e not in t2.edge_ids)
        cur = SpanningTree(cur.host, (cur.edge_ids - {remove}) | {add}, _checked=True)
        trees.append(cur)
        steps.append((remove, add))
    from .sequence import unconstrained_sequence

    tail = unconstrained_sequence(cur, t2)
    constraint = Constraint.max_deg_ge(d)
    head = ReconfSequence(trees, steps, constraint)
    tail = ReconfSequence(tail.trees, tail.steps, constraint)
    return head.concat(tail)


def degree_aux_edge(g: Graph, d: int, u: int, v: int) -> bool:
    """Auxiliary-graph edge test between two distinct vertices.

    True iff both vertices have at least d neighbors and their neighborhoods
    jointly cover at least 2d-1 vertices when uv is an edge of g, or 2d-2
    when it is not.

    Parameters:
        g: host graph.
        d: the degree bound.
        u, v: distinct vertices.
    """
    if u == v:
        raise ValueError("the auxiliary edge relation is over distinct vertices")
    nu = set(g.neighbors(u))
    nv = set(g.neighbors(v))
    if len(nu) < d or len(nv) < d:
        return False
    need = 2 * d - 1 if g.has_edge(u, v) else 2 * d - 2
    return len(nu | nv) >= need


def _greedy_pick(pool: set[int], prefer_outside: set[int], size: int) -> list[int]:
    """size elements of pool, preferring those outside a set; ties by id."""
    outside = sorted(pool - prefer_outside)
    inside = sorted(pool & prefer_outside)
    picked = (outside + inside)[:size]
    if len(picked) < size:
        raise ValueError("not enough vertices to pick from")
    return picked


def _extend_to_spanning_tree(g: Graph, forced: set[int]) -> SpanningTree:
    """Grow a forest of edge ids into a spanning tree, smallest ids first."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ids = set()
    for eid in sorted(forced):
        a, b = g.edge(eid)
        ra, rb = find(a), find(b)
        if ra == rb:
            raise ValueError("forced edge set contains a cycle")
        parent[ra] = rb
        ids.add(eid)
    for eid in g.edge_ids():
        if eid in ids:
            continue
        a, b = g.edge(eid)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            ids.add(eid)
    return SpanningTree(g, ids)


def degree_aux_witness(
    g: Graph, d: int, u: int, v: int
) -> tuple[SpanningTree, SpanningTree] | None:
    """A tree pair certifying an auxiliary edge, or None if there is none.

    Returns (t, t2), equal or one flip apart, with u of degree >= d in t and
    v of degree >= d in t2.  Construction: pick d neighbors of u and d-1
    neighbors of v overlapping in at most one vertex (when uv is an edge, it
    joins the two stars instead and the star sizes drop by one), take the
    star edges as a forced forest, extend to a spanning tree, and if v ended
    at degree d-1 perform one flip that raises it without touching v's other
    edges.

    Parameters:
        g: host graph.
        d: the degree bound.
        u, v: distinct vertices.

    Raises:
        ValueError: if u == v.
    """
    if not degree_aux_edge(g, d, u, v):
        return None
    nu = set(g.neighbors(u))
    nv = set(g.neighbors(v))
    forced: set[int] = set()
    if g.has_edge(u, v):
        s_u = _greedy_pick(nu - {v}, nv, d - 1)
        s_v = _greedy_pick((nv - {u}) - set(s_u), set(), d - 2)
        forced.add(g.edge_id(u, v))
    else:
        s_u = _greedy_pick(nu, nv, d)
        pool = nv - set(s_u)
        if len(pool) >= d - 1:
            s_v = sorted(pool)[: d - 1]
        else:
            overlap_needed = (d - 1) - len(pool)
            if overlap_needed > 1:
                raise AssertionError("witness overlap bound violated")
            s_v = sorted(pool) + sorted(nv & set(s_u))[:overlap_needed]
    for s in s_u:
        forced.add(g.edge_id(u, s))
    for s in s_v:
        forced.add(g.edge_id(v, s))
    t = _extend_to_spanning_tree(g, forced)
    if t.degree(v) >= d:
        return t, t
    add = min(eid for _, eid in g.incident(v) if eid not in t.edge_ids)
    cycle = fundamental_cycle(t, add)
    remove = min(
        eid for eid in cycle if v not in g.edge(eid)
    )
    t2 = SpanningTree(g, (t.edge_ids - {remove}) | {add}, _checked=True)
    return t, t2


class DegreeAuxGraph:
    """The degree auxiliary graph: vertices of g, edges by degree_aux_edge.

    Attributes:
        g: host graph.
        d: the degree bound.
        adj: per-vertex sorted neighbor tuples.
    """

    __slots__ = ("g", "d", "adj")

    def __init__(self, g: Graph, d: int, adj: list[tuple[int, ...]]) -> None:
        self.g = g
        self.d = d
        self.adj = adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All auxiliary edges as ordered (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.g.n) for v in self.adj[u] if u < v]

    def witness(self, u: int, v: int) -> tuple[SpanningTree, SpanningTree]:
        """The role-ordered witness pair for an auxiliary edge."""
        pair = degree_aux_witness(self.g, self.d, u, v)
        if pair is None:
            raise ValueError(f"no auxiliary edge between {u} and {v}")
        return pair

    def __repr__(self) -> str:
        return f"DegreeAuxGraph(n={self.g.n}, d={self.d}, edges={len(self.edges())})"


def build_degree_aux_graph(g: Graph, d: int) -> DegreeAuxGraph:
    """All-pairs auxiliary graph for the given degree bound."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if degree_aux_edge(g, d, u, v):
                adj[u].append(v)
                adj[v].append(u)
    return DegreeAuxGraph(g, d, [tuple(sorted(row)) for row in adj])


def _aux_path(
    aux: DegreeAuxGraph, sources: set[int], targets: set[int]
) -> list[int] | None:
    """Shortest auxiliary-graph path from one vertex set to another.

    Deterministic: sources are seeded in ascending order and neighbors
    scanned ascending, so the first target reached is fixed.  A common
    vertex yields the length-0 path [smallest common vertex].
    """
    common = sources & targets
    if common:
        return [min(common)]
    parent: dict[int, int] = {}
    visited = set(sources)
    queue: deque[int] = deque(sorted(sources))
    while queue:
        x = queue.popleft()
        for y in aux.neighbors(x):
            if y in visited:
                continue
            parent[y] = x
            if y in targets:
                path = [y]
                while path[-1] not in sources:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            visited.add(y)
            queue.append(y)
    return None


def decide_large_max_degree(
    g: Graph,
    d: int,
    t_ini: SpanningTree,
    t_tar: SpanningTree,
    aux: DegreeAuxGraph | None = None,
) -> bool:
    """Decide reconfigurability under max degree >= d.

    True iff the auxiliary graph has a path (length 0 allowed) between the
    high-degree sets of the two trees.

    Parameters:
        g: connected host graph.
        d: the degree bound.
        t_ini, t_tar: endpoint trees, both of max degree >= d.
        aux: optional precomputed build_degree_aux_graph(g, d).

    Raises:
        ValueError: if an endpoint tree has max degree < d.
    """
    v_ini = high_degree_set(t_ini, d)
    v_tar = high_degree_set(t_tar, d)
    if not v_ini or not v_tar:
        raise ValueError(f"both trees must have max degree >= {d}")
    if v_ini & v_tar:
        return True
    if aux is None:
        aux = build_degree_aux_graph(g, d)
    return _aux_path(aux, v_ini, v_tar) is not None


def sequence_large_max_degree(
    g: Graph,
    d: int,
    t_ini: SpanningTree,
    t_tar: SpanningTree,
    aux: DegreeAuxGraph | None = None,
) -> ReconfSequence | None:
    """A full reconfiguration sequence under max degree >= d, or None.

    Walks a shortest auxiliary path v_0..v_k between the high-degree sets;
    within each hub v_i a hub-preserving sequence runs, and between hubs the
    witness pair of the auxiliary edge supplies the connecting flip.

    Parameters:
        g: connected host graph.
        d: the degree bound.
        t_ini, t_tar: endpoint trees, both of max degree >= d.
        aux: optional precomputed build_degree_aux_graph(g, d).

    Raises:
        ValueError: if an endpoint tree has max degree < d.
    """
    v_ini = high_degree_set(t_ini, d)
    v_tar = high_degree_set(t_tar, d)
    if not v_ini or not v_tar:
        raise ValueError(f"both trees must have max degree >= {d}")
    if aux is None:
        aux = build_degree_aux_graph(g, d)
    path = _aux_path(aux, v_ini, v_tar)
    if path is None:
        return None
    constraint = Constraint.max_deg_ge(d)
    if len(path) == 1:
        return shared_hub_sequence(g, t_ini, t_tar, path[0], d)
    seq: ReconfSequence | None = None
    cur = t_ini
    for i in range(len(path) - 1):
        a, b = path[i], path[i + 1]
        w1, w2 = aux.witness(a, b)
        hop = shared_hub_sequence(g, cur, w1, a, d)
        seq = hop if seq is None else seq.concat(hop)
        if w1.edge_ids != w2.edge_ids:
            removed = min(w1.edge_ids - w2.edge_ids)
            added = min(w2.edge_ids - w1.edge_ids)
            seq = seq.concat(ReconfSequence([w1, w2], [(removed, added)], constraint))
        cur = w2
    tail = shared_hub_sequence(g, cur, t_tar, path[-1], d)
    return seq.concat(tail)


def find_swap_edge(t_ini: SpanningTree, t_tar: SpanningTree, d: int) -> int:
    """An edge of t_tar missing from t_ini whose endpoints stay under d.

    Returns the smallest-id edge xy of E(t_tar) \\ E(t_ini) with both x and
    y of degree at most d-1 in t_ini; such an edge always exists when t_tar
    has max degree <= d-1 and t_ini has max degree <= d.

    Parameters:
        t_ini: the current tree, max degree <= d, different from t_tar.
        t_tar: the target tree, max degree <= d-1.
        d: the degree bound.

    Raises:
        ValueError: if a precondition fails.
    """
    if t_ini.edge_ids == t_tar.edge_ids:
        raise ValueError("trees must differ")
    if t_tar.max_degree() > d - 1:
        raise ValueError(f"target tree must have max degree <= {d - 1}")
    if t_ini.max_degree() > d:
        raise ValueError(f"current tree must have max degree <= {d}")
    deg = t_ini.degrees()
    g = t_ini.host
    for eid in sorted(t_tar.edge_ids - t_ini.edge_ids):
        x, y = g.edge(eid)
        if deg[x] <= d - 1 and deg[y] <= d - 1:
            return eid
    raise AssertionError("no swap edge found despite valid preconditions")


def relaxed_small_degree_sequence(
    g: Graph, d: int, t_ini: SpanningTree, t_tar: SpanningTree
) -> ReconfSequence:
    """A shortest sequence under max degree <= d for the relaxed setting.

    Requires one endpoint of max degree <= d-1 (if only t_ini, the roles
    are swapped and the result reversed).  Each step inserts a swap edge —
    an edge of the target both of whose endpoints still have degree <= d-1
    — and deletes the smallest cycle edge outside the target, so the length
    is exactly |E(t_ini) \\ E(t_tar)|, which is optimal even without any
    constraint.

    Parameters:
        g: connected host graph.
        d: the degree bound.
        t_ini, t_tar: endpoint trees, both of max degree <= d, at least one
            of max degree <= d-1.

    Raises:
        ValueError: if the preconditions fail.
    """
    if t_ini.max_degree() > d or t_tar.max_degree() > d:
        raise ValueError(f"both trees must have max degree <= {d}")
    if t_tar.max_degree() <= d - 1:
        flip = False
    elif t_ini.max_degree() <= d - 1:
        t_ini, t_tar = t_tar, t_ini
        flip = True
    else:
        raise ValueError(f"one tree must have max degree <= {d - 1}")
    constraint = Constraint.max_deg_le(d)
    trees = [t_ini]
    steps: list[tuple[int, int]] = []
    cur = t_ini
    while cur.edge_ids != t_tar.edge_ids:
        add = find_swap_edge(cur, t_tar, d)
        cycle = fundamental_cycle(cur, add)
        remove = min(e for e in cycle if e not in t_tar.edge_ids)
        cur = SpanningTree(g, (cur.edge_ids - {remove}) | {add}, _checked=True)
        trees.append(cur)
        steps.append((remove, add))
    seq = ReconfSequence(trees, steps, constraint)
    return seq.reversed() if flip else seq
