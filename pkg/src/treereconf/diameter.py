"""Spanning-tree reconfiguration under an upper bound on the tree diameter.

A spanning tree with diameter at most d always possesses a center: a vertex
or an edge midpoint whose doubled eccentricity is at most d.  Whether one
bounded-diameter tree can be walked into another by single edge flips is
decided through an auxiliary graph on the points of the host graph.  Two
points are joined there whenever some witness subgraph -- a spanning tree,
or a spanning connected subgraph with exactly one cycle -- keeps both
points central, carries distance labels that no host edge can shortcut,
and (if it has a cycle) runs its cycle through both points.  Such a
witness certifies that a tree centered at the first point can be
reshaped, flip by flip and without ever exceeding diameter d, into a tree
centered at the second.  Conversely, every flip walk between
bounded-diameter trees traces a path in the auxiliary graph, so
reachability there is equivalent to reconfigurability.

Witness search is polynomial: tree witnesses are found by guessing one
oriented edge near the pair of points and growing a shortest-path tree in
an augmented host, cyclic witnesses by additionally guessing the cycle
through the two points from shortest-path segments.  All distances are
kept in doubled units so midpoints stay integral, and every shortest-path
computation breaks ties by the perturbed edge lengths, which makes each
routine fully deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

from .distances import (
    center_points,
    diameter_half,
    eccentricity_half,
    eccentricity_half_subgraph,
    half_distances,
)
from .graph import (
    Graph,
    Point,
    Pseudotree,
    SpanningTree,
    apply_flip,
    is_pseudotree,
    point_sort_key,
    unique_cycle,
)
from .lexlen import (
    AugmentedGraph,
    LexLen,
    lex_shortest_tree,
    lex_vertex_distances,
)
from .sequence import Constraint, ReconfSequence, validate_sequence


def _check_point(g: Graph, p: Point) -> None:
    """Raise ValueError unless p is a point of g."""
    if not g.point_on(p):
        raise ValueError(f"{p} is not a point of the host graph")


def _host_of(q: SpanningTree | Pseudotree) -> Graph:
    """Host graph of a spanning tree or pseudotree."""
    return q.host


class LambdaLabels:
    """Per-vertex distance labels with respect to two points of a subgraph.

    The label of a vertex is the larger of its two perturbed distances,
    measured inside the subgraph, from the two reference points.  The
    labels drive the no-shortcut test: a witness is only accepted when no
    edge of the host graph could lower any label.

    Attributes:
        r1: first reference point.
        r2: second reference point.
    """

    __slots__ = ("r1", "r2", "_values")

    def __init__(self, r1: Point, r2: Point, values: dict[int, LexLen]) -> None:
        self.r1 = r1
        self.r2 = r2
        self._values = values

    def __getitem__(self, v: int) -> LexLen:
        return self._values[v]

    def items(self) -> Iterable[tuple[int, LexLen]]:
        """(vertex, label) pairs in vertex order."""
        return sorted(self._values.items())

    def __repr__(self) -> str:
        return f"LambdaLabels(r1={self.r1}, r2={self.r2}, n={len(self._values)})"


def lambda_labels(
    g: Graph, q: SpanningTree | Pseudotree, r1: Point, r2: Point
) -> LambdaLabels:
    """Distance labels of all vertices with respect to two points on q.

    Parameters:
        g: host graph.
        q: spanning tree or pseudotree of g.
        r1, r2: distinct points lying on q.

    Returns:
        LambdaLabels mapping every vertex to the larger of its perturbed
        distances from r1 and from r2, both measured within q.

    Raises:
        ValueError: if the hosts disagree or a point does not lie on q.
    """
    if _host_of(q) is not g:
        raise ValueError("q does not live on the given host graph")
    for r in (r1, r2):
        _check_point(g, r)
        if not g.point_on(r, q.edge_ids):
            raise ValueError(f"{r} does not lie on the subgraph")
    d1 = lex_vertex_distances(g, r1, edge_ids=q.edge_ids)
    d2 = lex_vertex_distances(g, r2, edge_ids=q.edge_ids)
    values = {v: max(d1[v], d2[v]) for v in range(g.n)}
    return LambdaLabels(r1, r2, values)


def is_good_triple(
    g: Graph, d: int, r1: Point, r2: Point, q: SpanningTree | Pseudotree
) -> bool:
    """Whether q witnesses an auxiliary edge between two center points.

    The test has three parts.  Both points must lie on q with doubled
    eccentricity at most d.  The per-vertex labels (larger perturbed
    distance from the two points within q) must be stable: no host edge
    may offer a shortcut, i.e. for every edge uv the label of v is at
    most the label of u plus the edge length, and symmetrically.  And if
    q contains a cycle, that cycle must pass through both points.

    Parameters:
        g: host graph.
        d: diameter bound (plain edge units, compared against doubled
            eccentricities).
        r1, r2: distinct points of g.
        q: candidate witness, a spanning tree or pseudotree of g.

    Returns:
        True exactly when all three conditions hold.

    Raises:
        ValueError: if r1 equals r2 or hosts disagree.
    """
    if r1 == r2:
        raise ValueError("the two points must be distinct")
    if _host_of(q) is not g:
        raise ValueError("q does not live on the given host graph")
    _check_point(g, r1)
    _check_point(g, r2)
    ids = q.edge_ids
    if not g.point_on(r1, ids) or not g.point_on(r2, ids):
        return False
    if eccentricity_half(q, r1) > d or eccentricity_half(q, r2) > d:
        return False
    lam = lambda_labels(g, q, r1, r2)
    for eid in g.edge_ids():
        u, v = g.edge(eid)
        w = LexLen.edge(g.m, eid)
        if lam[v] > lam[u] + w or lam[u] > lam[v] + w:
            return False
    if len(ids) == g.n:
        cycle = unique_cycle(q)
        assert cycle is not None
        verts, eids = cycle
        vset = set(verts)
        eset = set(eids)
        for r in (r1, r2):
            if r.kind == "v":
                if r.index not in vset:
                    return False
            elif r.index not in eset:
                return False
    return True


def _pair_prefilter(g: Graph, d: int, r1: Point, r2: Point) -> bool:
    """Cheap necessary conditions for any witness between two points.

    A witness must keep both points at doubled eccentricity at most d,
    and subgraph distances never beat host distances, so a point too
    eccentric in g itself can be dismissed at once; likewise the two
    points must be within doubled distance d + 1 of each other in g.
    """
    all_ids = g.edge_ids()
    for r in (r1, r2):
        if eccentricity_half_subgraph(g, all_ids, r) > d:
            return False
    dist = half_distances(g, all_ids, r1)
    return dist[r2] <= d + 1


def find_good_tree(g: Graph, d: int, r1: Point, r2: Point) -> SpanningTree | None:
    """Search for a spanning-tree witness joining two center points.

    Tries every oriented host edge as the edge nearest the pair of
    points.  Each guess attaches an apex to the host with two synthetic
    edges, one per guessed endpoint, whose weights encode the distances
    the two points would realize through the guessed edge; the perturbed
    shortest-path tree from the apex then proposes a spanning tree (the
    apex edges are replaced by the guessed edge), and the first proposal
    passing the full witness test is returned.

    Parameters:
        g: host graph.
        d: diameter bound.
        r1, r2: distinct points of g.

    Returns:
        A witnessing spanning tree, or None when no guess succeeds.

    Raises:
        ValueError: if the points coincide or are not points of g.
    """
    if r1 == r2:
        raise ValueError("the two points must be distinct")
    _check_point(g, r1)
    _check_point(g, r2)
    if not _pair_prefilter(g, d, r1, r2):
        return None
    m = g.m
    for a, b in ((r1, r2), (r2, r1)):
        dist_a = lex_vertex_distances(g, a)
        dist_b = lex_vertex_distances(g, b)
        for eid in g.edge_ids():
            stored = g.edge(eid)
            full = LexLen.edge(m, eid)
            half = LexLen.edge(m, eid, half=True)
            mid = Point.midpoint(eid)
            for v1, v2 in (stored, (stored[1], stored[0])):
                w1 = half if b == mid else dist_b[v2] + full
                w2 = half if a == mid else dist_a[v1] + full
                aug = AugmentedGraph(g, [(-4, v1, w1), (-3, v2, w2)])
                res = lex_shortest_tree(aug, aug.apex)
                if -4 not in res.tree_keys or -3 not in res.tree_keys:
                    continue
                q_ids = {k for k in res.tree_keys if k > 0}
                q_ids.add(eid)
                if len(q_ids) != g.n - 1:
                    continue
                try:
                    q = SpanningTree(g, q_ids)
                except ValueError:
                    continue
                if is_good_triple(g, d, r1, r2, q):
                    return q
    return None


class _CycleGuess(NamedTuple):
    """One candidate cycle with its guessed edges, enumerated at build time."""

    e_id: int
    v1: int
    v2: int
    ep_id: int
    v1p: int
    v2p: int
    f1_id: int | None
    f2_id: int | None
    cyc: frozenset[int]
    points: frozenset[Point]


class _Walk(NamedTuple):
    """A simple walk between two vertices: vertex tuple, edge tuple, bitmask."""

    verts: tuple[int, ...]
    edges: tuple[int, ...]
    mask: int


class CyclicSearch:
    """Query-independent precomputation for cyclic witness search.

    Enumerates, once per host graph, every candidate cycle that can be
    assembled from two guessed oriented edges and two connecting walks,
    where each walk is either a single perturbed shortest path or two
    such paths joined by one guessed edge.  For every distinct cycle it
    also stores the perturbed distances along the cycle from each of its
    points, plus each point's doubled eccentricity along the cycle,
    which later queries use both for witness weights and as a filter.

    Attributes:
        host: the graph the precomputation belongs to.
        candidates: candidate cycles in deterministic enumeration order.
    """

    __slots__ = ("host", "candidates", "_dist_along", "_ecc_along")

    def __init__(
        self,
        host: Graph,
        candidates: tuple[_CycleGuess, ...],
        dist_along: dict[frozenset[int], dict[Point, dict[int, LexLen]]],
        ecc_along: dict[frozenset[int], dict[Point, int]],
    ) -> None:
        self.host = host
        self.candidates = candidates
        self._dist_along = dist_along
        self._ecc_along = ecc_along

    def cycle_distances(
        self, cyc: frozenset[int], p: Point
    ) -> dict[int, LexLen]:
        """Perturbed distances from a point on the cycle to its vertices."""
        return self._dist_along[cyc][p]

    def cycle_eccentricity(self, cyc: frozenset[int], p: Point) -> int:
        """Doubled eccentricity of a point along its cycle."""
        return self._ecc_along[cyc][p]

    def __repr__(self) -> str:
        return (
            f"CyclicSearch({self.host!r}, {len(self.candidates)} candidates,"
            f" {len(self._dist_along)} cycles)"
        )


def _lex_path_table(g: Graph) -> dict[tuple[int, int], _Walk]:
    """Unique perturbed shortest path between every ordered vertex pair."""
    table: dict[tuple[int, int], _Walk] = {}
    for root in range(g.n):
        res = lex_shortest_tree(g, Point.vertex(root))
        for y in range(g.n):
            verts = [y]
            edges: list[int] = []
            x = y
            while x != root:
                px, key = res.parent[x]
                assert px is not None and key is not None
                edges.append(key)
                verts.append(px)
                x = px
            verts.reverse()
            edges.reverse()
            mask = 0
            for v in verts:
                mask |= 1 << v
            table[root, y] = _Walk(tuple(verts), tuple(edges), mask)
    return table


def build_cyclic_search(g: Graph) -> CyclicSearch:
    """Precompute the candidate cycles of a host graph.

    Enumeration order is pinned: the two guessed cycle edges run over
    oriented edges by ascending id with the stored orientation first,
    and each connecting walk is either a plain shortest path or a
    shortest path, one further guessed oriented edge, and a second
    shortest path, again by ascending id.  Duplicate candidates (same
    cycle, same guessed edges) are kept only at their first position.

    Parameters:
        g: host graph.

    Returns:
        A CyclicSearch ready to serve witness queries for any bound.
    """
    if g.m < g.n:
        return CyclicSearch(g, (), {}, {})
    paths = _lex_path_table(g)
    directed: list[tuple[int, int, int]] = []
    for eid in g.edge_ids():
        u, v = g.edge(eid)
        directed.append((eid, u, v))
        directed.append((eid, v, u))

    # Walk table: every (start, end, connector) combination, where the
    # connector is either nothing or an oriented edge spliced between
    # two shortest paths.  Non-simple combinations are dropped.
    walks: dict[tuple[int, int, int | None, int, int], _Walk | None] = {}
    fopts: list[tuple[int, int, int] | None] = [None]
    fopts.extend(directed)
    for x in range(g.n):
        for y in range(g.n):
            for f in fopts:
                if f is None:
                    walks[x, y, None, 0, 0] = paths[x, y]
                    continue
                fid, fa, fb = f
                p1 = paths[x, fa]
                p2 = paths[fb, y]
                if p1.mask & p2.mask:
                    walks[x, y, fid, fa, fb] = None
                    continue
                walks[x, y, fid, fa, fb] = _Walk(
                    p1.verts + p2.verts,
                    p1.edges + (fid,) + p2.edges,
                    p1.mask | p2.mask,
                )

    def walk_of(x: int, y: int, f: tuple[int, int, int] | None) -> _Walk | None:
        if f is None:
            return walks[x, y, None, 0, 0]
        return walks[x, y, f[0], f[1], f[2]]

    candidates: list[_CycleGuess] = []
    seen: set[tuple] = set()
    cycle_points: dict[frozenset[int], frozenset[Point]] = {}
    for e_id, v1, v2 in directed:
        for ep_id, v1p, v2p in directed:
            if ep_id == e_id:
                continue
            for f1 in fopts:
                w1 = walk_of(v1, v1p, f1)
                if w1 is None or w1.mask >> v2 & 1 or w1.mask >> v2p & 1:
                    continue
                f1_id = None if f1 is None else f1[0]
                for f2 in fopts:
                    w2 = walk_of(v2, v2p, f2)
                    if w2 is None or w1.mask & w2.mask:
                        continue
                    cyc = frozenset(w1.edges + w2.edges + (e_id, ep_id))
                    f2_id = None if f2 is None else f2[0]
                    key = (e_id, v1, v2, ep_id, v1p, v2p, f1_id, f2_id, cyc)
                    if key in seen:
                        continue
                    seen.add(key)
                    points = cycle_points.get(cyc)
                    if points is None:
                        pts = {Point.vertex(x) for x in w1.verts}
                        pts.update(Point.vertex(x) for x in w2.verts)
                        pts.update(Point.midpoint(i) for i in cyc)
                        points = frozenset(pts)
                        cycle_points[cyc] = points
                    candidates.append(
                        _CycleGuess(
                            e_id, v1, v2, ep_id, v1p, v2p,
                            f1_id, f2_id, cyc, points,
                        )
                    )

    dist_along: dict[frozenset[int], dict[Point, dict[int, LexLen]]] = {}
    ecc_along: dict[frozenset[int], dict[Point, int]] = {}
    for cyc, points in cycle_points.items():
        per_point: dict[Point, dict[int, LexLen]] = {}
        eccs: dict[Point, int] = {}
        for p in sorted(points, key=point_sort_key):
            dist = lex_vertex_distances(g, p, edge_ids=cyc)
            per_point[p] = dist
            eccs[p] = max(vec.total2 for vec in dist.values())
        dist_along[cyc] = per_point
        ecc_along[cyc] = eccs
    return CyclicSearch(g, tuple(candidates), dist_along, ecc_along)


def find_good_cyclic_pseudotree(
    g: Graph,
    d: int,
    r1: Point,
    r2: Point,
    search: CyclicSearch | None = None,
) -> Pseudotree | None:
    """Search for a cyclic pseudotree witness joining two center points.

    Runs through the precomputed candidate cycles whose point set covers
    both query points and whose along-cycle eccentricities respect the
    bound.  Each candidate attaches an apex to the host with four
    synthetic edges, one per endpoint of the two guessed cycle edges,
    weighted by distances along the candidate cycle; the perturbed
    shortest-path tree from the apex then proposes a pseudotree (the
    synthetic edges are dropped, the guessed edges are put in), and the
    first proposal that is unicyclic and passes the full witness test is
    returned.

    Parameters:
        g: host graph.
        d: diameter bound.
        r1, r2: distinct points of g.
        search: optional precomputation from build_cyclic_search(g);
            built on the fly when absent.

    Returns:
        A witnessing pseudotree with exactly one cycle, or None.

    Raises:
        ValueError: if the points coincide, are not points of g, or the
            precomputation belongs to a different host.
    """
    if r1 == r2:
        raise ValueError("the two points must be distinct")
    _check_point(g, r1)
    _check_point(g, r2)
    if search is not None and search.host is not g:
        raise ValueError("precomputation belongs to a different host graph")
    if g.m < g.n:
        return None
    if not _pair_prefilter(g, d, r1, r2):
        return None
    if search is None:
        search = build_cyclic_search(g)
    m = g.m
    for a, b in ((r1, r2), (r2, r1)):
        cache: dict[tuple, frozenset[int]] = {}
        for cand in search.candidates:
            if r1 not in cand.points or r2 not in cand.points:
                continue
            cyc = cand.cyc
            if (
                search.cycle_eccentricity(cyc, r1) > d
                or search.cycle_eccentricity(cyc, r2) > d
            ):
                continue
            key = (cand.e_id, cand.v1, cand.v2, cand.ep_id, cand.v1p, cand.v2p, cyc)
            tree_keys = cache.get(key)
            if tree_keys is None:
                dist_a = search.cycle_distances(cyc, a)
                dist_b = search.cycle_distances(cyc, b)
                full_e = LexLen.edge(m, cand.e_id)
                half_e = LexLen.edge(m, cand.e_id, half=True)
                full_ep = LexLen.edge(m, cand.ep_id)
                half_ep = LexLen.edge(m, cand.ep_id, half=True)
                mid_e = Point.midpoint(cand.e_id)
                mid_ep = Point.midpoint(cand.ep_id)
                w1 = half_e if b == mid_e else dist_b[cand.v2] + full_e
                w2 = half_e if a == mid_e else dist_a[cand.v1] + full_e
                w1p = half_ep if b == mid_ep else dist_b[cand.v2p] + full_ep
                w2p = half_ep if a == mid_ep else dist_a[cand.v1p] + full_ep
                aug = AugmentedGraph(
                    g,
                    [
                        (-4, cand.v1, w1),
                        (-3, cand.v2, w2),
                        (-2, cand.v1p, w1p),
                        (-1, cand.v2p, w2p),
                    ],
                )
                tree_keys = lex_shortest_tree(aug, aug.apex).tree_keys
                cache[key] = tree_keys
            q_ids = {k for k in tree_keys if k > 0}
            q_ids.add(cand.e_id)
            q_ids.add(cand.ep_id)
            if cand.f1_id is not None:
                q_ids.add(cand.f1_id)
            if cand.f2_id is not None:
                q_ids.add(cand.f2_id)
            if len(q_ids) != g.n or not is_pseudotree(g, q_ids):
                continue
            q = Pseudotree(g, q_ids)
            if is_good_triple(g, d, r1, r2, q):
                return q
    return None


class GoodTriple(NamedTuple):
    """A verified auxiliary edge: two center points and their witness.

    Attributes:
        r1, r2: the two points, in the order the pair was queried.
        q: the witness pseudotree (a tree witness is wrapped as a
            pseudotree with n - 1 edges).
        labels: the per-vertex distance labels of the witness.
    """

    r1: Point
    r2: Point
    q: Pseudotree
    labels: LambdaLabels


def _find_witness(
    g: Graph, d: int, p: Point, q: Point, search: CyclicSearch
) -> GoodTriple | None:
    """Tree search first, cyclic search second; wrap a hit as a GoodTriple."""
    tree = find_good_tree(g, d, p, q)
    if tree is not None:
        wrapped = Pseudotree(g, tree.edge_ids)
        return GoodTriple(p, q, wrapped, lambda_labels(g, wrapped, p, q))
    cyc = find_good_cyclic_pseudotree(g, d, p, q, search=search)
    if cyc is not None:
        return GoodTriple(p, q, cyc, lambda_labels(g, cyc, p, q))
    return None


class CenterAuxGraph:
    """Auxiliary graph over all points of a host under a diameter bound.

    Vertices are the points of the host graph (its vertices and all edge
    midpoints); two points are adjacent exactly when some witness
    subgraph joins them.  Connected components are computed at build
    time, so reconfiguration queries reduce to component lookups.

    Attributes:
        host: the host graph.
        d: the diameter bound.
        points: all points in deterministic order (vertices first, then
            midpoints, each by ascending index).
    """

    __slots__ = ("host", "d", "points", "_adj", "_witness", "_comp")

    def __init__(
        self,
        host: Graph,
        d: int,
        adj: dict[Point, list[Point]],
        witnesses: dict[frozenset[Point], GoodTriple],
    ) -> None:
        self.host = host
        self.d = d
        self.points = tuple(sorted(adj, key=point_sort_key))
        self._adj = {
            p: tuple(sorted(nbrs, key=point_sort_key)) for p, nbrs in adj.items()
        }
        self._witness = witnesses
        comp: dict[Point, int] = {}
        next_id = 0
        for p in self.points:
            if p in comp:
                continue
            comp[p] = next_id
            queue = deque([p])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp[y] = next_id
                        queue.append(y)
            next_id += 1
        self._comp = comp

    def has_edge(self, p: Point, q: Point) -> bool:
        """Whether the two points are adjacent."""
        return q in self._adj.get(p, ())

    def neighbors(self, p: Point) -> tuple[Point, ...]:
        """Neighbors of a point, in deterministic order."""
        return self._adj[p]

    def edges(self) -> list[tuple[Point, Point]]:
        """All adjacent pairs, each listed once in deterministic order."""
        result = []
        for p in self.points:
            for q in self._adj[p]:
                if point_sort_key(p) < point_sort_key(q):
                    result.append((p, q))
        return result

    def witness(self, p: Point, q: Point) -> GoodTriple:
        """The stored witness for an adjacent pair.

        Raises:
            KeyError: if the pair is not an edge.
        """
        return self._witness[frozenset((p, q))]

    def component(self, p: Point) -> int:
        """Component id of a point."""
        return self._comp[p]

    def same_component(self, p: Point, q: Point) -> bool:
        """Whether two points are connected in the auxiliary graph."""
        return self._comp[p] == self._comp[q]

    def __repr__(self) -> str:
        n_edges = sum(len(v) for v in self._adj.values()) // 2
        return (
            f"CenterAuxGraph({self.host!r}, d={self.d},"
            f" {len(self.points)} points, {n_edges} edges)"
        )


def build_center_aux_graph(
    g: Graph, d: int, search: CyclicSearch | None = None
) -> CenterAuxGraph:
    """Build the full auxiliary graph over all points of the host.

    Every unordered pair of points is queried (vertices before
    midpoints, ascending indices); tree witnesses are preferred over
    cyclic ones.

    Parameters:
        g: host graph.
        d: diameter bound.
        search: optional precomputation shared across calls.

    Returns:
        The auxiliary graph with witnesses and components.
    """
    if search is None:
        search = build_cyclic_search(g)
    elif search.host is not g:
        raise ValueError("precomputation belongs to a different host graph")
    points = sorted(g.all_points(), key=point_sort_key)
    adj: dict[Point, list[Point]] = {p: [] for p in points}
    witnesses: dict[frozenset[Point], GoodTriple] = {}
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            tri = _find_witness(g, d, p, q, search)
            if tri is None:
                continue
            adj[p].append(q)
            adj[q].append(p)
            witnesses[frozenset((p, q))] = tri
    return CenterAuxGraph(g, d, adj, witnesses)


def _require_diameter(t: SpanningTree, d: int, name: str) -> None:
    """Raise ValueError unless the tree meets the diameter bound."""
    if diameter_half(t) > 2 * d:
        raise ValueError(f"{name} has diameter above the bound {d}")


def decide_small_diameter(
    g: Graph,
    d: int,
    t_ini: SpanningTree,
    t_tar: SpanningTree,
    aux: CenterAuxGraph | None = None,
) -> bool:
    """Decide reconfigurability under the diameter bound.

    The answer is yes exactly when some center point of the initial tree
    and some center point of the target tree coincide or are connected
    in the auxiliary graph.  With a prebuilt auxiliary graph this is a
    component lookup; otherwise components are explored lazily from the
    initial tree's center points outward, testing auxiliary edges on
    demand and stopping as soon as a target center is reached.

    Parameters:
        g: host graph.
        d: diameter bound.
        t_ini: initial spanning tree, diameter at most d.
        t_tar: target spanning tree, diameter at most d.
        aux: optional prebuilt auxiliary graph for (g, d).

    Returns:
        True when a flip walk between the trees exists all of whose
        trees have diameter at most d.

    Raises:
        ValueError: if hosts disagree, a tree breaks the bound, or the
            auxiliary graph was built for different parameters.
    """
    if t_ini.host is not g or t_tar.host is not g:
        raise ValueError("trees do not live on the given host graph")
    _require_diameter(t_ini, d, "the initial tree")
    _require_diameter(t_tar, d, "the target tree")
    z_ini = center_points(t_ini, d)
    z_tar = center_points(t_tar, d)
    if z_ini & z_tar:
        return True
    if aux is not None:
        if aux.host is not g or aux.d != d:
            raise ValueError("auxiliary graph was built for different parameters")
        return any(
            aux.same_component(p, q) for p in z_ini for q in z_tar
        )
    search = build_cyclic_search(g)
    points = sorted(g.all_points(), key=point_sort_key)
    visited = set(z_ini)
    queue = deque(sorted(z_ini, key=point_sort_key))
    while queue:
        p = queue.popleft()
        for q in points:
            if q in visited:
                continue
            if find_good_tree(g, d, p, q) is None and (
                find_good_cyclic_pseudotree(g, d, p, q, search=search) is None
            ):
                continue
            if q in z_tar:
                return True
            visited.add(q)
            queue.append(q)
    return False


def _point_bfs_tree(
    g: Graph, edge_ids: frozenset[int] | None, r: Point
) -> tuple[dict[int, int], dict[int, tuple[int | None, int | None]], set[int]]:
    """Breadth-first tree from a point over the host or a subgraph.

    Fully deterministic: the queue is first-in first-out and neighbors
    are scanned by ascending edge id.  A midpoint source seeds both of
    its endpoints at doubled depth 1 and its edge joins the tree.

    Returns:
        (doubled depth per vertex, parent map vertex -> (parent vertex,
        arrival edge id), set of tree edge ids).  Seeds have parent
        vertex None.
    """
    depth2: dict[int, int] = {}
    parent: dict[int, tuple[int | None, int | None]] = {}
    tree: set[int] = set()
    queue: deque[int] = deque()
    if r.kind == "v":
        depth2[r.index] = 0
        parent[r.index] = (None, None)
        queue.append(r.index)
    else:
        eid = r.index
        u, v = g.edge(eid)
        depth2[u] = 1
        depth2[v] = 1
        parent[u] = (None, eid)
        parent[v] = (None, eid)
        tree.add(eid)
        queue.append(u)
        queue.append(v)
    while queue:
        x = queue.popleft()
        for y, eid in g.incident(x):
            if edge_ids is not None and eid not in edge_ids:
                continue
            if y in depth2:
                continue
            depth2[y] = depth2[x] + 2
            parent[y] = (x, eid)
            tree.add(eid)
            queue.append(y)
    return depth2, parent, tree


def _descend_to_bfs_tree(
    g: Graph,
    t: SpanningTree,
    t_star: SpanningTree,
    depth2: dict[int, int],
    r: Point,
) -> tuple[list[SpanningTree], list[tuple[int, int]]]:
    """Flip walk from a tree to the breadth-first tree of its center.

    Repeatedly takes the missing breadth-first edge whose shallower
    endpoint is closest to the center (ties by edge id), and exchanges
    it for the current parent edge of its deeper endpoint.  Each flip
    keeps every vertex at the same or smaller depth, so the diameter
    never grows along the walk.
    """
    trees = [t]
    steps: list[tuple[int, int]] = []
    cur = t
    while cur.edge_ids != t_star.edge_ids:
        best: tuple[tuple[int, int], int] | None = None
        for eid in sorted(t_star.edge_ids - cur.edge_ids):
            u, v = g.edge(eid)
            key = (min(depth2[u], depth2[v]), eid)
            if best is None or key < best[0]:
                best = (key, eid)
        assert best is not None
        add = best[1]
        u, v = g.edge(add)
        y = v if depth2[v] > depth2[u] else u
        _, parent_cur, _ = _point_bfs_tree(g, cur.edge_ids, r)
        remove = parent_cur[y][1]
        assert remove is not None and remove != add
        cur = apply_flip(cur, remove, add)
        trees.append(cur)
        steps.append((remove, add))
    return trees, steps


def same_center_sequence(
    g: Graph, d: int, t1: SpanningTree, t2: SpanningTree, r: Point
) -> ReconfSequence:
    """Flip sequence between two trees sharing the center point r.

    Both trees are walked down to the breadth-first tree of r over the
    whole host (deterministic by ascending edge ids), and the second
    walk is reversed; every intermediate tree keeps all vertices within
    doubled distance d of r, hence diameter at most d throughout.

    Parameters:
        g: host graph.
        d: diameter bound.
        t1, t2: spanning trees with r central in both (doubled
            eccentricity at most d).
        r: the shared center point.

    Returns:
        A validated sequence from t1 to t2 under the bound; a single
        entry when the trees are equal.

    Raises:
        ValueError: if hosts disagree or r is not central in both trees.
    """
    if t1.host is not g or t2.host is not g:
        raise ValueError("trees do not live on the given host graph")
    _check_point(g, r)
    for name, t in (("the first tree", t1), ("the second tree", t2)):
        if not g.point_on(r, t.edge_ids):
            raise ValueError(f"{r} does not lie on {name}")
        if eccentricity_half(t, r) > d:
            raise ValueError(f"{r} is not central in {name} under the bound {d}")
    constraint = Constraint.diam_le(d)
    if t1.edge_ids == t2.edge_ids:
        return ReconfSequence([t1], [], constraint)
    depth2, _, star_ids = _point_bfs_tree(g, None, r)
    t_star = SpanningTree(g, star_ids)
    down1 = _descend_to_bfs_tree(g, t1, t_star, depth2, r)
    down2 = _descend_to_bfs_tree(g, t2, t_star, depth2, r)
    trees = list(down1[0])
    steps = list(down1[1])
    back_trees = down2[0]
    back_steps = down2[1]
    for i in range(len(back_steps) - 1, -1, -1):
        remove, add = back_steps[i]
        trees.append(back_trees[i])
        steps.append((add, remove))
    seq = ReconfSequence(trees, steps, constraint)
    ok, reason = validate_sequence(seq)
    assert ok, f"internal: same-center sequence invalid: {reason}"
    return seq


def split_pseudotree(
    g: Graph, d: int, q: Pseudotree, r1: Point, r2: Point
) -> tuple[SpanningTree, SpanningTree]:
    """Split a witness pseudotree into two adjacent centered trees.

    Each returned tree is the perturbed shortest-path tree of the
    pseudotree from one of the points, so distances from that point are
    preserved and the point stays central.  The two trees differ in at
    most one edge exchange: a tree-shaped witness is returned twice
    unchanged, a cyclic witness loses one cycle edge per point.

    Parameters:
        g: host graph.
        d: diameter bound.
        q: witness pseudotree.
        r1, r2: points of q with doubled eccentricity at most d.

    Returns:
        (t1, t2) with r1 central in t1, r2 central in t2, and t1, t2
        equal or one flip apart.

    Raises:
        ValueError: if hosts disagree or a point is not central in q.
    """
    if q.host is not g:
        raise ValueError("q does not live on the given host graph")
    for r in (r1, r2):
        _check_point(g, r)
        if not g.point_on(r, q.edge_ids):
            raise ValueError(f"{r} does not lie on the pseudotree")
        if eccentricity_half(q, r) > d:
            raise ValueError(f"{r} is not central in the pseudotree")
    if q.is_tree():
        t = SpanningTree(g, q.edge_ids)
        return t, t
    result = []
    for r in (r1, r2):
        res = lex_shortest_tree(g, r, edge_ids=q.edge_ids)
        result.append(SpanningTree(g, frozenset(res.tree_keys)))
    t1, t2 = result
    assert len(t1.edge_ids - t2.edge_ids) <= 1
    return t1, t2


def sequence_small_diameter(
    g: Graph,
    d: int,
    t_ini: SpanningTree,
    t_tar: SpanningTree,
    aux: CenterAuxGraph | None = None,
) -> ReconfSequence | None:
    """Construct a flip sequence under the diameter bound, if one exists.

    Walks a shortest path between center points in the auxiliary graph.
    For each auxiliary edge the stored witness is split into two
    adjacent centered trees; the current tree is reshaped to the first
    around the current center, then the single connecting flip switches
    the center to the next point.  A final reshape around the last
    center reaches the target.

    Parameters:
        g: host graph.
        d: diameter bound.
        t_ini: initial spanning tree, diameter at most d.
        t_tar: target spanning tree, diameter at most d.
        aux: optional prebuilt auxiliary graph for (g, d); built in full
            when absent.

    Returns:
        A validated sequence from t_ini to t_tar all of whose trees have
        diameter at most d, or None when no such sequence exists.

    Raises:
        ValueError: as for decide_small_diameter.
    """
    if t_ini.host is not g or t_tar.host is not g:
        raise ValueError("trees do not live on the given host graph")
    _require_diameter(t_ini, d, "the initial tree")
    _require_diameter(t_tar, d, "the target tree")
    constraint = Constraint.diam_le(d)
    z_ini = center_points(t_ini, d)
    z_tar = center_points(t_tar, d)
    common = sorted(z_ini & z_tar, key=point_sort_key)
    if common:
        return same_center_sequence(g, d, t_ini, t_tar, common[0])
    if aux is None:
        aux = build_center_aux_graph(g, d)
    elif aux.host is not g or aux.d != d:
        raise ValueError("auxiliary graph was built for different parameters")
    path = _center_path(aux, z_ini, z_tar)
    if path is None:
        return None
    seq = None
    cur = t_ini
    for i in range(len(path) - 1):
        r_here, r_next = path[i], path[i + 1]
        witness = aux.witness(r_here, r_next)
        t_here, t_next = split_pseudotree(g, d, witness.q, r_here, r_next)
        part = same_center_sequence(g, d, cur, t_here, r_here)
        seq = part if seq is None else seq.concat(part)
        if t_here.edge_ids != t_next.edge_ids:
            remove = min(t_here.edge_ids - t_next.edge_ids)
            add = min(t_next.edge_ids - t_here.edge_ids)
            hop = ReconfSequence([t_here, t_next], [(remove, add)], constraint)
            seq = seq.concat(hop)
        cur = t_next
    tail = same_center_sequence(g, d, cur, t_tar, path[-1])
    seq = tail if seq is None else seq.concat(tail)
    ok, reason = validate_sequence(seq)
    assert ok, f"internal: diameter sequence invalid: {reason}"
    return seq


def _center_path(
    aux: CenterAuxGraph, sources: set[Point], targets: set[Point]
) -> list[Point] | None:
    """Shortest auxiliary path from any source point to any target point."""
    order = sorted(sources, key=point_sort_key)
    parent: dict[Point, Point | None] = {p: None for p in order}
    queue = deque(order)
    while queue:
        p = queue.popleft()
        if p in targets:
            path = [p]
            back = parent[p]
            while back is not None:
                path.append(back)
                back = parent[back]
            path.reverse()
            return path
        for q in aux.neighbors(p):
            if q not in parent:
                parent[q] = p
                queue.append(q)
    return None
