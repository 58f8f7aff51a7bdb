"""
Brute-force reference implementations.

Everything here answers by exhaustion: spanning trees are enumerated by
deletion/contraction, reconfiguration questions by breadth-first search over
the flip graph restricted to constraint-satisfying trees, auxiliary-graph
edge relations by scanning tree pairs, and Hamiltonian paths by
backtracking.  The solvers in the other modules are checked against these
answers on small instances; nothing here is needed for the fast paths.
"""

from __future__ import annotations

from .distances import diameter_half, eccentricity_half
from .graph import (
    Graph,
    Point,
    Pseudotree,
    SpanningTree,
    fundamental_cycle,
    validate_spanning_tree,
)
from .sequence import Constraint, ReconfSequence

#: Default ceiling on the number of spanning trees the oracle will touch.
DEFAULT_CAP = 2_000_000


class CapExceeded(Exception):
    """Raised when an enumeration would exceed the configured cap."""


def enumerate_spanning_trees(g: Graph, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All spanning trees of a connected graph as sorted edge-id tuples.

    Uses deletion/contraction: the first remaining edge is either contracted
    (trees containing it) or deleted (trees avoiding it, pruned when the
    deletion disconnects the graph).

    Parameters:
        g: a connected host graph.
        cap: maximum number of trees to produce.

    Returns:
        The trees as sorted tuples of edge ids, sorted lexicographically.

    Raises:
        CapExceeded: if more than cap trees exist.
        ValueError: if g is not connected.
    """
    if not g.is_connected():
        raise ValueError("spanning-tree enumeration requires a connected graph")
    out: list[tuple[int, ...]] = []

    def connected(edges: list[tuple[int, int, int]], nverts: int) -> bool:
        if nverts == 1:
            return True
        adj: dict[int, list[int]] = {}
        for u, v, _ in edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        if len(adj) < nverts:
            return False
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == nverts

    def recurse(edges: list[tuple[int, int, int]], nverts: int, chosen: list[int]) -> None:
        if nverts == 1:
            out.append(tuple(sorted(chosen)))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} spanning trees")
            return
        u, v, eid = edges[0]
        rest = edges[1:]
        # Contract u-v: relabel v to u, drop the loops that appear.
        contracted = []
        for a, b, f in rest:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                contracted.append((a2, b2, f))
        chosen.append(eid)
        recurse(contracted, nverts - 1, chosen)
        chosen.pop()
        # Delete u-v, unless that disconnects the remaining graph.
        if connected(rest, nverts):
            recurse(rest, nverts, chosen)

    edges0 = [(u, v, eid) for eid, (u, v) in enumerate(g.edges, start=1)]
    recurse(edges0, g.n, [])
    out.sort()
    return out


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees by the matrix-tree theorem.

    Computes the determinant of the reduced Laplacian with the Bareiss
    fraction-free algorithm, so everything stays in exact integers.
    """
    n = g.n
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    mat = [row[1:] for row in lap[1:]]
    return _det_bareiss(mat)


def _det_bareiss(mat: list[list[int]]) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    m = [row[:] for row in mat]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(k - 1):
        if m[col][col] == 0:
            for i in range(col + 1, k):
                if m[i][col] != 0:
                    m[col], m[i] = m[i], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) // prev
        prev = m[col][col]
    return sign * m[k - 1][k - 1]


def enumerate_pseudotrees(g: Graph, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All spanning pseudotrees (trees plus unicyclic spanning subgraphs).

    Each appears once, as a sorted edge-id tuple; trees come first in the
    combined lexicographic order only by accident — the list as a whole is
    sorted lexicographically by edge tuple.
    """
    trees = enumerate_spanning_trees(g, cap)
    seen: set[tuple[int, ...]] = set(trees)
    for tree in trees:
        tree_set = set(tree)
        for extra in g.edge_ids():
            if extra not in tree_set:
                cand = tuple(sorted(tree_set | {extra}))
                seen.add(cand)
                if len(seen) > cap:
                    raise CapExceeded(f"more than {cap} pseudotrees")
    return sorted(seen)


def _tree_neighbors(g: Graph, ids: frozenset[int]) -> list[tuple[int, int, frozenset[int]]]:
    """All flip neighbors of a spanning tree as (removed, added, new ids)."""
    t = SpanningTree(g, ids, _checked=True)
    out: list[tuple[int, int, frozenset[int]]] = []
    for add in g.edge_ids():
        if add in ids:
            continue
        cycle = fundamental_cycle(t, add)
        for remove in cycle:
            if remove == add:
                continue
            out.append((remove, add, (ids - {remove}) | {add}))
    return out


def flip_component_map(
    g: Graph, constraint: Constraint, trees: list[tuple[int, ...]] | None = None
) -> dict[tuple[int, ...], int]:
    """Connected components of the constrained flip graph.

    Vertices are the spanning trees satisfying the constraint; edges are
    single flips between two of them.  Returns a map from canonical tree
    tuple to a component number (numbered by smallest member, ascending).

    Parameters:
        g: host graph.
        constraint: requirement each tree in the flip graph must satisfy.
        trees: optional precomputed enumerate_spanning_trees output.
    """
    if trees is None:
        trees = enumerate_spanning_trees(g)
    valid: dict[tuple[int, ...], int] = {}
    order: list[tuple[int, ...]] = []
    for tup in trees:
        t = SpanningTree(g, tup, _checked=True)
        if constraint.holds(t):
            valid[tup] = -1
            order.append(tup)
    comp = 0
    for start in order:
        if valid[start] != -1:
            continue
        valid[start] = comp
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for _, _, nxt_ids in _tree_neighbors(g, frozenset(cur)):
                nxt = tuple(sorted(nxt_ids))
                if valid.get(nxt) == -1:
                    valid[nxt] = comp
                    frontier.append(nxt)
        comp += 1
    return valid


def oracle_decide(
    g: Graph,
    constraint: Constraint,
    t_ini: SpanningTree,
    t_tar: SpanningTree,
    cap: int = DEFAULT_CAP,
) -> tuple[bool, ReconfSequence | None]:
    """Decide reconfigurability by BFS over the constrained flip graph.

    Parameters:
        g: host graph (both trees must live on it).
        constraint: requirement every intermediate tree must satisfy; both
            endpoints must satisfy it already.
        t_ini, t_tar: the two endpoint trees.
        cap: ceiling on the number of trees the search may visit.

    Returns:
        (True, shortest sequence) or (False, None).

    Raises:
        ValueError: if an endpoint violates the constraint.
        CapExceeded: if the search grows past the cap.
    """
    if not constraint.holds(t_ini) or not constraint.holds(t_tar):
        raise ValueError("endpoint tree violates the constraint")
    start = t_ini.canonical()
    goal = t_tar.canonical()
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int, int] | None] = {start: None}
    frontier = [start]
    found = start == goal
    while frontier and not found:
        nxt_frontier: list[tuple[int, ...]] = []
        for cur in frontier:
            for remove, add, nxt_ids in _tree_neighbors(g, frozenset(cur)):
                nxt = tuple(sorted(nxt_ids))
                if nxt in parent:
                    continue
                t = SpanningTree(g, nxt, _checked=True)
                if not constraint.holds(t):
                    continue
                parent[nxt] = (cur, remove, add)
                if len(parent) > cap:
                    raise CapExceeded(f"flip-graph search visited over {cap} trees")
                if nxt == goal:
                    found = True
                    break
                nxt_frontier.append(nxt)
            if found:
                break
        frontier = nxt_frontier
    if not found:
        return False, None
    # Walk the parent chain back from the goal.
    chain: list[tuple[tuple[int, ...], int, int]] = []
    cur = goal
    while parent[cur] is not None:
        prev, remove, add = parent[cur]
        chain.append((cur, remove, add))
        cur = prev
    chain.reverse()
    trees = [SpanningTree(g, start, _checked=True)]
    steps: list[tuple[int, int]] = []
    for tup, remove, add in chain:
        trees.append(SpanningTree(g, tup, _checked=True))
        steps.append((remove, add))
    return True, ReconfSequence(trees, steps, constraint)


def oracle_degree_pair(g: Graph, d: int, u: int, v: int) -> bool:
    """Brute-force test of the degree auxiliary-graph edge relation.

    True iff some spanning tree pair (T1, T2) that are equal or one flip
    apart has u of degree >= d in T1 and v of degree >= d in T2.

    Parameters:
        g: connected host graph.
        d: degree threshold.
        u, v: two distinct vertices.
    """
    if u == v:
        raise ValueError("the relation is over distinct vertex pairs")
    trees = enumerate_spanning_trees(g)
    # Single tree serving both endpoints (the trees may be equal).
    by_u: list[frozenset[int]] = []
    for tup in trees:
        t = SpanningTree(g, tup, _checked=True)
        du, dv = t.degree(u), t.degree(v)
        if du >= d and dv >= d:
            return True
        if du >= d:
            by_u.append(frozenset(tup))
    deg_v_ok: set[tuple[int, ...]] = set()
    for tup in trees:
        t = SpanningTree(g, tup, _checked=True)
        if t.degree(v) >= d:
            deg_v_ok.add(tup)
    for ids in by_u:
        for _, _, nxt_ids in _tree_neighbors(g, ids):
            if tuple(sorted(nxt_ids)) in deg_v_ok:
                return True
    return False


def oracle_center_pair(
    g: Graph,
    d: int,
    r1: Point,
    r2: Point,
    pseudotrees: list[tuple[int, ...]] | None = None,
) -> bool:
    """Brute-force test of the center auxiliary-graph edge relation.

    True iff some spanning pseudotree Q has both points on it with doubled
    eccentricity at most d.  A midpoint is on Q only when its edge is.

    Parameters:
        g: connected host graph.
        d: diameter bound (compared against doubled eccentricities).
        r1, r2: two distinct points of g.
        pseudotrees: optional precomputed enumerate_pseudotrees output.
    """
    if r1 == r2:
        raise ValueError("the relation is over distinct point pairs")
    if pseudotrees is None:
        pseudotrees = enumerate_pseudotrees(g)
    for tup in pseudotrees:
        ids = frozenset(tup)
        ok = True
        for r in (r1, r2):
            if r.kind == "m" and r.index not in ids:
                ok = False
                break
        if not ok:
            continue
        q = Pseudotree(g, ids)
        if eccentricity_half(q, r1) <= d and eccentricity_half(q, r2) <= d:
            return True
    return False


def oracle_hampath(g: Graph, s: int, t: int) -> list[int] | None:
    """A Hamiltonian s-t path by backtracking, or None.

    Neighbors are explored in ascending vertex order, so the returned path
    is deterministic.
    """
    n = g.n
    if s == t:
        return [s] if n == 1 else None
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    path = [s]
    used = [False] * n
    used[s] = True

    def backtrack() -> bool:
        cur = path[-1]
        if len(path) == n:
            return cur == t
        for w in nbrs[cur]:
            if used[w]:
                continue
            # Never land on t before the final step.
            if w == t and len(path) != n - 1:
                continue
            used[w] = True
            path.append(w)
            if backtrack():
                return True
            path.pop()
            used[w] = False
        return False

    if backtrack():
        return path
    return None


def oracle_min_diameter_tree(g: Graph) -> int:
    """Smallest doubled diameter over all spanning trees (brute force)."""
    best: int | None = None
    for tup in enumerate_spanning_trees(g):
        t = SpanningTree(g, tup, _checked=True)
        diam = diameter_half(t)
        if best is None or diam < best:
            best = diam
    assert best is not None
    return best
