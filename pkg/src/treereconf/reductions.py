"""Hardness-instance generators for constrained spanning-tree flips.

Two constructive reductions are provided, each emitting a ready-to-run
instance (host graph, bound d, initial and target trees, and provenance
metadata tying every gadget vertex and edge back to the source problem).

The first turns a constraint-logic reconfiguration instance -- an
and/or graph whose edges are re-oriented one at a time while every
vertex keeps incoming weight at least two -- into tree reconfiguration
under a maximum-degree bound d >= 3.  Orientations correspond exactly
to bounded-degree spanning trees of the gadget graph, edge reversals to
short flip sequences, so the generated instance is reconfigurable
precisely when the source instance is.

The second turns a Hamiltonian-path instance into tree reconfiguration
under a diameter lower bound: three long pendant paths and a diamond
block force every spanning tree's diameter to be realized between two
fixed path tips, and rewiring the diamond while keeping the diameter
requires threading a Hamiltonian path through the original graph.

Both directions of each correspondence are implemented: instance
generation, solution mappings (orientation of a tree, tree of an
orientation, certificate sequence of a Hamiltonian path, Hamiltonian
path extracted from a sequence), and the structural validators the
correspondences rest on.
"""

from __future__ import annotations

import json
import os
from collections import deque
from typing import Iterable, Sequence

from .distances import diameter_half, half_distances
from .graph import (
    Graph,
    Point,
    SpanningTree,
    format_graph,
    format_tree,
    parse_graph,
    parse_tree,
    tree_path,
)
from .sequence import Constraint, ReconfSequence, unconstrained_sequence, validate_sequence

AND = "AND"
OR = "OR"


class NCLGraph:
    """A constraint-logic graph: cubic, with weighted and/or vertices.

    Every vertex has exactly three incident edge slots (parallel edges
    are allowed, loops are not).  An OR vertex sees three weight-2
    edges; an AND vertex sees one weight-2 edge and two weight-1 edges.

    Attributes:
        kinds: per-vertex kind, "AND" or "OR".
        edges: tuples (u, v, w) in input order; the edge index in this
            list is the edge's identity.
    """

    __slots__ = ("kinds", "edges", "_inc")

    def __init__(
        self, kinds: Sequence[str], edges: Iterable[tuple[int, int, int]]
    ) -> None:
        self.kinds = tuple(k.upper() for k in kinds)
        for k in self.kinds:
            if k not in (AND, OR):
                raise ValueError(f"unknown vertex kind {k!r}")
        n = len(self.kinds)
        edge_list = []
        inc: list[list[int]] = [[] for _ in range(n)]
        for idx, (u, v, w) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {idx} endpoint out of range")
            if u == v:
                raise ValueError(f"edge {idx} is a loop")
            if w not in (1, 2):
                raise ValueError(f"edge {idx} weight must be 1 or 2, got {w}")
            inc[u].append(idx)
            inc[v].append(idx)
            edge_list.append((u, v, w))
        self.edges = tuple(edge_list)
        self._inc = tuple(tuple(ids) for ids in inc)
        for v in range(n):
            ids = self._inc[v]
            if len(ids) != 3:
                raise ValueError(f"vertex {v} has degree {len(ids)}, expected 3")
            weights = sorted(self.edges[i][2] for i in ids)
            if self.kinds[v] == OR and weights != [2, 2, 2]:
                raise ValueError(f"OR vertex {v} sees weights {weights}")
            if self.kinds[v] == AND and weights != [1, 1, 2]:
                raise ValueError(f"AND vertex {v} sees weights {weights}")

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.kinds)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Indices of the three edges at a vertex, ascending."""
        return self._inc[v]

    def ordered_incidence(self, v: int) -> tuple[int, ...]:
        """Incident edge indices in gadget order.

        For an AND vertex the weight-2 edge comes first, then the two
        weight-1 edges ascending; for an OR vertex simply ascending.
        """
        ids = self._inc[v]
        if self.kinds[v] == OR:
            return ids
        heavy = [i for i in ids if self.edges[i][2] == 2]
        light = [i for i in ids if self.edges[i][2] == 1]
        return (heavy[0], light[0], light[1])

    def other_end(self, e: int, v: int) -> int:
        """The endpoint of edge e that is not v."""
        u, w, _ = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def __repr__(self) -> str:
        return f"NCLGraph(n={self.n}, m={self.m})"


class NCLOrientation:
    """An orientation of a constraint-logic graph: one head per edge.

    Attributes:
        heads: heads[i] is the vertex edge i points into.
    """

    __slots__ = ("heads",)

    def __init__(self, h: NCLGraph, heads: Sequence[int]) -> None:
        if len(heads) != h.m:
            raise ValueError(f"need {h.m} heads, got {len(heads)}")
        for i, head in enumerate(heads):
            u, v, _ = h.edges[i]
            if head not in (u, v):
                raise ValueError(f"head {head} is not an endpoint of edge {i}")
        self.heads = tuple(heads)

    def inward(self, e: int, v: int) -> bool:
        """Whether edge e points into vertex v."""
        return self.heads[e] == v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCLOrientation):
            return NotImplemented
        return self.heads == other.heads

    def __hash__(self) -> int:
        return hash(self.heads)

    def __repr__(self) -> str:
        return f"NCLOrientation({self.heads})"


def validate_ncl(h: NCLGraph, o: NCLOrientation) -> bool:
    """Whether an orientation is a valid configuration.

    Valid means every vertex's incoming weight is at least two.
    """
    incoming = [0] * h.n
    for i, (u, v, w) in enumerate(h.edges):
        incoming[o.heads[i]] += w
    return all(x >= 2 for x in incoming)


def enumerate_configurations(h: NCLGraph) -> list[NCLOrientation]:
    """All valid configurations, in lexicographic head order."""
    result: list[NCLOrientation] = []
    heads = [0] * h.m
    incoming = [0] * h.n

    def rec(i: int) -> None:
        if i == h.m:
            if all(x >= 2 for x in incoming):
                result.append(NCLOrientation(h, list(heads)))
            return
        u, v, w = h.edges[i]
        for head in sorted((u, v)):
            heads[i] = head
            incoming[head] += w
            rec(i + 1)
            incoming[head] -= w

    rec(0)
    return result


def parse_ncl(text: str) -> NCLGraph:
    """Parse a constraint-logic graph from its file format.

    Two-token lines ``v kind`` declare vertex kinds; three-token lines
    ``u v w`` declare weighted edges, in order.  Blank lines and lines
    starting with '#' are ignored.
    """
    kind_map: dict[int, str] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2:
            v = int(parts[0])
            if v in kind_map:
                raise ValueError(f"line {lineno}: vertex {v} declared twice")
            kind_map[v] = parts[1].upper()
        elif len(parts) == 3:
            edges.append((int(parts[0]), int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"line {lineno}: expected 2 or 3 tokens")
    if not kind_map:
        raise ValueError("no vertex declarations found")
    n = max(kind_map) + 1
    if sorted(kind_map) != list(range(n)):
        raise ValueError("vertex declarations must cover 0..n-1")
    return NCLGraph([kind_map[v] for v in range(n)], edges)


def format_ncl(h: NCLGraph) -> str:
    """Serialize a constraint-logic graph to its file format."""
    lines = [f"{v} {h.kinds[v]}" for v in range(h.n)]
    lines.extend(f"{u} {v} {w}" for u, v, w in h.edges)
    return "\n".join(lines) + "\n"


def parse_orientation(h: NCLGraph, text: str) -> NCLOrientation:
    """Parse an orientation file: one ``u->v`` line per edge, in order."""
    heads: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ValueError(f"expected 'u->v', got {line!r}")
        tail_s, head_s = line.split("->", 1)
        tail, head = int(tail_s), int(head_s)
        i = len(heads)
        if i >= h.m:
            raise ValueError("more orientation lines than edges")
        u, v, _ = h.edges[i]
        if {tail, head} != {u, v}:
            raise ValueError(
                f"line for edge {i} names {tail}->{head}, edge is {u}-{v}"
            )
        heads.append(head)
    if len(heads) != h.m:
        raise ValueError(f"need {h.m} orientation lines, got {len(heads)}")
    return NCLOrientation(h, heads)


def format_orientation(h: NCLGraph, o: NCLOrientation) -> str:
    """Serialize an orientation: one ``u->v`` line per edge, in order."""
    lines = []
    for i, (u, v, _) in enumerate(h.edges):
        head = o.heads[i]
        tail = v if head == u else u
        lines.append(f"{tail}->{head}")
    return "\n".join(lines) + "\n"


class RSTInstance:
    """A constrained tree-reconfiguration instance with provenance.

    Attributes:
        g: host graph.
        d: the bound.
        kind: constraint kind ("maxDegLe" or "diamGe").
        t_ini, t_tar: the two spanning trees.
        meta: JSON-serializable provenance (gadget name and id maps).
    """

    __slots__ = ("g", "d", "kind", "t_ini", "t_tar", "meta")

    def __init__(
        self,
        g: Graph,
        d: int,
        kind: str,
        t_ini: SpanningTree,
        t_tar: SpanningTree,
        meta: dict,
    ) -> None:
        self.g = g
        self.d = d
        self.kind = kind
        self.t_ini = t_ini
        self.t_tar = t_tar
        self.meta = meta

    def constraint(self) -> Constraint:
        """The Constraint object this instance is posed under."""
        return Constraint(self.kind, self.d)

    def __repr__(self) -> str:
        return (
            f"RSTInstance({self.kind} d={self.d}, n={self.g.n}, m={self.g.m})"
        )


def save_instance(inst: RSTInstance, out_dir: str) -> None:
    """Write an instance bundle: graph.txt, t_ini.txt, t_tar.txt, instance.json."""
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "graph.txt"), "w") as f:
        f.write(format_graph(inst.g))
    with open(os.path.join(out_dir, "t_ini.txt"), "w") as f:
        f.write(format_tree(inst.t_ini))
    with open(os.path.join(out_dir, "t_tar.txt"), "w") as f:
        f.write(format_tree(inst.t_tar))
    doc = {"d": inst.d, "constraint": inst.kind, "meta": inst.meta}
    with open(os.path.join(out_dir, "instance.json"), "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


def load_instance(in_dir: str) -> RSTInstance:
    """Read an instance bundle written by save_instance."""
    with open(os.path.join(in_dir, "graph.txt")) as f:
        g = parse_graph(f.read())
    with open(os.path.join(in_dir, "t_ini.txt")) as f:
        t_ini = parse_tree(g, f.read())
    with open(os.path.join(in_dir, "t_tar.txt")) as f:
        t_tar = parse_tree(g, f.read())
    with open(os.path.join(in_dir, "instance.json")) as f:
        doc = json.load(f)
    return RSTInstance(g, doc["d"], doc["constraint"], t_ini, t_tar, doc["meta"])


def build_connector_tree(
    leaves: Sequence[int], fresh_start: int
) -> tuple[list[tuple[int, int]], list[int]]:
    """A caterpillar tree whose leaf set is exactly the given vertices.

    Internal vertices are fresh ids counted up from fresh_start and form
    a path; every vertex of the result has degree at most three and the
    given vertices are precisely its leaves.

    Parameters:
        leaves: at least two existing vertex ids.
        fresh_start: first unused vertex id for the internal path.

    Returns:
        (edges, internal vertex ids).  With two or three leaves there is
        one internal vertex; with k >= 4 leaves there are k - 2, the
        first and last carrying two leaves each.

    Raises:
        ValueError: with fewer than two leaves.
    """
    k = len(leaves)
    if k < 2:
        raise ValueError("a connector tree needs at least two leaves")
    if k <= 3:
        center = fresh_start
        edges = [(center, leaf) for leaf in leaves]
        return edges, [center]
    internal = [fresh_start + i for i in range(k - 2)]
    edges = [(internal[i], internal[i + 1]) for i in range(len(internal) - 1)]
    edges.append((internal[0], leaves[0]))
    edges.append((internal[0], leaves[1]))
    for i in range(1, len(internal) - 1):
        edges.append((internal[i], leaves[i + 1]))
    edges.append((internal[-1], leaves[k - 2]))
    edges.append((internal[-1], leaves[k - 1]))
    return edges, internal


def ncl_to_rst(
    h: NCLGraph,
    sigma_ini: NCLOrientation,
    sigma_tar: NCLOrientation,
    d: int = 3,
) -> RSTInstance:
    """Reduce constraint-logic reconfiguration to degree-bounded flips.

    Builds the gadget graph: one vertex per edge-vertex incidence, one
    per edge, a hub per OR vertex with three spokes, a seven-edge block
    per AND vertex, a connector caterpillar through designated gadget
    leaves, and enough pendant leaves at each gadget vertex to use up
    its slack under the degree bound.  The two trees encode the two
    configurations.

    Parameters:
        h: the constraint-logic graph.
        sigma_ini, sigma_tar: valid configurations of h.
        d: degree bound, at least 3.

    Returns:
        The reduced instance with full provenance metadata.

    Raises:
        ValueError: if d < 3 or a configuration is invalid.
    """
    if d < 3:
        raise ValueError("the degree bound must be at least 3")
    for name, sigma in (("initial", sigma_ini), ("target", sigma_tar)):
        if not validate_ncl(h, sigma):
            raise ValueError(f"the {name} orientation is not a valid configuration")

    names: dict[int, str] = {}
    b_map: dict[int, int] = {}
    next_vertex = 0

    def new_vertex(name: str, b: int | None = None) -> int:
        nonlocal next_vertex
        vid = next_vertex
        next_vertex += 1
        names[vid] = name
        if b is not None:
            b_map[vid] = b
        return vid

    edges: list[tuple[int, int]] = []

    def add_edge(a: int, bb: int) -> int:
        edges.append((a, bb))
        return len(edges)

    # Incidence vertices, one per (vertex, incident edge) slot.
    inc_vertex: dict[tuple[int, int], int] = {}
    for u in range(h.n):
        for e in h.incident(u):
            inc_vertex[u, e] = new_vertex(f"v({u},{e})", b=2)

    # Edge gadgets: a middle vertex joined to both incidence vertices.
    edge_vertex: list[int] = []
    edge_gadget_ids: list[list[int]] = []
    for e, (u, v, _) in enumerate(h.edges):
        ve = new_vertex(f"v({e})", b=1)
        edge_vertex.append(ve)
        id_u = add_edge(ve, inc_vertex[u, e])
        id_v = add_edge(ve, inc_vertex[v, e])
        edge_gadget_ids.append([id_u, id_v])

    # OR and AND gadgets; collect the connector's leaf set as we go.
    leaves: list[int] = []
    or_gadget: dict[str, dict] = {}
    and_gadget: dict[str, dict] = {}
    for u in range(h.n):
        inc = h.ordered_incidence(u)
        if h.kinds[u] == OR:
            r = new_vertex(f"r({u})", b=1)
            spoke_ids = [add_edge(r, inc_vertex[u, e]) for e in inc]
            or_gadget[str(u)] = {"r": r, "edge_ids": spoke_ids}
            leaves.extend(inc_vertex[u, e] for e in inc)
        else:
            e0, e1, e2 = inc
            r = new_vertex(f"r({u})", b=1)
            w = new_vertex(f"w({u})", b=3)
            x = new_vertex(f"x({u})", b=2)
            y = new_vertex(f"y({u})", b=2)
            block_ids = [
                add_edge(inc_vertex[u, e0], r),
                add_edge(r, w),
                add_edge(w, x),
                add_edge(w, y),
                add_edge(x, inc_vertex[u, e1]),
                add_edge(y, inc_vertex[u, e2]),
                add_edge(inc_vertex[u, e1], inc_vertex[u, e2]),
            ]
            and_gadget[str(u)] = {
                "r": r, "w": w, "x": x, "y": y, "edge_ids": block_ids,
            }
            leaves.append(inc_vertex[u, e0])
            leaves.append(w)

    # Connector caterpillar through the leaves.
    leaf_order = sorted(leaves)
    conn_edges, internal = build_connector_tree(leaf_order, next_vertex)
    for vid in internal:
        names[vid] = f"c({vid - internal[0]})"
    next_vertex = internal[-1] + 1
    connector_ids = [add_edge(a, bb) for a, bb in conn_edges]

    # Pendant leaves: d - b(v) per gadget vertex.
    pendant_ids: dict[str, list[int]] = {}
    core_vertices = sorted(b_map)
    for v in core_vertices:
        ids = []
        for i in range(d - b_map[v]):
            leaf = new_vertex(f"pend({v},{i})")
            ids.append(add_edge(v, leaf))
        if ids:
            pendant_ids[str(v)] = ids

    g = Graph(next_vertex, edges)
    meta = {
        "kind": "ncl",
        "ncl_vertices": [
            {"kind": h.kinds[u], "edges": list(h.ordered_incidence(u))}
            for u in range(h.n)
        ],
        "ncl_edges": [{"u": u, "v": v, "w": w} for u, v, w in h.edges],
        "inc_vertex": {f"{u}:{e}": vid for (u, e), vid in inc_vertex.items()},
        "edge_vertex": edge_vertex,
        "edge_gadget_ids": edge_gadget_ids,
        "or_gadget": or_gadget,
        "and_gadget": and_gadget,
        "connector_ids": connector_ids,
        "connector_internal": internal,
        "pendant_ids": pendant_ids,
        "b": {str(v): b for v, b in b_map.items()},
        "leaves": leaf_order,
        "names": {str(v): name for v, name in names.items()},
    }
    t_ini = SpanningTree(g, _encoding_ids(meta, h, sigma_ini))
    t_tar = SpanningTree(g, _encoding_ids(meta, h, sigma_tar))
    return RSTInstance(g, d, "maxDegLe", t_ini, t_tar, meta)


def ncl_of_instance(inst: RSTInstance) -> NCLGraph:
    """Rebuild the source constraint-logic graph from instance metadata."""
    if inst.meta.get("kind") != "ncl":
        raise ValueError("instance does not carry constraint-logic metadata")
    kinds = [entry["kind"] for entry in inst.meta["ncl_vertices"]]
    edges = [(e["u"], e["v"], e["w"]) for e in inst.meta["ncl_edges"]]
    return NCLGraph(kinds, edges)


def _encoding_ids(meta: dict, h: NCLGraph, sigma: NCLOrientation) -> set[int]:
    """Edge ids of the tree encoding a configuration (see tree_of_orientation)."""
    ids = set(meta["connector_ids"])
    for pend in meta["pendant_ids"].values():
        ids.update(pend)
    for e in range(h.m):
        u, v, _ = h.edges[e]
        pair = meta["edge_gadget_ids"][e]
        # Keep the edge on the far side of the head: the gadget edge to
        # the head's own incidence vertex is dropped.
        ids.add(pair[1] if sigma.heads[e] == u else pair[0])
    for u in range(h.n):
        inc = h.ordered_incidence(u)
        if h.kinds[u] == OR:
            gadget = meta["or_gadget"][str(u)]
            # inc is ascending for OR vertices, so the first inward
            # position is the lowest-index inward edge.
            pick = next(i for i, e in enumerate(inc) if sigma.inward(e, u))
            ids.add(gadget["edge_ids"][pick])
        else:
            gadget = meta["and_gadget"][str(u)]
            block = gadget["edge_ids"]
            if sigma.inward(inc[0], u):
                keep = (0, 2, 3, 4, 5)
            else:
                keep = (1, 2, 4, 5, 6)
            ids.update(block[i] for i in keep)
    return ids


def tree_of_orientation(inst: RSTInstance, sigma: NCLOrientation) -> SpanningTree:
    """The canonical bounded-degree spanning tree encoding a configuration.

    Takes the connector and all pendant edges, one edge-gadget edge per
    source edge (pointing away from the head), a hub spoke per OR
    vertex (toward the lowest-index inward edge), and a five-edge
    selection per AND block depending on whether the weight-2 edge is
    inward.

    Raises:
        ValueError: if the orientation is not a valid configuration.
    """
    h = ncl_of_instance(inst)
    if not validate_ncl(h, sigma):
        raise ValueError("orientation is not a valid configuration")
    return SpanningTree(inst.g, _encoding_ids(inst.meta, h, sigma))


def orientation_of_tree(inst: RSTInstance, t: SpanningTree) -> NCLOrientation:
    """The configuration encoded by a bounded-degree spanning tree.

    A source edge points into the endpoint whose incidence vertex is
    cut off from the edge's middle vertex in the tree.

    Raises:
        ValueError: if the tree does not contain exactly one gadget edge
            per source edge (impossible for bounded-degree trees).
    """
    h = ncl_of_instance(inst)
    heads: list[int] = []
    for e, (u, v, _) in enumerate(h.edges):
        id_u, id_v = inst.meta["edge_gadget_ids"][e]
        has_u = id_u in t.edge_ids
        has_v = id_v in t.edge_ids
        if has_u == has_v:
            raise ValueError(
                f"tree holds {int(has_u) + int(has_v)} gadget edges for edge {e}"
            )
        # Keeping the edge toward v's incidence vertex means the edge
        # points into u.
        heads.append(u if has_v else v)
    return NCLOrientation(h, heads)


def _differing_edge(
    h: NCLGraph, s1: NCLOrientation, s2: NCLOrientation
) -> int | None:
    """Index of the single differing edge, or None when equal."""
    diff = [e for e in range(h.m) if s1.heads[e] != s2.heads[e]]
    if not diff:
        return None
    if len(diff) > 1:
        raise ValueError("orientations differ in more than one edge")
    return diff[0]


def ncl_step_sequence(
    inst: RSTInstance, t1: SpanningTree, t2: SpanningTree
) -> ReconfSequence:
    """Degree-bounded flip sequence between trees of adjacent configurations.

    Works gadget by gadget: while the trees differ in more than one
    edge, finds a source vertex whose gadget edges disagree and applies
    the one flip that aligns it, picking the side to modify so the
    local swap cannot overload a vertex (the side for which the flipped
    source edge is already inward, when that matters).  Each flip
    shrinks the difference by one.

    Parameters:
        inst: a reduced constraint-logic instance.
        t1, t2: bounded-degree spanning trees whose configurations are
            equal or differ in one edge reversal.

    Returns:
        A validated flip sequence from t1 to t2 under the degree bound.

    Raises:
        ValueError: if the configurations differ in more than one edge.
    """
    h = ncl_of_instance(inst)
    meta = inst.meta
    constraint = Constraint.max_deg_le(inst.d)
    left = [t1]
    right = [t2]
    while True:
        a, b = left[-1], right[-1]
        diff_ab = a.edge_ids - b.edge_ids
        if len(diff_ab) <= 1:
            break
        s1 = orientation_of_tree(inst, a)
        s2 = orientation_of_tree(inst, b)
        e_star = _differing_edge(h, s1, s2)
        hit = None
        for u in range(h.n):
            if h.kinds[u] == OR:
                gadget_ids = set(meta["or_gadget"][str(u)]["edge_ids"])
            else:
                gadget_ids = set(meta["and_gadget"][str(u)]["edge_ids"])
            if diff_ab & gadget_ids:
                hit = (u, gadget_ids)
                break
        assert hit is not None, "trees differ outside all gadgets"
        u, gadget_ids = hit
        inc = h.ordered_incidence(u)
        prefer_a = (
            e_star is None
            or e_star not in inc
            or s1.inward(e_star, u)
        )
        if h.kinds[u] == OR or len(diff_ab & gadget_ids) == 1:
            # Single-edge alignment on whichever side is safe.
            out_a = min(diff_ab & gadget_ids)
            out_b = min((b.edge_ids - a.edge_ids) & gadget_ids)
            if prefer_a:
                left.append(
                    SpanningTree(inst.g, (a.edge_ids - {out_a}) | {out_b})
                )
            else:
                right.append(
                    SpanningTree(inst.g, (b.edge_ids - {out_b}) | {out_a})
                )
            continue
        # AND block with both a hub-edge and a block-edge disagreement.
        block = meta["and_gadget"][str(u)]["edge_ids"]
        hub_e0, hub_w = block[0], block[1]
        first = a if hub_e0 in a.edge_ids else b
        second = b if first is a else a
        assert hub_e0 in first.edge_ids and hub_w in second.edge_ids
        sigma_second = s2 if second is b else s1
        if sigma_second.inward(inc[0], u):
            new_ids = (second.edge_ids - {hub_w}) | {hub_e0}
            if second is b:
                right.append(SpanningTree(inst.g, new_ids))
            else:
                left.append(SpanningTree(inst.g, new_ids))
        else:
            rest = set(block[2:])
            drop = min((first.edge_ids - second.edge_ids) & rest)
            take = min((second.edge_ids - first.edge_ids) & rest)
            new_ids = (first.edge_ids - {drop}) | {take}
            if first is a:
                left.append(SpanningTree(inst.g, new_ids))
            else:
                right.append(SpanningTree(inst.g, new_ids))

    if left[-1].edge_ids == right[-1].edge_ids:
        trees = left + right[-2::-1]
    else:
        trees = left + right[::-1]
    steps = []
    for prev, cur in zip(trees, trees[1:]):
        remove = min(prev.edge_ids - cur.edge_ids)
        add = min(cur.edge_ids - prev.edge_ids)
        steps.append((remove, add))
    seq = ReconfSequence(trees, steps, constraint)
    ok, reason = validate_sequence(seq)
    assert ok, f"internal: gadget step sequence invalid: {reason}"
    return seq


def hampath_to_rst(g_prime: Graph, s: int, t: int) -> RSTInstance:
    """Reduce Hamiltonian path to diameter-lower-bounded flips.

    Attaches a diamond block (three new vertices on four triangle-ish
    edges plus the source endpoint t), a long tail path at s, a long
    tail path behind the diamond, and a short bridge path from s to t.
    Every spanning tree's diameter is realized between the two tail
    tips, and the bound 7n' + 1 is met initially; rewiring the diamond
    without dropping below the bound forces a Hamiltonian s-t path.

    Parameters:
        g_prime: the source graph, connected, at least 3 vertices.
        s, t: distinct vertices of g_prime.

    Returns:
        The reduced instance; vertices 0..n'-1 of the host are the
        source vertices, metadata names the rest.

    Raises:
        ValueError: for out-of-range or equal endpoints, a disconnected
            source, fewer than 3 vertices, or the 3-vertex case where
            the bridge path would duplicate an existing s-t edge.
    """
    np = g_prime.n
    if not (0 <= s < np and 0 <= t < np) or s == t:
        raise ValueError("endpoints must be two distinct source vertices")
    if np < 3:
        raise ValueError("the construction needs at least 3 source vertices")
    if not g_prime.is_connected():
        raise ValueError("source graph must be connected (otherwise trivially NO)")
    if np == 3 and g_prime.has_edge(s, t):
        raise ValueError(
            "with 3 source vertices the bridge path would duplicate the s-t edge"
        )
    d = 7 * np + 1

    names: dict[int, str] = {}
    t1, t2, t3 = np, np + 1, np + 2
    names[t1], names[t2], names[t3] = "t1", "t2", "t3"
    x = [np + 2 + i for i in range(1, 3 * np + 1)]
    for i, vid in enumerate(x, 1):
        names[vid] = f"x({i})"
    y = [x[-1] + i for i in range(1, np - 2)]
    for i, vid in enumerate(y, 1):
        names[vid] = f"y({i})"
    z = [(y[-1] if y else x[-1]) + i for i in range(1, 3 * np + 1)]
    for i, vid in enumerate(z, 1):
        names[vid] = f"z({i})"
    n_total = z[-1] + 1
    assert n_total == 8 * np

    edges: list[tuple[int, int]] = list(
        g_prime.edge(eid) for eid in g_prime.edge_ids()
    )
    gprime_ids = list(range(1, g_prime.m + 1))

    def add_edge(a: int, bb: int) -> int:
        edges.append((a, bb))
        return len(edges)

    diamond_ids = [
        add_edge(t, t1),
        add_edge(t, t2),
        add_edge(t1, t2),
        add_edge(t1, t3),
        add_edge(t2, t3),
    ]
    px_ids = [add_edge(x[0], s)]
    px_ids.extend(add_edge(x[i], x[i - 1]) for i in range(1, len(x)))
    py_chain = [s] + y + [t]
    py_ids = [
        add_edge(py_chain[i], py_chain[i + 1]) for i in range(len(py_chain) - 1)
    ]
    pz_ids = [add_edge(t3, z[0])]
    pz_ids.extend(add_edge(z[i - 1], z[i]) for i in range(1, len(z)))

    g = Graph(n_total, edges)

    # Two-component spanning forest of the source graph separating s
    # from t: a search tree from s avoiding t, then one from t over the
    # remainder.
    comp_s = _bfs_tree_ids(g_prime, s, forbidden={t})
    in_s = _bfs_reach(g_prime, s, forbidden={t})
    comp_t = _bfs_tree_ids(g_prime, t, forbidden=in_s)
    forest_ids = sorted(comp_s | comp_t)

    ini_diamond = [diamond_ids[0], diamond_ids[2], diamond_ids[4]]
    tar_diamond = [diamond_ids[1], diamond_ids[2], diamond_ids[3]]
    base = set(px_ids) | set(py_ids) | set(pz_ids) | set(forest_ids)
    t_ini = SpanningTree(g, base | set(ini_diamond))
    t_tar = SpanningTree(g, base | set(tar_diamond))

    meta = {
        "kind": "hampath",
        "n_prime": np,
        "s": s,
        "t": t,
        "gprime_edge_ids": gprime_ids,
        "diamond_ids": diamond_ids,
        "px_ids": px_ids,
        "py_ids": py_ids,
        "pz_ids": pz_ids,
        "forest_ids": forest_ids,
        "x_tip": x[-1],
        "z_tip": z[-1],
        "ini_diamond": ini_diamond,
        "tar_diamond": tar_diamond,
        "names": {str(v): name for v, name in names.items()},
    }
    return RSTInstance(g, d, "diamGe", t_ini, t_tar, meta)


def _bfs_reach(g: Graph, root: int, forbidden: set[int]) -> set[int]:
    """Vertices reachable from root without entering forbidden ones."""
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for w, _ in g.incident(v):
            if w not in seen and w not in forbidden:
                seen.add(w)
                stack.append(w)
    return seen


def _bfs_tree_ids(g: Graph, root: int, forbidden: set[int]) -> set[int]:
    """Edge ids of a breadth-first tree from root avoiding forbidden vertices."""
    seen = {root}
    ids: set[int] = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, eid in g.incident(v):
            if w in seen or w in forbidden:
                continue
            seen.add(w)
            ids.add(eid)
            queue.append(w)
    return ids


def check_diameter_domination(inst: RSTInstance, t: SpanningTree) -> bool:
    """Whether the tree's diameter equals the distance between the tail tips.

    Holds for every spanning tree of a reduced Hamiltonian-path
    instance; used as a structural validator.
    """
    if inst.meta.get("kind") != "hampath":
        raise ValueError("instance does not carry Hamiltonian-path metadata")
    tip_x = Point.vertex(inst.meta["x_tip"])
    tip_z = inst.meta["z_tip"]
    dist = half_distances(inst.g, t.edge_ids, tip_x)
    return diameter_half(t) == dist[Point.vertex(tip_z)]


def hampath_certificate_sequence(
    inst: RSTInstance, path: Sequence[int]
) -> ReconfSequence:
    """Certificate flip sequence from a Hamiltonian s-t path.

    Builds the five milestone trees (break the path once, swap a bridge
    edge for the missing path edge, rewire the diamond twice, swap
    back) and connects the ends to the instance trees with shared-edge
    preserving walks; every tree keeps the two tail tips at distance at
    least the bound.

    Parameters:
        inst: a reduced Hamiltonian-path instance.
        path: a Hamiltonian s-t path of the source graph, as vertices.

    Returns:
        A validated flip sequence from t_ini to t_tar under the bound.

    Raises:
        ValueError: if the path is not a Hamiltonian s-t path.
    """
    if inst.meta.get("kind") != "hampath":
        raise ValueError("instance does not carry Hamiltonian-path metadata")
    meta = inst.meta
    np_, s, t = meta["n_prime"], meta["s"], meta["t"]
    if len(path) != np_ or sorted(path) != list(range(np_)):
        raise ValueError("path must visit each source vertex exactly once")
    if path[0] != s or path[-1] != t:
        raise ValueError("path must run from s to t")
    path_ids: list[int] = []
    for a, bb in zip(path, path[1:]):
        eid = inst.g.edge_id(a, bb)
        if eid is None or eid not in set(meta["gprime_edge_ids"]):
            raise ValueError(f"pair {a},{bb} is not a source edge")
        path_ids.append(eid)
    e_star = min(path_ids)
    e_y = min(meta["py_ids"])

    g = inst.g
    tails = set(meta["px_ids"]) | set(meta["py_ids"]) | set(meta["pz_ids"])
    ini_d = set(meta["ini_diamond"])
    tar_d = set(meta["tar_diamond"])
    pstar = set(path_ids)
    m1 = SpanningTree(g, tails | (pstar - {e_star}) | ini_d)
    m2 = SpanningTree(g, (tails - {e_y}) | pstar | ini_d)
    m3 = SpanningTree(
        g, (tails - {e_y}) | pstar | {meta["diamond_ids"][1],
                                      meta["diamond_ids"][2],
                                      meta["diamond_ids"][4]}
    )
    m4 = SpanningTree(g, (tails - {e_y}) | pstar | tar_d)
    m5 = SpanningTree(g, tails | (pstar - {e_star}) | tar_d)

    constraint = Constraint.diam_ge(inst.d)

    def retag(seq: ReconfSequence) -> ReconfSequence:
        return ReconfSequence(seq.trees, seq.steps, constraint)

    seq = retag(unconstrained_sequence(inst.t_ini, m1))
    for nxt in (m2, m3, m4, m5):
        prev = seq.last()
        remove = min(prev.edge_ids - nxt.edge_ids)
        add = min(nxt.edge_ids - prev.edge_ids)
        seq = seq.concat(ReconfSequence([prev, nxt], [(remove, add)], constraint))
    seq = seq.concat(retag(unconstrained_sequence(m5, inst.t_tar)))
    ok, reason = validate_sequence(seq)
    assert ok, f"internal: certificate sequence invalid: {reason}"
    return seq


def extract_hampath(inst: RSTInstance, seq: ReconfSequence) -> list[int]:
    """Recover a Hamiltonian path from a valid bounded-diameter sequence.

    Takes the first tree whose diamond edge set differs from the
    initial tree's; its unique s-t path then lies inside the source
    graph and visits every source vertex.

    Raises:
        ValueError: if no tree changes the diamond, or the recovered
            path is not a Hamiltonian s-t path (the sequence was not a
            valid bounded-diameter sequence of this instance).
    """
    if inst.meta.get("kind") != "hampath":
        raise ValueError("instance does not carry Hamiltonian-path metadata")
    meta = inst.meta
    diamond = set(meta["diamond_ids"])
    ini_d = frozenset(meta["ini_diamond"])
    witness = None
    for tree in seq.trees:
        if frozenset(tree.edge_ids & diamond) != ini_d:
            witness = tree
            break
    if witness is None:
        raise ValueError("no tree in the sequence rewires the diamond block")
    s, t, np_ = meta["s"], meta["t"], meta["n_prime"]
    verts, eids = tree_path(witness, s, t)
    gprime_ids = set(meta["gprime_edge_ids"])
    if len(verts) != np_ or sorted(verts) != list(range(np_)):
        raise ValueError("recovered path does not visit each source vertex once")
    if not all(eid in gprime_ids for eid in eids):
        raise ValueError("recovered path leaves the source graph")
    return verts
