"""
Reconfiguration sequences of spanning trees.

A sequence is a list of spanning trees in which consecutive trees differ by
one edge flip, annotated with the constraint every intermediate tree must
satisfy.  Constraints are bounds on maximum degree or diameter; ``none``
means flips only.  Sequences serialize to a small JSON document that records
the host graph size, the constraint, and the per-step flips.
"""

from __future__ import annotations

import json
from typing import Iterable

from .graph import Graph, SpanningTree, fundamental_cycle, validate_spanning_tree


# Constraint kinds.  The d bound is carried next to the kind.
CONSTRAINT_NONE = "none"
CONSTRAINT_MAX_DEG_LE = "maxDegLe"
CONSTRAINT_MAX_DEG_GE = "maxDegGe"
CONSTRAINT_DIAM_LE = "diamLe"
CONSTRAINT_DIAM_GE = "diamGe"

_CONSTRAINT_KINDS = (
    CONSTRAINT_NONE,
    CONSTRAINT_MAX_DEG_LE,
    CONSTRAINT_MAX_DEG_GE,
    CONSTRAINT_DIAM_LE,
    CONSTRAINT_DIAM_GE,
)


class Constraint:
    """A per-tree requirement: none, maxDeg <=/>= d, or diameter <=/>= d.

    Degree bounds compare the tree's maximum degree with d; diameter bounds
    compare the tree's diameter measured in half-integral units (see
    ``distances.diameter_half``) with d — the stored bound is in plain edge
    units and is doubled internally for the comparison.
    """

    __slots__ = ("kind", "d")

    def __init__(self, kind: str, d: int | None = None) -> None:
        if kind not in _CONSTRAINT_KINDS:
            raise ValueError(f"unknown constraint kind {kind!r}")
        if kind == CONSTRAINT_NONE:
            if d is not None:
                raise ValueError("constraint 'none' takes no bound")
        else:
            if d is None or d < 0:
                raise ValueError(f"constraint {kind} needs a bound d >= 0")
        self.kind = kind
        self.d = d

    def holds(self, t: SpanningTree) -> bool:
        """Whether the tree satisfies this constraint."""
        if self.kind == CONSTRAINT_NONE:
            return True
        if self.kind == CONSTRAINT_MAX_DEG_LE:
            return t.max_degree() <= self.d
        if self.kind == CONSTRAINT_MAX_DEG_GE:
            return t.max_degree() >= self.d
        from .distances import diameter_half

        diam2 = diameter_half(t)
        if self.kind == CONSTRAINT_DIAM_LE:
            return diam2 <= 2 * self.d
        return diam2 >= 2 * self.d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Constraint):
            return NotImplemented
        return self.kind == other.kind and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.kind, self.d))

    def __repr__(self) -> str:
        if self.kind == CONSTRAINT_NONE:
            return "Constraint(none)"
        return f"Constraint({self.kind} {self.d})"

    @staticmethod
    def none() -> "Constraint":
        return Constraint(CONSTRAINT_NONE)

    @staticmethod
    def max_deg_le(d: int) -> "Constraint":
        return Constraint(CONSTRAINT_MAX_DEG_LE, d)

    @staticmethod
    def max_deg_ge(d: int) -> "Constraint":
        return Constraint(CONSTRAINT_MAX_DEG_GE, d)

    @staticmethod
    def diam_le(d: int) -> "Constraint":
        return Constraint(CONSTRAINT_DIAM_LE, d)

    @staticmethod
    def diam_ge(d: int) -> "Constraint":
        return Constraint(CONSTRAINT_DIAM_GE, d)


class ReconfSequence:
    """A flip sequence of spanning trees under a constraint.

    Attributes:
        trees: the trees in order (length k+1 for k flips).
        steps: per flip, the (removed edge id, added edge id) pair.
        constraint: the requirement every tree in the sequence must meet.
    """

    __slots__ = ("trees", "steps", "constraint")

    def __init__(
        self,
        trees: Iterable[SpanningTree],
        steps: Iterable[tuple[int, int]],
        constraint: Constraint,
    ) -> None:
        self.trees = list(trees)
        self.steps = [(int(r), int(a)) for r, a in steps]
        self.constraint = constraint
        if not self.trees:
            raise ValueError("sequence needs at least one tree")
        if len(self.steps) != len(self.trees) - 1:
            raise ValueError(
                f"{len(self.trees)} trees need {len(self.trees) - 1} steps,"
                f" got {len(self.steps)}"
            )

    def __len__(self) -> int:
        """Number of flips (not trees)."""
        return len(self.steps)

    def first(self) -> SpanningTree:
        return self.trees[0]

    def last(self) -> SpanningTree:
        return self.trees[-1]

    def reversed(self) -> "ReconfSequence":
        """The same transformation walked backwards."""
        rev_trees = list(reversed(self.trees))
        rev_steps = [(a, r) for r, a in reversed(self.steps)]
        return ReconfSequence(rev_trees, rev_steps, self.constraint)

    def concat(self, other: "ReconfSequence") -> "ReconfSequence":
        """Join two sequences whose endpoint trees coincide."""
        if self.trees[-1].edge_ids != other.trees[0].edge_ids:
            raise ValueError("sequences do not share the junction tree")
        if self.constraint != other.constraint:
            raise ValueError("sequences carry different constraints")
        return ReconfSequence(
            self.trees + other.trees[1:],
            self.steps + other.steps,
            self.constraint,
        )

    def to_json(self) -> str:
        """Serialize to the sequence JSON document."""
        g = self.trees[0].host
        entries: list[dict] = [
            {"remove": None, "add": None, "edges": sorted(self.trees[0].edge_ids)}
        ]
        for (r, a), t in zip(self.steps, self.trees[1:]):
            entries.append({"remove": r, "add": a, "edges": sorted(t.edge_ids)})
        doc = {
            "n": g.n,
            "m": g.m,
            "constraint": {"kind": self.constraint.kind, "d": self.constraint.d},
            "trees": entries,
        }
        return json.dumps(doc, indent=2) + "\n"

    @staticmethod
    def from_json(g: Graph, text: str) -> "ReconfSequence":
        """Parse the sequence JSON document against a host graph."""
        doc = json.loads(text)
        if doc.get("n") != g.n or doc.get("m") != g.m:
            raise ValueError("sequence JSON does not match the host graph size")
        cons = doc.get("constraint", {})
        constraint = Constraint(cons.get("kind", CONSTRAINT_NONE), cons.get("d"))
        trees: list[SpanningTree] = []
        steps: list[tuple[int, int]] = []
        for i, entry in enumerate(doc.get("trees", [])):
            trees.append(SpanningTree(g, entry["edges"]))
            if i > 0:
                steps.append((entry["remove"], entry["add"]))
        return ReconfSequence(trees, steps, constraint)

    def __repr__(self) -> str:
        return f"ReconfSequence({len(self.steps)} flips, {self.constraint!r})"


def validate_sequence(seq: ReconfSequence) -> tuple[bool, str]:
    """Check a sequence end to end.

    Verifies that every element is a spanning tree of the shared host, that
    consecutive trees realize the recorded flip, and that every tree meets
    the constraint.  Returns (ok, reason); reason is "" when ok.
    """
    host = seq.trees[0].host
    for i, t in enumerate(seq.trees):
        if t.host is not host:
            return False, f"tree {i} lives on a different host graph"
        if not validate_spanning_tree(host, t.edge_ids):
            return False, f"tree {i} is not a spanning tree"
    for i, (r, a) in enumerate(seq.steps):
        before, after = seq.trees[i], seq.trees[i + 1]
        if r not in before.edge_ids:
            return False, f"step {i} removes edge {r} not present in tree {i}"
        if a in before.edge_ids:
            return False, f"step {i} adds edge {a} already present in tree {i}"
        expected = (before.edge_ids - {r}) | {a}
        if after.edge_ids != expected:
            return False, f"tree {i + 1} does not match the step {i} flip"
    for i, t in enumerate(seq.trees):
        if not seq.constraint.holds(t):
            return False, f"tree {i} violates {seq.constraint!r}"
    return True, ""


def unconstrained_sequence(t_from: SpanningTree, t_to: SpanningTree) -> ReconfSequence:
    """A shortest flip sequence between two trees with no constraint.

    At every step an edge of the target missing from the current tree is
    inserted and an edge of the created cycle outside the target removed, so
    shared edges are never touched and the length is exactly the number of
    edges of ``t_from`` outside ``t_to``.  Deterministic: of the candidate
    insertions the one with the smallest id is taken, likewise the removal.
    """
    if t_from.host is not t_to.host:
        raise ValueError("trees live on different host graphs")
    trees = [t_from]
    steps: list[tuple[int, int]] = []
    cur = t_from
    while cur.edge_ids != t_to.edge_ids:
        add = min(t_to.edge_ids - cur.edge_ids)
        cycle = fundamental_cycle(cur, add)
        remove = min(e for e in cycle if e not in t_to.edge_ids)
        new_ids = (cur.edge_ids - {remove}) | {add}
        cur = SpanningTree(cur.host, new_ids, _checked=True)
        trees.append(cur)
        steps.append((remove, add))
    return ReconfSequence(trees, steps, Constraint.none())
