"""
Command-line front end: the ``rst`` tool.

Subcommands:
    decide     polynomial decision: max-deg-ge and diam-le exactly, and
               max-deg-le in its relaxed regime (one endpoint with a unit
               of slack); diam-ge is referred to ``rst oracle``.
    sequence   same dispatch as decide, but emits the step-by-step flip
               sequence as a JSON document.
    verify     recheck a sequence document against a host graph, optional
               endpoint trees, and an optional declared constraint.
    oracle     exhaustive decision/sequence for any constraint kind, by
               breadth-first search over all bounded spanning trees.
    gen-ncl    compile a constraint-logic graph plus two orientations into
               a degree-bounded reconfiguration instance bundle.
    gen-ham    compile a Hamiltonian-path question into a diameter-bounded
               reconfiguration instance bundle.
    auxgraph   build an auxiliary graph (degree hubs or center points) and
               export it in DOT format, optionally with a worker pool.

Exit codes: 0 for YES/valid/success, 1 for NO/invalid, 2 for usage or
precondition errors.  All output is deterministic for a given input; in
particular ``auxgraph --jobs N`` produces byte-identical DOT for every N.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .degree import (
    decide_large_max_degree,
    degree_aux_edge,
    relaxed_small_degree_sequence,
    sequence_large_max_degree,
)
from .diameter import (
    build_cyclic_search,
    decide_small_diameter,
    find_good_cyclic_pseudotree,
    find_good_tree,
    sequence_small_diameter,
)
from .graph import (
    Graph,
    Point,
    SpanningTree,
    load_graph,
    load_tree,
    point_sort_key,
    save_text,
)
from .oracle import DEFAULT_CAP, CapExceeded, oracle_decide
from .reductions import (
    hampath_to_rst,
    ncl_to_rst,
    parse_ncl,
    parse_orientation,
    save_instance,
)
from .sequence import (
    CONSTRAINT_DIAM_GE,
    CONSTRAINT_DIAM_LE,
    CONSTRAINT_MAX_DEG_GE,
    CONSTRAINT_MAX_DEG_LE,
    Constraint,
    ReconfSequence,
    validate_sequence,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2

_KIND_BY_FLAG = {
    "max-deg-le": CONSTRAINT_MAX_DEG_LE,
    "max-deg-ge": CONSTRAINT_MAX_DEG_GE,
    "diam-le": CONSTRAINT_DIAM_LE,
    "diam-ge": CONSTRAINT_DIAM_GE,
}

_FACTORY_BY_FLAG = {
    "max-deg-le": Constraint.max_deg_le,
    "max-deg-ge": Constraint.max_deg_ge,
    "diam-le": Constraint.diam_le,
    "diam-ge": Constraint.diam_ge,
}


class UsageError(Exception):
    """A bad invocation or failed precondition; maps to exit code 2."""


def _load_pair(
    args: argparse.Namespace,
) -> tuple[Graph, SpanningTree, SpanningTree]:
    """Load the host graph and the two endpoint trees named by the flags."""
    g = load_graph(args.graph)
    t_ini = load_tree(g, args.t_from)
    t_tar = load_tree(g, args.t_to)
    return g, t_ini, t_tar


def _check_relaxed_flag(args: argparse.Namespace) -> None:
    """Reject --relaxed on constraints other than max-deg-le."""
    if getattr(args, "relaxed", False) and args.constraint != "max-deg-le":
        raise UsageError("--relaxed only applies to --constraint max-deg-le")


def _relaxed_precondition(d: int, t_ini: SpanningTree, t_tar: SpanningTree) -> None:
    """Raise UsageError unless the relaxed degree regime applies."""
    if t_ini.max_degree() > d or t_tar.max_degree() > d:
        raise UsageError(
            f"both endpoint trees must have max degree <= {d};"
            " for out-of-regime instances use 'rst oracle decide'"
        )
    if t_ini.max_degree() > d - 1 and t_tar.max_degree() > d - 1:
        raise UsageError(
            f"max-deg-le needs one endpoint tree of max degree <= {d - 1}"
            " (the relaxed regime); for the exact tight problem use"
            " 'rst oracle decide'"
        )


def cmd_decide(args: argparse.Namespace) -> int:
    """Decide reconfigurability; print YES or NO.

    Dispatch: max-deg-ge and diam-le run their exact polynomial deciders;
    max-deg-le runs in the relaxed regime (always YES once the regime's
    precondition holds); diam-ge has no polynomial decider here and is
    referred to the oracle.
    """
    _check_relaxed_flag(args)
    if args.constraint == "diam-ge":
        raise UsageError(
            "no polynomial decision procedure for diam-ge;"
            " use 'rst oracle decide' on small instances"
        )
    g, t_ini, t_tar = _load_pair(args)
    if args.constraint == "max-deg-ge":
        answer = decide_large_max_degree(g, args.d, t_ini, t_tar)
    elif args.constraint == "diam-le":
        answer = decide_small_diameter(g, args.d, t_ini, t_tar)
    else:  # max-deg-le, relaxed regime
        _relaxed_precondition(args.d, t_ini, t_tar)
        answer = True
    print("YES" if answer else "NO")
    return EXIT_YES if answer else EXIT_NO


def _emit_sequence(seq: ReconfSequence, out: str | None) -> None:
    """Write a sequence document to a file, or to stdout when out is None."""
    text = seq.to_json()
    if out is None:
        sys.stdout.write(text)
    else:
        save_text(out, text)
        print(f"YES: {len(seq.steps)} flips -> {out}")


def cmd_sequence(args: argparse.Namespace) -> int:
    """Construct a reconfiguration sequence; emit it as JSON.

    Same dispatch as decide.  On YES the document goes to --out (stdout if
    omitted) and the exit code is 0; on NO a single NO line is printed and
    the exit code is 1.
    """
    _check_relaxed_flag(args)
    if args.constraint == "diam-ge":
        raise UsageError(
            "no polynomial sequence procedure for diam-ge;"
            " use 'rst oracle sequence' on small instances"
        )
    g, t_ini, t_tar = _load_pair(args)
    seq: ReconfSequence | None
    if args.constraint == "max-deg-ge":
        seq = sequence_large_max_degree(g, args.d, t_ini, t_tar)
    elif args.constraint == "diam-le":
        seq = sequence_small_diameter(g, args.d, t_ini, t_tar)
    else:  # max-deg-le, relaxed regime
        _relaxed_precondition(args.d, t_ini, t_tar)
        if t_ini.edge_ids == t_tar.edge_ids:
            seq = ReconfSequence([t_ini], [], Constraint.max_deg_le(args.d))
        else:
            seq = relaxed_small_degree_sequence(g, args.d, t_ini, t_tar)
    if seq is None:
        print("NO")
        return EXIT_NO
    _emit_sequence(seq, args.out)
    return EXIT_YES


def cmd_verify(args: argparse.Namespace) -> int:
    """Recheck a sequence document; print OK or INVALID.

    Validates the internal structure (spanning trees, single flips, the
    declared constraint on every tree) and, when the corresponding flags
    are given, the endpoint trees and the declared constraint kind/bound.
    """
    g = load_graph(args.graph)
    try:
        with open(args.sequence, "r", encoding="ascii") as fh:
            seq = ReconfSequence.from_json(g, fh.read())
    except ValueError as exc:
        raise UsageError(f"cannot parse sequence document: {exc}") from exc
    ok, reason = validate_sequence(seq)
    if ok and args.t_from is not None:
        t_ini = load_tree(g, args.t_from)
        if seq.trees[0].edge_ids != t_ini.edge_ids:
            ok, reason = False, "first tree differs from --from"
    if ok and args.t_to is not None:
        t_tar = load_tree(g, args.t_to)
        if seq.trees[-1].edge_ids != t_tar.edge_ids:
            ok, reason = False, "last tree differs from --to"
    if ok and args.constraint is not None:
        want = _FACTORY_BY_FLAG[args.constraint](args.d)
        if seq.constraint != want:
            ok = False
            reason = (
                f"declared constraint {seq.constraint.kind} d={seq.constraint.d}"
                f" differs from requested {want.kind} d={want.d}"
            )
    if ok:
        print(f"OK: {len(seq.steps)} flips under {seq.constraint.kind}")
        return EXIT_YES
    print(f"INVALID: {reason}")
    return EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    """Exhaustive decision or sequence for any constraint kind.

    Enumerates every spanning tree satisfying the constraint (up to --cap)
    and searches the flip graph breadth-first, so answers are exact and
    sequences are shortest, at exponential cost.
    """
    g, t_ini, t_tar = _load_pair(args)
    constraint = _FACTORY_BY_FLAG[args.constraint](args.d)
    answer, seq = oracle_decide(g, constraint, t_ini, t_tar, cap=args.cap)
    if args.oracle_cmd == "decide":
        print("YES" if answer else "NO")
        return EXIT_YES if answer else EXIT_NO
    if seq is None:
        print("NO")
        return EXIT_NO
    _emit_sequence(seq, args.out)
    return EXIT_YES


def cmd_gen_ncl(args: argparse.Namespace) -> int:
    """Compile a constraint-logic graph into an instance bundle.

    Reads the AND/OR graph from --graph and one orientation file each from
    --from and --to, builds the degree-bounded instance, and writes the
    bundle (graph.txt, t_ini.txt, t_tar.txt, instance.json) to --out.
    """
    with open(args.graph, "r", encoding="ascii") as fh:
        h = parse_ncl(fh.read())
    with open(args.t_from, "r", encoding="ascii") as fh:
        sigma_ini = parse_orientation(h, fh.read())
    with open(args.t_to, "r", encoding="ascii") as fh:
        sigma_tar = parse_orientation(h, fh.read())
    inst = ncl_to_rst(h, sigma_ini, sigma_tar, d=args.d)
    save_instance(inst, args.out)
    print(
        f"wrote {args.out}: n={inst.g.n} m={inst.g.m}"
        f" {inst.kind} d={inst.d}"
    )
    return EXIT_YES


def cmd_gen_ham(args: argparse.Namespace) -> int:
    """Compile a Hamiltonian-path question into an instance bundle.

    Reads a connected source graph from --graph and the two endpoint
    vertices from --from and --to, builds the diameter-bounded instance,
    and writes the bundle to --out.
    """
    g_prime = load_graph(args.graph)
    inst = hampath_to_rst(g_prime, args.t_from, args.t_to)
    save_instance(inst, args.out)
    print(
        f"wrote {args.out}: n={inst.g.n} m={inst.g.m}"
        f" {inst.kind} d={inst.d}"
    )
    return EXIT_YES


# Worker-pool state for auxgraph; populated per process by _aux_pool_init.
_POOL_STATE: dict = {}


def _aux_pool_init(n: int, edges: Sequence[tuple[int, int]], d: int, kind: str) -> None:
    """Initializer: rebuild the host graph (and searches) in each worker."""
    g = Graph(n, list(edges))
    _POOL_STATE["g"] = g
    _POOL_STATE["d"] = d
    if kind == CONSTRAINT_DIAM_LE:
        _POOL_STATE["search"] = build_cyclic_search(g)


def _degree_pair_task(pair: tuple[int, int]) -> bool:
    """Whether a vertex pair is an edge of the degree auxiliary graph."""
    g, d = _POOL_STATE["g"], _POOL_STATE["d"]
    return degree_aux_edge(g, d, pair[0], pair[1])


def _center_pair_task(pair: tuple[Point, Point]) -> list[int] | None:
    """Sorted edge ids of a witness subgraph for a point pair, or None."""
    g, d = _POOL_STATE["g"], _POOL_STATE["d"]
    tree = find_good_tree(g, d, pair[0], pair[1])
    if tree is not None:
        return sorted(tree.edge_ids)
    cyc = find_good_cyclic_pseudotree(g, d, pair[0], pair[1], search=_POOL_STATE["search"])
    if cyc is not None:
        return sorted(cyc.edge_ids)
    return None


def _pool_map(task, pairs: list, args: argparse.Namespace, kind: str, g: Graph) -> list:
    """Map a pair task over all pairs, in order, honoring --jobs.

    With --jobs 1 the task runs in-process; otherwise a process pool runs
    it with an initializer that rebuilds the host per worker.  Results come
    back in submission order either way, so downstream output is identical
    for every job count.
    """
    edges = [g.edge(e) for e in g.edge_ids()]
    if args.jobs <= 1:
        _aux_pool_init(g.n, edges, args.d, kind)
        return [task(p) for p in pairs]
    chunk = max(1, len(pairs) // (args.jobs * 4))
    with ProcessPoolExecutor(
        max_workers=args.jobs,
        initializer=_aux_pool_init,
        initargs=(g.n, edges, args.d, kind),
    ) as pool:
        return list(pool.map(task, pairs, chunksize=chunk))


def _degree_aux_dot(
    g: Graph, d: int, present: Iterable[bool], pairs: list
) -> tuple[str, int]:
    """DOT text for the degree auxiliary graph, plus its edge count."""
    lines = [
        "graph degree_aux {",
        f'  label="max-deg-ge d={d}";',
        "  node [shape=circle];",
    ]
    for v in range(g.n):
        lines.append(f"  {v};")
    n_edges = 0
    for (u, v), keep in zip(pairs, present):
        if keep:
            lines.append(f"  {u} -- {v};")
            n_edges += 1
    lines.append("}")
    return "\n".join(lines) + "\n", n_edges


def _point_dot_id(p: Point) -> str:
    """Stable DOT node id for a point: v<i> for vertices, m<e> for midpoints."""
    return f"{p.kind}{p.index}"


def _center_aux_dot(
    g: Graph, d: int, witnesses: Iterable[list[int] | None], pairs: list
) -> tuple[str, int]:
    """DOT text for the center auxiliary graph, plus its edge count.

    Midpoint nodes are drawn as diamonds; each edge carries the sorted
    edge ids of its witness subgraph as a label.
    """
    lines = [
        "graph center_aux {",
        f'  label="diam-le d={d}";',
    ]
    for p in sorted(g.all_points(), key=point_sort_key):
        shape = "circle" if p.is_vertex() else "diamond"
        lines.append(f'  {_point_dot_id(p)} [shape={shape}];')
    n_edges = 0
    for (p, q), ids in zip(pairs, witnesses):
        if ids is None:
            continue
        label = " ".join(str(e) for e in ids)
        lines.append(
            f'  {_point_dot_id(p)} -- {_point_dot_id(q)} [label="{label}"];'
        )
        n_edges += 1
    lines.append("}")
    return "\n".join(lines) + "\n", n_edges


def cmd_auxgraph(args: argparse.Namespace) -> int:
    """Build an auxiliary graph and export it as DOT.

    For max-deg-ge the nodes are the host vertices and the edges are the
    hub pairs; for diam-le the nodes are all points (vertices and edge
    midpoints) and each edge is annotated with its witness subgraph.  The
    per-pair checks fan out over --jobs workers; output is independent of
    the job count.
    """
    g = load_graph(args.graph)
    kind = _KIND_BY_FLAG[args.constraint]
    if args.constraint == "max-deg-ge":
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
        present = _pool_map(_degree_pair_task, pairs, args, kind, g)
        text, n_edges = _degree_aux_dot(g, args.d, present, pairs)
        n_nodes = g.n
    else:  # diam-le
        points = sorted(g.all_points(), key=point_sort_key)
        pairs = [
            (points[i], points[j])
            for i in range(len(points))
            for j in range(i + 1, len(points))
        ]
        witnesses = _pool_map(_center_pair_task, pairs, args, kind, g)
        text, n_edges = _center_aux_dot(g, args.d, witnesses, pairs)
        n_nodes = len(points)
    if args.dot is None:
        sys.stdout.write(text)
    else:
        save_text(args.dot, text)
        print(f"wrote {args.dot}: {n_nodes} nodes, {n_edges} edges")
    return EXIT_YES


def _add_pair_flags(p: argparse.ArgumentParser, constraints: list[str]) -> None:
    """The shared --graph/--from/--to/--constraint/--d flag block."""
    p.add_argument("--graph", required=True, help="host graph file")
    p.add_argument(
        "--from", dest="t_from", required=True, help="initial tree file"
    )
    p.add_argument("--to", dest="t_to", required=True, help="target tree file")
    p.add_argument(
        "--constraint", required=True, choices=constraints, help="constraint kind"
    )
    p.add_argument("--d", type=int, required=True, help="the bound d")


def build_parser() -> argparse.ArgumentParser:
    """The full argument parser for the rst tool."""
    parser = argparse.ArgumentParser(
        prog="rst",
        description="Spanning-tree reconfiguration under degree and diameter bounds.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)
    all_kinds = ["max-deg-le", "max-deg-ge", "diam-le", "diam-ge"]

    p = sub.add_parser("decide", help="polynomial decision (YES/NO)")
    _add_pair_flags(p, all_kinds)
    p.add_argument(
        "--relaxed",
        action="store_true",
        help="acknowledge the relaxed max-deg-le regime (optional marker)",
    )
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("sequence", help="construct a flip sequence (JSON)")
    _add_pair_flags(p, all_kinds)
    p.add_argument("--relaxed", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--out", help="output file (stdout if omitted)")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="recheck a sequence document")
    p.add_argument("sequence", help="sequence JSON file")
    p.add_argument("--graph", required=True, help="host graph file")
    p.add_argument("--from", dest="t_from", help="expected initial tree file")
    p.add_argument("--to", dest="t_to", help="expected target tree file")
    p.add_argument(
        "--constraint", choices=all_kinds, help="expected constraint kind"
    )
    p.add_argument("--d", type=int, help="expected bound (with --constraint)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search (small hosts)")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    for name, help_text in (
        ("decide", "exhaustive decision (YES/NO)"),
        ("sequence", "exhaustive shortest sequence (JSON)"),
    ):
        q = osub.add_parser(name, help=help_text)
        _add_pair_flags(q, all_kinds)
        q.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_CAP,
            help=f"enumeration cap (default {DEFAULT_CAP})",
        )
        if name == "sequence":
            q.add_argument("--out", help="output file (stdout if omitted)")
        q.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen-ncl", help="compile a constraint-logic instance")
    p.add_argument("--graph", required=True, help="AND/OR constraint graph file")
    p.add_argument(
        "--from", dest="t_from", required=True, help="initial orientation file"
    )
    p.add_argument(
        "--to", dest="t_to", required=True, help="target orientation file"
    )
    p.add_argument("--d", type=int, default=3, help="degree bound (default 3)")
    p.add_argument("--out", required=True, help="output bundle directory")
    p.set_defaults(func=cmd_gen_ncl)

    p = sub.add_parser("gen-ham", help="compile a Hamiltonian-path instance")
    p.add_argument("--graph", required=True, help="source graph file")
    p.add_argument(
        "--from", dest="t_from", type=int, required=True, help="path start vertex"
    )
    p.add_argument(
        "--to", dest="t_to", type=int, required=True, help="path end vertex"
    )
    p.add_argument("--out", required=True, help="output bundle directory")
    p.set_defaults(func=cmd_gen_ham)

    p = sub.add_parser("auxgraph", help="export an auxiliary graph as DOT")
    p.add_argument("--graph", required=True, help="host graph file")
    p.add_argument(
        "--constraint",
        required=True,
        choices=["max-deg-ge", "diam-le"],
        help="which auxiliary graph",
    )
    p.add_argument("--d", type=int, required=True, help="the bound d")
    p.add_argument("--dot", help="output DOT file (stdout if omitted)")
    p.add_argument(
        "--jobs", type=int, default=1, help="worker processes (default 1)"
    )
    p.set_defaults(func=cmd_auxgraph)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}; raise --cap or shrink the instance", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
