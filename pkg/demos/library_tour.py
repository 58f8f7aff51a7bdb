"""A guided tour of the library: deciders, sequences, oracle, reductions.

Run with:  python3 demos/library_tour.py
Everything is deterministic; the output is stable across runs.
"""

from __future__ import annotations

from treereconf import (
    Constraint,
    Graph,
    SpanningTree,
    build_center_aux_graph,
    build_degree_aux_graph,
    decide_large_max_degree,
    decide_small_diameter,
    diameter_half,
    enumerate_configurations,
    enumerate_spanning_trees,
    hampath_to_rst,
    ncl_to_rst,
    oracle_decide,
    parse_ncl,
    relaxed_small_degree_sequence,
    sequence_small_diameter,
    validate_sequence,
)


def banner(title: str) -> None:
    print()
    print(f"== {title} ==")


def main() -> None:
    # The complete graph on four vertices; edge ids are 1..6 in the
    # listed order, so the star at vertex 0 is {1, 2, 3}.
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    star0 = SpanningTree(k4, {1, 2, 3})
    star1 = SpanningTree(k4, {1, 4, 5})
    path = SpanningTree(k4, {1, 4, 6})  # the path 0-1-2-3

    banner("Host and trees")
    print(f"K4: n={k4.n}, m={k4.m}, spanning trees: {len(enumerate_spanning_trees(k4))}")
    print(f"star at 0: ids {sorted(star0.edge_ids)}, max degree {star0.max_degree()}")
    print(f"star at 1: ids {sorted(star1.edge_ids)}, max degree {star1.max_degree()}")
    print(f"path 0-1-2-3: ids {sorted(path.edge_ids)}, diameter {diameter_half(path) // 2}")

    banner("Degree lower bound (keep max degree >= d)")
    for d in (2, 3):
        got = decide_large_max_degree(k4, d, star0, star1)
        print(f"star0 -> star1 keeping max degree >= {d}: {'YES' if got else 'NO'}")
    aux = build_degree_aux_graph(k4, 3)
    print(f"auxiliary hub graph at d=3 has edges: {aux.edges()}")

    banner("Diameter upper bound (keep diameter <= d)")
    for d in (2, 3):
        got = decide_small_diameter(k4, d, star0, star1)
        print(f"star0 -> star1 keeping diameter <= {d}: {'YES' if got else 'NO'}")
    seq = sequence_small_diameter(k4, 3, star0, path)
    ok, _ = validate_sequence(seq)
    print(f"star0 -> path at d=3: {len(seq.steps)} flips, validates: {ok}")
    caux = build_center_aux_graph(k4, 3)
    print(f"center auxiliary graph at d=3: {len(caux.edges())} edges over {len(caux.points)} points")

    banner("Degree upper bound, relaxed regime (one endpoint below the bound)")
    seq = relaxed_small_degree_sequence(k4, 3, star0, path)
    print(
        f"star0 -> path keeping max degree <= 3: {len(seq.steps)} flips"
        f" (= exchanged edges: {len(star0.edge_ids - path.edge_ids)})"
    )

    banner("Brute-force oracle (the referee for everything above)")
    yes, oseq = oracle_decide(k4, Constraint.diam_le(2), star0, star1)
    print(f"oracle, star0 -> star1 under diameter <= 2: {'YES' if yes else 'NO'}")
    yes, oseq = oracle_decide(k4, Constraint.diam_ge(3), path, SpanningTree(k4, {2, 4, 5}))
    print(f"oracle, path -> path under diameter >= 3: {'YES' if yes else 'NO'}, shortest: {len(oseq.steps)} flips")

    banner("Hardness reduction: constraint logic -> bounded-degree flips")
    h = parse_ncl("0 OR\n1 OR\n0 1 2\n0 1 2\n0 1 2\n")
    configs = enumerate_configurations(h)
    inst = ncl_to_rst(h, configs[0], configs[-1], d=3)
    print(
        f"2-vertex OR graph with {len(configs)} configurations compiles to"
        f" n={inst.g.n}, m={inst.g.m}, constraint {inst.kind} d={inst.d}"
    )

    banner("Hardness reduction: Hamiltonian path -> diameter-bounded flips")
    inst = hampath_to_rst(k4, 0, 3)
    print(
        f"K4 with endpoints 0,3 compiles to n={inst.g.n}, m={inst.g.m},"
        f" constraint {inst.kind} d={inst.d}"
    )
    print(f"initial tree diameter: {diameter_half(inst.t_ini) // 2} (exactly d)")


if __name__ == "__main__":
    main()
