"""
Step-by-step reconfiguration of spanning trees under degree and diameter
constraints.

A *flip* exchanges one tree edge for one non-tree edge.  This package
decides, in polynomial time, whether two spanning trees of a connected
graph are connected by a sequence of flips in which every intermediate
tree keeps its maximum degree at least d (``degree``) or its diameter at
most d (``diameter``), and constructs such sequences; it also provides a
relaxed constructor for the max-degree-at-most-d regime, exhaustive
oracles for ground truth on small hosts (``oracle``), two hardness
constructions mapping constraint-logic and Hamiltonian-path instances to
reconfiguration instances (``reductions``), lexicographic shortest-path
utilities (``lexlen``), and a command-line front end (``cli``).
"""

from __future__ import annotations

from .degree import (
    DegreeAuxGraph,
    build_degree_aux_graph,
    decide_large_max_degree,
    degree_aux_edge,
    degree_aux_witness,
    find_swap_edge,
    high_degree_set,
    relaxed_small_degree_sequence,
    sequence_large_max_degree,
    shared_hub_sequence,
)
from .diameter import (
    CenterAuxGraph,
    CyclicSearch,
    GoodTriple,
    LambdaLabels,
    build_center_aux_graph,
    build_cyclic_search,
    decide_small_diameter,
    find_good_cyclic_pseudotree,
    find_good_tree,
    is_good_triple,
    lambda_labels,
    same_center_sequence,
    sequence_small_diameter,
    split_pseudotree,
)
from .distances import (
    INFINITE,
    center_points,
    diameter_half,
    eccentricity_half,
    eccentricity_half_subgraph,
    half_distances,
    point_distances_half,
)
from .graph import (
    Graph,
    Point,
    Pseudotree,
    SpanningTree,
    apply_flip,
    are_flip_adjacent,
    format_graph,
    format_tree,
    fundamental_cycle,
    is_pseudotree,
    load_graph,
    load_tree,
    parse_graph,
    parse_tree,
    point_sort_key,
    save_text,
    tree_path,
    unique_cycle,
    validate_spanning_tree,
)
from .lexlen import (
    AugmentedGraph,
    LexLen,
    LexTreeResult,
    lex_point_distance,
    lex_shortest_tree,
    lex_vertex_distances,
)
from .oracle import (
    DEFAULT_CAP,
    CapExceeded,
    enumerate_pseudotrees,
    enumerate_spanning_trees,
    flip_component_map,
    oracle_center_pair,
    oracle_decide,
    oracle_degree_pair,
    oracle_hampath,
    oracle_min_diameter_tree,
    spanning_tree_count,
)
from .reductions import (
    NCLGraph,
    NCLOrientation,
    RSTInstance,
    check_diameter_domination,
    enumerate_configurations,
    extract_hampath,
    format_ncl,
    format_orientation,
    hampath_certificate_sequence,
    hampath_to_rst,
    load_instance,
    ncl_of_instance,
    ncl_step_sequence,
    ncl_to_rst,
    orientation_of_tree,
    parse_ncl,
    parse_orientation,
    save_instance,
    tree_of_orientation,
    validate_ncl,
)
from .sequence import (
    Constraint,
    ReconfSequence,
    unconstrained_sequence,
    validate_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentedGraph",
    "CapExceeded",
    "CenterAuxGraph",
    "Constraint",
    "CyclicSearch",
    "DEFAULT_CAP",
    "DegreeAuxGraph",
    "GoodTriple",
    "Graph",
    "INFINITE",
    "LambdaLabels",
    "LexLen",
    "LexTreeResult",
    "NCLGraph",
    "NCLOrientation",
    "Point",
    "Pseudotree",
    "RSTInstance",
    "ReconfSequence",
    "SpanningTree",
    "apply_flip",
    "are_flip_adjacent",
    "build_center_aux_graph",
    "build_cyclic_search",
    "build_degree_aux_graph",
    "center_points",
    "check_diameter_domination",
    "decide_large_max_degree",
    "decide_small_diameter",
    "degree_aux_edge",
    "degree_aux_witness",
    "diameter_half",
    "eccentricity_half",
    "eccentricity_half_subgraph",
    "enumerate_configurations",
    "enumerate_pseudotrees",
    "enumerate_spanning_trees",
    "extract_hampath",
    "find_good_cyclic_pseudotree",
    "find_good_tree",
    "find_swap_edge",
    "flip_component_map",
    "format_graph",
    "format_ncl",
    "format_orientation",
    "format_tree",
    "fundamental_cycle",
    "half_distances",
    "hampath_certificate_sequence",
    "hampath_to_rst",
    "high_degree_set",
    "is_good_triple",
    "is_pseudotree",
    "lambda_labels",
    "lex_point_distance",
    "lex_shortest_tree",
    "lex_vertex_distances",
    "load_graph",
    "load_instance",
    "load_tree",
    "ncl_of_instance",
    "ncl_step_sequence",
    "ncl_to_rst",
    "oracle_center_pair",
    "oracle_decide",
    "oracle_degree_pair",
    "oracle_hampath",
    "oracle_min_diameter_tree",
    "orientation_of_tree",
    "parse_graph",
    "parse_ncl",
    "parse_orientation",
    "parse_tree",
    "point_distances_half",
    "point_sort_key",
    "relaxed_small_degree_sequence",
    "same_center_sequence",
    "save_instance",
    "save_text",
    "sequence_large_max_degree",
    "sequence_small_diameter",
    "shared_hub_sequence",
    "spanning_tree_count",
    "split_pseudotree",
    "tree_of_orientation",
    "tree_path",
    "unconstrained_sequence",
    "unique_cycle",
    "validate_ncl",
    "validate_sequence",
    "validate_spanning_tree",
]
