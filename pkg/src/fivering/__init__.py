"""Structure and coloring of graphs organized around 5-holes.

The package recognizes hereditary classes defined by forbidding an
induced P5 together with a small second pattern (K1 union K3, its join
with K1, or a plain triangle), decomposes members around a 5-hole into
trace buckets and BFS layers, and colors them constructively with
certified palettes whose size is bounded by a function of the clique
number.  Exact oracles (clique, independence, chromatic number) back
every derived quantity, and the command line drives recognition,
decomposition checks, coloring, bound verification, and randomized
falsification campaigns over the same machinery.
"""

from .errors import (ClassViolationError, FiveringError, GraphFormatError,
                     HypothesisNotApplicableError, InvalidHoleError,
                     PartialColoringError, PatternSizeError,
                     SearchBudgetError, SizeBoundError,
                     StructuralAssumptionError, WalkStalledError)
from .graph import (Graph, add_vertex, all_labelings, bfs_layers, bits,
                    blow_up, complement, complete_graph, component_masks,
                    components, components_within, cycle_graph,
                    disjoint_union, empty_graph, from_edges,
                    induced_subgraph, is_connected, is_isomorphic,
                    isomorphism, join, mask_of, path_graph, relabeled,
                    toggle_edge)
from .serialize import (encode_graph6, graph_from_json_obj,
                        graph_to_json_obj, parse_dimacs, parse_graph6,
                        parse_graph6_lines, parse_json, to_dimacs, to_json)
from .oracles import (OracleResult, alpha_exact, chromatic_exact,
                      contains_induced_bruteforce,
                      find_odd_hole_or_antihole, omega_exact)
from .recognizers import (CLASS_PATTERNS, BipartiteResult,
                          RecognitionReport, contains_induced,
                          find_five_hole, find_hole,
                          find_non_dominating_five_hole, induced_on,
                          is_bipartite, is_blow_up_of, is_five_ring,
                          is_k1_join_k1uk3_free, is_k1uk3_free, is_k3_free,
                          is_p5_free, recognize, twin_quotient)
from .holes import (AntiholeDecomposition, CheckResult, HolePartition,
                    StructureCheckReport, antihole_decompose,
                    check_antihole_structure, check_apex_structure,
                    check_hole_partition, check_hole_traces,
                    check_ring_structure, find_antihole, m5,
                    neighborhood_trace, partition_by_hole, positions)
from .coloring import (ColoringCertificate, color_p5_k1uk3, color_sumner,
                       coloring_phi, coloring_phi3, coloring_psi,
                       coloring_rotated_traces, validate_coloring)
from .generators import (FamilySpec, WALK_CLASSES, build_family,
                         dedup_isomorphs, enumerate_class, five_ring_bags,
                         forbidden_patterns, gen_five_ring,
                         gen_random_in_class, in_class,
                         in_class_incremental, ring_of_rings, twin_rings)

__version__ = "0.1.0"

__all__ = [
    "AntiholeDecomposition",
    "BipartiteResult",
    "CLASS_PATTERNS",
    "CheckResult",
    "ClassViolationError",
    "ColoringCertificate",
    "FamilySpec",
    "FiveringError",
    "Graph",
    "GraphFormatError",
    "HolePartition",
    "HypothesisNotApplicableError",
    "InvalidHoleError",
    "OracleResult",
    "PartialColoringError",
    "PatternSizeError",
    "RecognitionReport",
    "SearchBudgetError",
    "SizeBoundError",
    "StructuralAssumptionError",
    "StructureCheckReport",
    "WALK_CLASSES",
    "WalkStalledError",
    "add_vertex",
    "all_labelings",
    "alpha_exact",
    "antihole_decompose",
    "bfs_layers",
    "bits",
    "blow_up",
    "build_family",
    "check_antihole_structure",
    "check_apex_structure",
    "check_hole_partition",
    "check_hole_traces",
    "check_ring_structure",
    "chromatic_exact",
    "color_p5_k1uk3",
    "color_sumner",
    "coloring_phi",
    "coloring_phi3",
    "coloring_psi",
    "coloring_rotated_traces",
    "complement",
    "complete_graph",
    "component_masks",
    "components",
    "components_within",
    "contains_induced",
    "contains_induced_bruteforce",
    "cycle_graph",
    "dedup_isomorphs",
    "disjoint_union",
    "empty_graph",
    "encode_graph6",
    "enumerate_class",
    "find_antihole",
    "find_five_hole",
    "find_hole",
    "find_non_dominating_five_hole",
    "find_odd_hole_or_antihole",
    "five_ring_bags",
    "forbidden_patterns",
    "from_edges",
    "gen_five_ring",
    "gen_random_in_class",
    "graph_from_json_obj",
    "graph_to_json_obj",
    "in_class",
    "in_class_incremental",
    "induced_on",
    "induced_subgraph",
    "is_bipartite",
    "is_blow_up_of",
    "is_connected",
    "is_five_ring",
    "is_isomorphic",
    "is_k1_join_k1uk3_free",
    "is_k1uk3_free",
    "is_k3_free",
    "is_p5_free",
    "isomorphism",
    "join",
    "m5",
    "mask_of",
    "neighborhood_trace",
    "omega_exact",
    "parse_dimacs",
    "parse_graph6",
    "parse_graph6_lines",
    "parse_json",
    "partition_by_hole",
    "path_graph",
    "positions",
    "recognize",
    "relabeled",
    "ring_of_rings",
    "to_dimacs",
    "to_json",
    "toggle_edge",
    "twin_quotient",
    "twin_rings",
    "validate_coloring",
]
