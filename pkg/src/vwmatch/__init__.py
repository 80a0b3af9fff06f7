"""Maximum vertex-weighted matching in bipartite graphs: an exact solver,
2/3- and 1/2-approximations, brute-force oracles and path verifiers."""

from .approx import (MergeError, greedy_half_mvm, mendelsohn_dulmage_merge, restricted_match,
                     two_thirds_mvm)
from .bench import geometric_mean
from .exact import AugmentingPath, find_augmenting_to_heaviest, match_d
from .generate import (GraphStats, WeightSpec, generate_random_bipartite, generate_weights,
                       graph_stats)
from .graph import (BipartiteGraph, GraphError, Side, VertexWeights, build_graph, check_graph,
                    transform_negative_weights)
from .matching import (Label, Matching, SymDiffComponent, lex_compare, matching_weight,
                       symmetric_difference, validate_matching, weight_vector)
from .mmio import ParseError, parse_matrix_market, read_matrix_market, write_matrix_market
from .oracle import (OracleGuardError, OracleResult, brute_force_lex_max_vector, brute_force_mvm,
                     verify_no_augmenting, verify_no_increasing)

__all__ = [
    "AugmentingPath", "BipartiteGraph", "GraphError", "GraphStats", "Label", "Matching",
    "MergeError", "OracleGuardError", "OracleResult", "ParseError", "Side", "SymDiffComponent",
    "VertexWeights", "WeightSpec", "brute_force_lex_max_vector", "brute_force_mvm", "build_graph",
    "check_graph", "find_augmenting_to_heaviest", "generate_random_bipartite", "generate_weights",
    "geometric_mean", "graph_stats", "greedy_half_mvm", "lex_compare", "match_d",
    "matching_weight", "mendelsohn_dulmage_merge", "parse_matrix_market", "read_matrix_market",
    "restricted_match", "symmetric_difference", "transform_negative_weights", "two_thirds_mvm",
    "validate_matching", "verify_no_augmenting", "verify_no_increasing", "weight_vector",
    "write_matrix_market",
]
