"""k-chordal graphs: induced cycles, k-simplicial orderings and minimal separators."""

from .chordality import ChordalityResult, InducedCycle, chordality, enumerate_induced_cycles, is_k_chordal
from .graph_core import (
    INFINITY,
    Graph,
    GraphFormatError,
    closed_neighbourhood,
    connected_components,
    distance,
    encode_graph6,
    graph_power,
    induced_subgraph,
    members,
    minus_vertex_power,
    open_neighbourhood,
    parse_edge_list,
    parse_graph6,
    vset,
)
from .oracle_harness import (
    EquivalenceReport,
    IndependenceWitness,
    check_theorem1,
    enumerate_labeled_graphs,
    find_independence_witnesses,
    random_graph,
    sweep,
)
from .separators import (
    SeparatorRecord,
    SeparatorViolation,
    check_separator_condition,
    enumerate_minimal_separators,
    is_k_chordal_via_separators,
    longest_induced_xy_path_in_component,
)
from .simplicial import (
    CompleteGraphError,
    DominatingSeedError,
    FailureWitness,
    HypothesisViolated,
    InducedPath,
    OrderingCertificate,
    SimplicialVerdict,
    check_c1,
    check_c2,
    enumerate_chordless_paths,
    find_k_simplicial_constructive,
    find_two_nonadjacent_k_simplicial,
    is_k_simplicial,
    k_simplicial_ordering,
    max_connected_nondominating_set,
    verify_ordering,
)

__version__ = "0.1.0"
