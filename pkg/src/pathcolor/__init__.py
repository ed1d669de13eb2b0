"""Pattern-connected edge colorings: strongly proper, proper and
nonrepetitive connection colorings, with constructions, verifiers and
exact search."""
from .constructs import (
    GdParameters,
    build_gd,
    build_mod3,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    ear_graph,
    octahedron,
    path_graph,
    random_k_edge_connected,
    random_min_two_connected,
    random_two_connected,
    theta_graph,
)
from .ears import (
    ClaimReport,
    Ear,
    EarDecomposition,
    longest_first_ear_decomposition,
    open_ear_decomposition,
    validate_structural_claims,
)
from .errors import InvariantError, MalformedInputError, Mod3AdmissionError, PreconditionError, TreePackingError
from .graph import (
    EdgeColoring,
    Graph,
    edge_connectivity,
    girth,
    is_connected,
    is_minimally_two_connected,
    is_two_connected,
    minimally_two_connected_spanning,
    vertex_connectivity,
)
from .spc import OrientedOverlay, check_overlay_invariants, color_mod3, color_spc5
from .trees import SpanningTreePair, two_edge_disjoint_spanning_trees, two_tree_color, witness_certificate, witness_path
from .verify import (
    VerificationResult,
    WitnessCertificate,
    exact_connection_coloring,
    exact_connection_number,
    exists_valid_path,
    stochastic_search,
    verify_connected_coloring,
    verify_witness_set,
)
from .words import (
    NONREP,
    PROPER,
    STRONG,
    SequenceProperty,
    canonical_sequence,
    check_honesty,
    get_property,
    is_nonrepetitive,
    is_proper,
    is_strongly_proper,
    thue_sequence,
)

__version__ = "0.1.0"
