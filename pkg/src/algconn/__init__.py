"""Algebraic connectivity of small graphs.

Compute Fiedler vectors with a self-contained deterministic eigensolver,
build the chorded-cycle and theta families that minimize algebraic
connectivity among 2-connected graphs, rewire arbitrary biconnected
graphs into spanning cycles with quadratic-form certificates, and verify
the minimality theorems exhaustively at small orders.
"""

from .canon import canonical_form, is_isomorphic
from .connectivity import (
    PathSystem,
    articulation_vertices,
    hamiltonian_cycle,
    inner_disjoint_paths,
    is_biconnected,
    is_connected,
    is_hamiltonian,
    is_theta,
    local_connectivity,
    theta_length_triple,
)
from .enumeration import CanonicalCode, count_classes, enumerate_graphs
from .errors import (
    AlgConnError,
    ConvergenceError,
    DisconnectedGraphError,
    EdgeExistsError,
    EdgeMissingError,
    FamilySpecError,
    Graph6Error,
    GraphError,
    OrderLimitError,
    RewireDefectError,
    VerificationError,
    VertexSetError,
)
from .families import (
    FamilyKind,
    FamilySpec,
    chord_increments,
    cycle_graph,
    enumerate_theta,
    equality_family,
    parse_family_text,
    realize,
    saturated,
    symmetric_alpha_vector,
    theta_triples,
)
from .graphs import (
    Graph,
    add_graph,
    complete_graph,
    empty_graph,
    graph_from_edge_text,
    graph_from_edges,
    graph_from_graph6,
    graph_to_graph6,
    parse_graph_text,
    path_graph,
)
from .rewiring import (
    RewireCertificate,
    StrictnessReport,
    chain_inequality_check,
    extreme_vertices,
    interval_assignment,
    rewire,
    strictness_report,
)
from .spectra import (
    FiedlerResult,
    SpectralDecomposition,
    algebraic_connectivity,
    alpha_cycle_closed_form,
    eigen_symmetric,
    fiedler_vector,
    rayleigh_quotient,
)
from .verify import (
    EqualityClass,
    Margins,
    VerificationReport,
    classify_equality,
    report_to_csv,
    report_to_json,
    verify_theorem_1,
    verify_theorem_2,
)

__version__ = "0.1.0"

__all__ = [
    "AlgConnError",
    "CanonicalCode",
    "ConvergenceError",
    "DisconnectedGraphError",
    "EdgeExistsError",
    "EdgeMissingError",
    "EqualityClass",
    "FamilyKind",
    "FamilySpec",
    "FamilySpecError",
    "FiedlerResult",
    "Graph",
    "Graph6Error",
    "GraphError",
    "Margins",
    "OrderLimitError",
    "PathSystem",
    "RewireCertificate",
    "RewireDefectError",
    "SpectralDecomposition",
    "StrictnessReport",
    "VerificationError",
    "VerificationReport",
    "VertexSetError",
    "add_graph",
    "algebraic_connectivity",
    "alpha_cycle_closed_form",
    "articulation_vertices",
    "canonical_form",
    "chain_inequality_check",
    "chord_increments",
    "classify_equality",
    "complete_graph",
    "count_classes",
    "cycle_graph",
    "empty_graph",
    "enumerate_graphs",
    "enumerate_theta",
    "equality_family",
    "extreme_vertices",
    "fiedler_vector",
    "graph_from_edge_text",
    "graph_from_edges",
    "graph_from_graph6",
    "graph_to_graph6",
    "hamiltonian_cycle",
    "inner_disjoint_paths",
    "interval_assignment",
    "is_biconnected",
    "is_connected",
    "is_hamiltonian",
    "is_isomorphic",
    "is_theta",
    "local_connectivity",
    "parse_family_text",
    "parse_graph_text",
    "path_graph",
    "rayleigh_quotient",
    "realize",
    "report_to_csv",
    "report_to_json",
    "rewire",
    "saturated",
    "strictness_report",
    "symmetric_alpha_vector",
    "theta_length_triple",
    "theta_triples",
    "verify_theorem_1",
    "verify_theorem_2",
]
