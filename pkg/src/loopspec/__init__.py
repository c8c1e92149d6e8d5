"""Laplacian spectra of undirected graphs with self-loops.

Build graphs, assemble their Laplacians, decide pseudo-connectedness, lift
loops away into a loopless graph on 2n+1 vertices, and verify the spectral
facts that motivate the construction: positive definiteness, eigenvalue
bounds, and inclusion of the base spectrum in the lifted one.
"""

from .graphs import (
    ComponentPartition,
    Edge,
    EdgeListError,
    Graph,
    add_edge,
    connected_components,
    format_edge_list,
    graph_from_edges,
    is_pseudo_connected,
    max_degree,
    new_graph,
    parse_edge_list,
    read_edge_list,
    strip_self_loops,
    write_edge_list,
)
from .laplacian import degree_adjacency, format_matrix, incidence_matrix, laplacian_of
from .lifting import LiftedGraph, lift, lifted_incidence_blocks
from .oracle import (
    GenerationError,
    GeneratorConfig,
    OracleError,
    charpoly_eigenvalues,
    enumerate_graphs,
    random_graph,
)
from .spectral import (
    CHECK_IDS,
    CheckResult,
    JACOBI_MAX_SWEEPS,
    JacobiConvergenceError,
    MATCH_TOL,
    POSITIVITY_TOL,
    SOLVER_TOL,
    Spectrum,
    SubsetMatch,
    VerificationReport,
    algebraic_connectivity,
    degree_upper_bound,
    eigen_sym,
    fiedler_lower_bound,
    spectrum_subset,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ComponentPartition",
    "Edge",
    "EdgeListError",
    "Graph",
    "add_edge",
    "connected_components",
    "format_edge_list",
    "graph_from_edges",
    "is_pseudo_connected",
    "max_degree",
    "new_graph",
    "parse_edge_list",
    "read_edge_list",
    "strip_self_loops",
    "write_edge_list",
    "degree_adjacency",
    "format_matrix",
    "incidence_matrix",
    "laplacian_of",
    "LiftedGraph",
    "lift",
    "lifted_incidence_blocks",
    "GenerationError",
    "GeneratorConfig",
    "OracleError",
    "charpoly_eigenvalues",
    "enumerate_graphs",
    "random_graph",
    "CHECK_IDS",
    "CheckResult",
    "JACOBI_MAX_SWEEPS",
    "JacobiConvergenceError",
    "MATCH_TOL",
    "POSITIVITY_TOL",
    "SOLVER_TOL",
    "Spectrum",
    "SubsetMatch",
    "VerificationReport",
    "algebraic_connectivity",
    "degree_upper_bound",
    "eigen_sym",
    "fiedler_lower_bound",
    "spectrum_subset",
    "verify_all",
]
