"""Matching polynomials, adjacency-tensor spectral radii, and extremal
structure of r-uniform linear hypertrees."""

__version__ = "0.1.0"

from .hypergraph import (
    CanonicalCode,
    DeletionResult,
    Hypergraph,
    ValidationReport,
    automorphism_count,
    canonical_code,
    common_vertex,
    connected_components,
    degree,
    delete_edge,
    delete_edge_closed,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    find_path,
    from_json,
    is_acyclic,
    is_connected,
    is_isomorphic,
    is_pendent_edge,
    load,
    relabel,
    restrict,
    save,
    single_edge,
    to_json,
    validate,
    vertex_kind,
)
from .matching import (
    MatchPoly,
    MatchingProfile,
    brute_force_counts,
    clear_matching_cache,
    matching_counts,
    matching_number,
    matching_polynomial,
)
from .spectral import (
    PowerIterationError,
    SpectralResult,
    apply_adjacency,
    residual,
    spectral_radius_polyroot,
    spectral_radius_power,
)
from .constructions import (
    BoundResult,
    BracketingError,
    CompositionVector,
    ExtremalParams,
    InfeasibleParameters,
    build_A,
    build_Ra,
    build_S,
    build_Tva,
    build_Tvab,
    extremal_params,
    hyperstar,
    perfect_matching_bound,
    rho_bound,
)
from .transforms import (
    EQUAL_POLY,
    INCOMPARABLE,
    PRECEDES_STRICT,
    PRECEDES_WEAK,
    SUCCEEDS_STRICT,
    SUCCEEDS_WEAK,
    OrderRelation,
    compare_order,
    edge_release,
    is_majorized,
    majorization_chain,
    majorization_step,
    move_edges,
)
from .enumeration import (
    EnumerationRecord,
    attach_pendent,
    enumerate_T_mkr,
    enumerate_hypertrees,
    labeled_count_from_classes,
    labeled_hypertree_count,
    max_edges_guard,
    naive_filter_class_count,
    random_hyperforest,
    random_hypertree,
    tree_class_count_prufer,
)
from .harness import (
    SuiteConfig,
    SuiteResult,
    VerificationReport,
    default_config,
    run_suite,
    verify_extremal,
    verify_perfect_matching,
)
