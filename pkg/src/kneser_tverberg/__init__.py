"""Exact desk-scale bridge between set intersection patterns and convex ones.

The package works on both sides of the same ledger. On the
combinatorial side it builds disjointness hypergraphs of forbidden-set
families (minimal nonfaces of a simplicial complex) and computes their
chromatic numbers exactly, along with the width, fractional, and
floor-formula bounds. On the geometric side it places points with
rational coordinates, searches for partitions into parts with
commonly intersecting hulls, and certifies presence or absence
exactly. The experiments module ties the two sides together into named,
re-runnable verifications; everything is deterministic and
tolerance-free.
"""

from .coloring import (
    DEFAULT_VERTEX_LIMIT,
    ChromaticResult,
    Coloring,
    GreedyColoring,
    bound_floor_formula,
    chromatic_number,
    extend_coloring,
    face_relabeling_for_greedy,
    greedy_least_label,
    is_proper,
    kriz_bound,
    verify_constraint_property,
)
from .experiments import (
    ALL_EXPERIMENTS,
    ExperimentReport,
    experiment_tasks,
    run_tasks,
    verify_avg_stable,
    verify_bound_pipeline,
    verify_constraint,
    verify_cyclic_shift,
    verify_dismantle,
    verify_gale,
    verify_intertwined,
    verify_kneser,
    verify_kriz_example,
    verify_nonprimepower,
    verify_pipeline,
    verify_roundtrip,
    verify_schrijver,
    verify_spherical,
    verify_stable_faces,
    verify_tverberg_random,
)
from .geometry import (
    DEFAULT_SEARCH_CAP,
    AbsenceReport,
    ConvexWitness,
    IntertwinedPair,
    PointConfiguration,
    SearchSpaceError,
    TverbergCertificate,
    avg_stable_placement,
    conv_intersect,
    cyclic_missing_faces,
    gale_facets,
    hull_facets_oracle,
    intertwined_pair,
    is_strong_general_position,
    moment_points,
    separating_polynomial,
    strong_general_position_report,
    tverberg_search,
)
from .hypergraphs import (
    GapVector,
    Hypergraph,
    cyclic_gap,
    gap_vector,
    generalized_kneser,
    intersection_hypergraph,
    is_t_stable_on_average,
    kneser_hypergraph,
    minimize_system,
    s_stable_subsets,
    stable_avg_hypergraph,
    width,
)
from .simplicial import (
    GROUND_LIMIT,
    SimplicialComplex,
    complex_from_forbidden,
    minimal_nonfaces,
    simplex_complex,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_EXPERIMENTS",
    "AbsenceReport",
    "ChromaticResult",
    "Coloring",
    "ConvexWitness",
    "DEFAULT_SEARCH_CAP",
    "DEFAULT_VERTEX_LIMIT",
    "ExperimentReport",
    "GROUND_LIMIT",
    "GapVector",
    "GreedyColoring",
    "Hypergraph",
    "IntertwinedPair",
    "PointConfiguration",
    "SearchSpaceError",
    "SimplicialComplex",
    "TverbergCertificate",
    "avg_stable_placement",
    "bound_floor_formula",
    "chromatic_number",
    "complex_from_forbidden",
    "conv_intersect",
    "cyclic_gap",
    "cyclic_missing_faces",
    "experiment_tasks",
    "extend_coloring",
    "face_relabeling_for_greedy",
    "gale_facets",
    "gap_vector",
    "generalized_kneser",
    "greedy_least_label",
    "hull_facets_oracle",
    "intersection_hypergraph",
    "intertwined_pair",
    "is_proper",
    "is_strong_general_position",
    "is_t_stable_on_average",
    "kneser_hypergraph",
    "kriz_bound",
    "minimal_nonfaces",
    "minimize_system",
    "moment_points",
    "run_tasks",
    "s_stable_subsets",
    "separating_polynomial",
    "simplex_complex",
    "stable_avg_hypergraph",
    "strong_general_position_report",
    "tverberg_search",
    "verify_avg_stable",
    "verify_bound_pipeline",
    "verify_constraint",
    "verify_constraint_property",
    "verify_cyclic_shift",
    "verify_dismantle",
    "verify_gale",
    "verify_intertwined",
    "verify_kneser",
    "verify_kriz_example",
    "verify_nonprimepower",
    "verify_pipeline",
    "verify_roundtrip",
    "verify_schrijver",
    "verify_spherical",
    "verify_stable_faces",
    "verify_tverberg_random",
    "width",
]
