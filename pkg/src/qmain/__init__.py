"""Signless-Laplacian main-eigenvalue analysis for small graphs.

The package decides whether a connected graph has exactly two Q-main
eigenvalues (Q = D + A) two independent ways — an exact degree-based
criterion and exact walk-matrix rank — and verifies by construction plus
exhaustive small-order enumeration that the catalogued tricyclic families
are precisely the tricyclic graphs with that property.
"""

from .criterion import (
    NO_SOLUTION,
    UNDERDETERMINED,
    UNIQUE,
    AbSolution,
    check_membership,
    has_exactly_two_q_mains,
    solve_ab,
)
from .enumeration import (
    EnumerationReport,
    PositiveCheck,
    enumerate_connected,
    enumerate_tricyclic,
    verify_characterization,
)
from .families import (
    FAMILY_IDS,
    PARAMETRIC_FAMILY_IDS,
    FamilyBuildError,
    FamilyDescriptor,
    build_family,
    describe,
    enumerate_family_instances,
    family_ids,
    match_family,
    minimal_params,
    solve_pendant_load_equation,
)
from .graph_core import (
    DegreeProfile,
    Graph,
    Graph6Error,
    GraphError,
    base,
    canonical_form,
    canonical_graph,
    count_cycles,
    cyclomatic_number,
    degree_profile,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_regular,
    pendant_vertices,
)
from .spectral import (
    EigenGroup,
    JacobiConvergenceError,
    QSpectrumReport,
    exact_main_count,
    integer_matrix_rank,
    q_spectrum,
    signless_laplacian,
    spectrum_crosscheck,
)
from .structure import (
    SHAPE_CYCLE_COUNTS,
    SHAPE_IDS,
    BaseShape,
    InternalSegment,
    ReducedMultigraph,
    classify_base,
    internal_segments,
    reduced_multigraph,
    two_main_checklist,
)

__version__ = "0.1.0"

__all__ = [
    # graph_core
    "DegreeProfile",
    "Graph",
    "Graph6Error",
    "GraphError",
    "base",
    "canonical_form",
    "canonical_graph",
    "count_cycles",
    "cyclomatic_number",
    "degree_profile",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_regular",
    "pendant_vertices",
    # spectral
    "EigenGroup",
    "JacobiConvergenceError",
    "QSpectrumReport",
    "exact_main_count",
    "integer_matrix_rank",
    "q_spectrum",
    "signless_laplacian",
    "spectrum_crosscheck",
    # criterion
    "NO_SOLUTION",
    "UNDERDETERMINED",
    "UNIQUE",
    "AbSolution",
    "check_membership",
    "has_exactly_two_q_mains",
    "solve_ab",
    # structure
    "SHAPE_CYCLE_COUNTS",
    "SHAPE_IDS",
    "BaseShape",
    "InternalSegment",
    "ReducedMultigraph",
    "classify_base",
    "internal_segments",
    "reduced_multigraph",
    "two_main_checklist",
    # families
    "FAMILY_IDS",
    "PARAMETRIC_FAMILY_IDS",
    "FamilyBuildError",
    "FamilyDescriptor",
    "build_family",
    "describe",
    "enumerate_family_instances",
    "family_ids",
    "match_family",
    "minimal_params",
    "solve_pendant_load_equation",
    # enumeration
    "EnumerationReport",
    "PositiveCheck",
    "enumerate_connected",
    "enumerate_tricyclic",
    "verify_characterization",
    "__version__",
]
