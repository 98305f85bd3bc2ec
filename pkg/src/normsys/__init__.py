"""Exact invariants and isomorphism decisions for antipodal sphere
arrangements, normal systems, and hyperplane arrangements over ordered
fields."""

from .field import QuadExt, cmp_values, format_value, parse_value, sign
from .linalg import Matrix, det, kernel_basis, rank
from .sphere import (
    AntipodalArrangement,
    ArrangementError,
    SpherePoint,
    oriented_complement_frame,
    positive_combination,
    project_arrangement,
)
from .cycles import CycleInvariantSet, LineCycle, all_cycle_invariants, line_cycle
from .symbols import (
    STANDARD_DICTIONARY,
    SignedBijection,
    Symbol,
    all_orbits,
    all_symbols,
    automorphisms,
    compatible_symbols,
    match_to_standard,
    orbit,
    standard_arrangement,
)
from .normal_systems import (
    NormalSystem,
    find_isomorphisms,
    is_convex_positive_bijection,
    oracle_isomorphisms,
    validate_normal_system,
)
from .arrangements import (
    HyperplaneArrangement,
    ConcurrencySignMap,
    IsoResult,
    Region,
    adjacent_cone_constants,
    affine_image,
    arrangements_isomorphic,
    concurrency_sign_map,
    cone_facets,
    definition_oracle_isomorphic,
    enumerate_regions,
    hyperplanes_from,
    induced_sign_map,
    is_infinity_arrangement,
    is_simplex_polyhedrality,
    normal_system_of,
    predicted_counts,
    region_counts,
    simplex_orientation_check,
)
from .fixtures import (
    FIXTURE_IDS,
    VERIFIABLE_IDS,
    PaperFixture,
    compatible_pair_graph,
    load_fixture,
    verify_all,
    verify_fixture,
)

__version__ = "0.1.0"

__all__ = [
    "QuadExt",
    "cmp_values",
    "format_value",
    "parse_value",
    "sign",
    "Matrix",
    "det",
    "kernel_basis",
    "rank",
    "AntipodalArrangement",
    "ArrangementError",
    "SpherePoint",
    "oriented_complement_frame",
    "positive_combination",
    "project_arrangement",
    "CycleInvariantSet",
    "LineCycle",
    "all_cycle_invariants",
    "line_cycle",
    "STANDARD_DICTIONARY",
    "SignedBijection",
    "Symbol",
    "all_orbits",
    "all_symbols",
    "automorphisms",
    "compatible_symbols",
    "match_to_standard",
    "orbit",
    "standard_arrangement",
    "NormalSystem",
    "find_isomorphisms",
    "is_convex_positive_bijection",
    "oracle_isomorphisms",
    "validate_normal_system",
    "HyperplaneArrangement",
    "ConcurrencySignMap",
    "IsoResult",
    "Region",
    "adjacent_cone_constants",
    "affine_image",
    "arrangements_isomorphic",
    "concurrency_sign_map",
    "cone_facets",
    "definition_oracle_isomorphic",
    "enumerate_regions",
    "hyperplanes_from",
    "induced_sign_map",
    "is_infinity_arrangement",
    "is_simplex_polyhedrality",
    "normal_system_of",
    "predicted_counts",
    "region_counts",
    "simplex_orientation_check",
    "FIXTURE_IDS",
    "VERIFIABLE_IDS",
    "PaperFixture",
    "compatible_pair_graph",
    "load_fixture",
    "verify_all",
    "verify_fixture",
]
