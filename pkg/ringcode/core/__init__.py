"""Core modules for ringcode."""

from ringcode.core.bounds import (
    BoundReport,
    bound_grid,
    gilbert_varshamov_overweight,
    johnson_homogeneous,
    johnson_refined,
    overweight_bounds,
    plotkin_distance_corollary,
    plotkin_field,
    plotkin_homogeneous,
    plotkin_overweight,
    sphere_packing_overweight,
)
from ringcode.core.config import (
    EnumerationConfig,
    OutputConfig,
    RingcodeConfig,
    RingConfig,
    SearchConfig,
    VerifyConfig,
    get_config,
    get_default_config_dir,
    reset_config,
    set_config,
)
from ringcode.core.errors import (
    DistributionError,
    EnumerationCapExceeded,
    FieldRingError,
    InvalidCodeError,
    InvalidWeightError,
    NotLocalRingError,
    NotResidueRingError,
    OrderCapExceeded,
    ParameterError,
    ReducibleModulusError,
    RingAxiomError,
    RingcodeError,
    RingSpecError,
)
from ringcode.core.geometry import (
    BallQuery,
    Code,
    ball_enumerate,
    ball_volume_bruteforce,
    ball_volume_overweight,
    distance_matrix,
    enumerate_words,
    load_code,
    min_distance,
    pairwise_distance_sum,
    save_code,
    sphere_size_overweight,
)
from ringcode.core.ring import (
    FiniteRing,
    Locality,
    RingSpec,
    associate_classes,
    build_ring,
    check_ring_axioms,
    galois_field,
    is_local,
    left_ideals,
    parse_ring_spec,
    principal_left_ideal,
    ring_summary,
    units,
)
from ringcode.core.search import (
    CodeSearcher,
    ListProfile,
    SearchResult,
    compatibility_graph,
    greedy_gv,
    list_profile,
    max_code,
)
from ringcode.core.verify import (
    CheckReport,
    Distribution,
    SuiteSummary,
    VerificationSuite,
    check_ball_formula,
    check_distance_axioms,
    check_hamming_average,
    check_ideal_average_lemma,
    check_maxwt,
    check_pair_sum,
    check_probineq,
    verify_johnson,
)
from ringcode.core.weights import (
    DistanceOracle,
    HomogeneousSolution,
    TriangleCheck,
    WeightFunction,
    average_weight,
    custom,
    eta,
    hamming,
    ideal_average_formula,
    lee,
    overweight,
    read_weight_csv,
    solve_homogeneous,
    triangle_holds,
    write_weight_csv,
)

__all__ = [
    # Config
    "RingcodeConfig",
    "RingConfig",
    "EnumerationConfig",
    "SearchConfig",
    "VerifyConfig",
    "OutputConfig",
    "get_config",
    "set_config",
    "reset_config",
    "get_default_config_dir",
    # Errors
    "RingcodeError",
    "RingSpecError",
    "ReducibleModulusError",
    "OrderCapExceeded",
    "RingAxiomError",
    "NotResidueRingError",
    "NotLocalRingError",
    "FieldRingError",
    "InvalidWeightError",
    "InvalidCodeError",
    "EnumerationCapExceeded",
    "ParameterError",
    "DistributionError",
    # Rings
    "FiniteRing",
    "Locality",
    "RingSpec",
    "parse_ring_spec",
    "build_ring",
    "galois_field",
    "check_ring_axioms",
    "units",
    "principal_left_ideal",
    "left_ideals",
    "is_local",
    "associate_classes",
    "ring_summary",
    # Weights
    "WeightFunction",
    "DistanceOracle",
    "HomogeneousSolution",
    "TriangleCheck",
    "hamming",
    "lee",
    "overweight",
    "custom",
    "solve_homogeneous",
    "average_weight",
    "ideal_average_formula",
    "eta",
    "triangle_holds",
    "read_weight_csv",
    "write_weight_csv",
    # Geometry
    "Code",
    "BallQuery",
    "enumerate_words",
    "sphere_size_overweight",
    "ball_volume_overweight",
    "ball_volume_bruteforce",
    "ball_enumerate",
    "distance_matrix",
    "min_distance",
    "pairwise_distance_sum",
    "load_code",
    "save_code",
    # Bounds
    "BoundReport",
    "plotkin_field",
    "plotkin_homogeneous",
    "plotkin_overweight",
    "plotkin_distance_corollary",
    "sphere_packing_overweight",
    "gilbert_varshamov_overweight",
    "johnson_homogeneous",
    "johnson_refined",
    "overweight_bounds",
    "bound_grid",
    # Search
    "CodeSearcher",
    "SearchResult",
    "ListProfile",
    "greedy_gv",
    "max_code",
    "list_profile",
    "compatibility_graph",
    # Verify
    "CheckReport",
    "Distribution",
    "SuiteSummary",
    "VerificationSuite",
    "check_hamming_average",
    "check_probineq",
    "check_pair_sum",
    "check_maxwt",
    "verify_johnson",
    "check_distance_axioms",
    "check_ideal_average_lemma",
    "check_ball_formula",
]
