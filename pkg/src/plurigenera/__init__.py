"""Exact-arithmetic plurigenera of (quasi-)elliptic surface fibrations:
numerical types, admissibility, bounded exhaustive verification of the
twelfth-plurigenus growth statements, and the Kodaira decision table.
"""

__version__ = "0.1.0"

from .classifier import (
    KodairaClass,
    SurfaceInvariants,
    classify,
    classify_kod0_subtype,
    torsion_solutions,
)
from .congruence import (
    ConditionUInstance,
    QuasiLinearForm,
    check_all_U,
    check_condition_U,
    check_condition_U_bruteforce,
    divisibility_closure_r3,
    floor_sum,
)
from .errors import (
    InadmissibleTypeError,
    InvalidInputError,
    OracleBoundExceededError,
    PlurigeneraError,
    UnsupportedInputError,
)
from .factory import (
    AbelianGroupData,
    bad_characteristics,
    cover_to_type,
    riemann_hurwitz_genus,
)
from .fibre_local import (
    CoefficientSet,
    JumpProfile,
    achievable_torsion_lengths,
    admissible_coefficients,
    enumerate_jump_profiles,
    second_jump_candidates,
)
from .model import (
    FibrationNumericalType,
    FibreDatum,
    PlurigenusValue,
    delta_degree,
    generic_lower_bound,
    geometric_genus,
    plurigenera_series,
    plurigenus,
    slope,
)
from .verifier import (
    AdmissibilityReport,
    EnumerationBounds,
    MainTheoremReport,
    enumerate_types,
    find_sharp_cases,
    is_admissible,
    verify_all,
    verify_main_theorem,
    verify_tail,
)

__all__ = [
    "AbelianGroupData",
    "AdmissibilityReport",
    "CoefficientSet",
    "ConditionUInstance",
    "EnumerationBounds",
    "FibrationNumericalType",
    "FibreDatum",
    "InadmissibleTypeError",
    "InvalidInputError",
    "JumpProfile",
    "KodairaClass",
    "MainTheoremReport",
    "OracleBoundExceededError",
    "PlurigeneraError",
    "PlurigenusValue",
    "QuasiLinearForm",
    "SurfaceInvariants",
    "UnsupportedInputError",
    "achievable_torsion_lengths",
    "bad_characteristics",
    "admissible_coefficients",
    "check_all_U",
    "check_condition_U",
    "check_condition_U_bruteforce",
    "classify",
    "classify_kod0_subtype",
    "cover_to_type",
    "delta_degree",
    "divisibility_closure_r3",
    "enumerate_jump_profiles",
    "enumerate_types",
    "find_sharp_cases",
    "floor_sum",
    "generic_lower_bound",
    "geometric_genus",
    "is_admissible",
    "plurigenera_series",
    "plurigenus",
    "riemann_hurwitz_genus",
    "second_jump_candidates",
    "slope",
    "torsion_solutions",
    "verify_all",
    "verify_main_theorem",
    "verify_tail",
]
