"""Exact positivity verdicts for Chern characters on rational surfaces.

The package decides, by exact rational arithmetic, every effective
positivity question this theory answers for a Chern character on the
projective plane or a Hirzebruch surface: numerical invariants and Euler
characteristics, necessary obstructions to ampleness, global generation of
the general bundle, ampleness of the general globally generated bundle
(with a bad-curve certificate), and asymptotic ampleness with an explicit
minimal multiplier.
"""

from .ampleness import (
    AmpleGGCertificate,
    AsymptoticCertificate,
    BadCurve,
    DimensionCount,
    ample_gg_verdict,
    asymptotic_ample_certificate,
    dimension_count,
    effective_n_bound,
    enumerate_bad_curves,
    gieseker_character,
    kernel_character,
    multiplier_lower_bound,
    normalize_character,
    splitting_codim,
)
from .characters import (
    ChernCharacter,
    LogInvariants,
    from_log_invariants,
    line_bundle_character,
    make_character,
    parse_character,
)
from .cohomology import (
    CohomologyTriple,
    NonspecialTrace,
    WbnApplicability,
    nonspecial_all_twists,
    wbn_applicable,
    wbn_cohomology,
)
from .errors import (
    AmplecheckError,
    EnumerationLimitError,
    InvalidCharacterError,
    InvalidDivisorError,
    PreconditionError,
    SurfaceMismatchError,
)
from .positivity import (
    Condition,
    GGClassification,
    ObstructionReport,
    ObstructionVerdict,
    bogomolov_check,
    classify_global_generation,
    fulton_lazarsfeld_check,
    fulton_lazarsfeld_margin,
    gg_quick_criterion,
    necessary_obstructions,
    slope_conditions,
    tangent_bundle_character,
)
from .surfaces import (
    DivisorClass,
    Surface,
    SurfaceKind,
    canonical_class,
    h0_line_bundle,
    hilbert_polynomial,
    intersect,
    is_big_and_nef,
    is_effective,
    is_irreducible_curve_class,
    is_nef,
    parse_surface,
)

__version__ = "0.1.0"

__all__ = [
    "AmpleGGCertificate",
    "AmplecheckError",
    "AsymptoticCertificate",
    "BadCurve",
    "ChernCharacter",
    "CohomologyTriple",
    "Condition",
    "DimensionCount",
    "DivisorClass",
    "EnumerationLimitError",
    "GGClassification",
    "InvalidCharacterError",
    "InvalidDivisorError",
    "LogInvariants",
    "NonspecialTrace",
    "ObstructionReport",
    "ObstructionVerdict",
    "PreconditionError",
    "Surface",
    "SurfaceKind",
    "SurfaceMismatchError",
    "WbnApplicability",
    "ample_gg_verdict",
    "asymptotic_ample_certificate",
    "bogomolov_check",
    "canonical_class",
    "classify_global_generation",
    "dimension_count",
    "effective_n_bound",
    "enumerate_bad_curves",
    "from_log_invariants",
    "fulton_lazarsfeld_check",
    "fulton_lazarsfeld_margin",
    "gg_quick_criterion",
    "gieseker_character",
    "h0_line_bundle",
    "hilbert_polynomial",
    "intersect",
    "is_big_and_nef",
    "is_effective",
    "is_irreducible_curve_class",
    "is_nef",
    "kernel_character",
    "line_bundle_character",
    "make_character",
    "multiplier_lower_bound",
    "necessary_obstructions",
    "nonspecial_all_twists",
    "normalize_character",
    "parse_character",
    "parse_surface",
    "slope_conditions",
    "splitting_codim",
    "tangent_bundle_character",
    "wbn_applicable",
    "wbn_cohomology",
]
