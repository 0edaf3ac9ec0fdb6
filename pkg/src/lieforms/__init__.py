"""Exact Lie algebra computations over Galois extensions.

Everything is computed with exact field arithmetic: towers of number
fields built from the rationals, Lie algebras given by structure
constants, Galois conjugation of constants, restriction and extension
of scalars, indecomposable decomposition with certificates, Pfaffian
quartic invariants, and counting forms over a fixed subfield.
"""

from .errors import (
    ConstraintViolatedError,
    DegenerateError,
    DegreeTooLargeError,
    IndexRangeError,
    JacobiError,
    LieformsError,
    ManifestError,
    NonRootError,
    NotClosedError,
    NotGaloisError,
    NotSkewError,
    NotSubLevelError,
    NotTwoStepError,
    OddSizeError,
    OracleUndecidedError,
    OwnerMismatchError,
    SingularMatrixError,
    TVanishesError,
    TowerMismatchError,
    UncertifiedDecompositionError,
    WrongShapeError,
    ZeroAlphaError,
    ZeroLambdaError,
    ZeroParameterError,
    ZeroScalarError,
)
from .polynomials import (
    Polynomial,
    factor_over_Q,
    is_irreducible_over_Q,
    rational_roots_list,
)
from .fields import (
    Automorphism,
    FieldElement,
    FieldTower,
    GaloisGroup,
    coords_over,
    cyclotomic_field,
    field_extend,
    fixed_by_group,
    format_element,
    galois_group,
    gaussian_rationals,
    is_level_of,
    lift_to,
    minpoly_of,
    parse_element,
    quadratic_field,
    rationals,
    relative_degree,
    sqrt_or_none,
)
from .liealg import (
    Fingerprint,
    LieAlgebra,
    LinearMap,
    SemiLinearMap,
    Vector,
    change_basis,
    direct_sum,
    fingerprint,
    is_ideal,
    restrict_to_span,
    verify_morphism,
    verify_sigma_isomorphism,
)
from .descent import (
    ConjugateOrbit,
    EmbeddingReport,
    Restriction,
    SumConjugateReport,
    canonical_embedding,
    conjugate,
    conjugate_orbit,
    conjugation_map,
    defined_over_witness_check,
    extend_scalars,
    restrict_scalars,
    underlying_iso_from_sigma,
    verify_sumconjugate,
)
from .pfaffian import (
    MultiPoly,
    PfaffianForm,
    TwoStepData,
    classical_S,
    classical_T,
    invariant_S,
    invariant_T,
    invariant_c,
    invariant_c_of,
    jay_matrix,
    pfaffian,
    pfaffian_form,
    projective_equivalence_check,
    refute_isomorphism_by_c,
    two_step_type,
)
from .decompose import (
    CERTIFIED,
    HEURISTIC,
    UNKNOWN,
    AssocAlgebra,
    Decomposition,
    FormCount,
    MatchReport,
    OrbitFamilyCount,
    Summand,
    Verdict,
    centroid,
    centroid_basis,
    count_forms,
    decompose_indecomposable,
    find_idempotent,
    isomorphism_verdict,
    krull_schmidt_match,
    minpoly_of_matrix,
    radical,
    roots_in_field,
    verify_decomposition,
    witness_invariants,
)
from .catalog import (
    OverFWitness,
    abelian,
    diagonal_ad_spectrum,
    g1_alpha,
    g1_iso_criterion,
    g_lambda,
    heisenberg,
    nintot_family,
    overFprop_witness,
    r3_iso_certificate,
    r3_iso_criterion,
    r3_lambda,
    r3_lambda_plus_abelian,
    spectra_match_up_to_scale,
)
from .manifest import (
    Manifest,
    algebra_entity,
    builtin_field,
    field_entity,
    load_manifest,
    parse_manifest,
    serialize_entity,
    serialize_manifest,
)

__version__ = "0.1.0"

__all__ = [
    "AssocAlgebra", "Automorphism", "CERTIFIED", "ConjugateOrbit",
    "ConstraintViolatedError", "Decomposition", "DegenerateError",
    "DegreeTooLargeError", "EmbeddingReport", "FieldElement", "FieldTower",
    "Fingerprint", "FormCount", "GaloisGroup", "HEURISTIC",
    "IndexRangeError", "JacobiError", "LieAlgebra", "LieformsError",
    "LinearMap", "Manifest", "ManifestError", "MatchReport", "MultiPoly",
    "NonRootError", "NotClosedError", "NotGaloisError", "NotSkewError",
    "NotSubLevelError", "NotTwoStepError", "OddSizeError",
    "OracleUndecidedError", "OrbitFamilyCount", "OverFWitness",
    "OwnerMismatchError", "PfaffianForm", "Polynomial", "Restriction",
    "SemiLinearMap", "SingularMatrixError", "SumConjugateReport", "Summand",
    "TVanishesError", "TowerMismatchError", "TwoStepData", "UNKNOWN",
    "UncertifiedDecompositionError", "Vector", "Verdict", "WrongShapeError",
    "ZeroAlphaError", "ZeroLambdaError", "ZeroParameterError",
    "ZeroScalarError", "abelian", "algebra_entity", "builtin_field",
    "canonical_embedding", "centroid", "centroid_basis", "change_basis",
    "classical_S", "classical_T", "conjugate", "conjugate_orbit",
    "conjugation_map", "coords_over", "count_forms", "cyclotomic_field",
    "decompose_indecomposable", "defined_over_witness_check",
    "diagonal_ad_spectrum", "direct_sum", "extend_scalars", "factor_over_Q",
    "field_entity", "field_extend", "find_idempotent", "fingerprint",
    "fixed_by_group", "format_element", "g1_alpha", "g1_iso_criterion",
    "g_lambda", "galois_group", "gaussian_rationals", "heisenberg",
    "invariant_S", "invariant_T", "invariant_c", "invariant_c_of",
    "is_ideal", "is_irreducible_over_Q", "is_level_of",
    "isomorphism_verdict", "jay_matrix", "krull_schmidt_match", "lift_to",
    "load_manifest", "minpoly_of", "minpoly_of_matrix", "nintot_family",
    "overFprop_witness", "parse_element", "parse_manifest", "pfaffian",
    "pfaffian_form", "projective_equivalence_check", "quadratic_field",
    "r3_iso_certificate", "r3_iso_criterion", "r3_lambda",
    "r3_lambda_plus_abelian", "radical", "rational_roots_list", "rationals",
    "refute_isomorphism_by_c", "relative_degree", "restrict_scalars",
    "restrict_to_span", "roots_in_field", "serialize_entity",
    "serialize_manifest", "spectra_match_up_to_scale", "sqrt_or_none",
    "two_step_type", "underlying_iso_from_sigma", "verify_decomposition",
    "verify_morphism", "verify_sigma_isomorphism", "verify_sumconjugate",
    "witness_invariants",
]
