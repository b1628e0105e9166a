"""Exact Galois-ring arithmetic, Cauchy MDS constructions and MDS-preserving maps."""

from .cauchy import (
    CauchyKind,
    CauchySpec,
    build_cauchy,
    cauchy_det_closed_form,
    consecutive_nodes,
    tau_prime,
    type2_involution_witness,
    validate,
    xi_powers,
)
from .errors import (
    ConstructionRejected,
    ContextMismatchError,
    DocumentError,
    GaloisMDSError,
    InvalidDivisorError,
    InvalidInputError,
    NoGeneratorError,
    NoIsomorphismError,
    NotAUnitError,
    NotBasicIrreducibleError,
)
from .finite_field import FFElement, FiniteField, is_irreducible, is_primitive
from .galois_ring import GaloisRing, GRElement, PAdicDigits, teichmuller_generator
from .matrices import (
    GRMatrix,
    MDSVerdict,
    first_singular_minor,
    mat_det,
    mat_is_involutory,
    mat_is_mds_exhaustive,
    mat_is_mds_fast,
    mat_mul,
)
from .morphisms import (
    ExtensionContext,
    MorphismFamily,
    MorphismKind,
    MorphismSpec,
    apply_morphism_to_matrix,
    check_involutory_preserved,
    compose_scaled,
    enumerate_scaled_automorphisms,
    enumerate_scaled_isomorphisms,
    find_conjugate_exponents,
    frobenius_ext_auto,
    frobenius_power,
    inverse,
    presentation_isomorphism,
    scaled_automorphism,
)
from .zmod_poly import ZMod, ZPoly

__version__ = "0.1.0"

__all__ = [
    "CauchyKind",
    "CauchySpec",
    "ConstructionRejected",
    "ContextMismatchError",
    "DocumentError",
    "ExtensionContext",
    "FFElement",
    "FiniteField",
    "GRElement",
    "GRMatrix",
    "GaloisMDSError",
    "GaloisRing",
    "InvalidDivisorError",
    "InvalidInputError",
    "MDSVerdict",
    "MorphismFamily",
    "MorphismKind",
    "MorphismSpec",
    "NoGeneratorError",
    "NoIsomorphismError",
    "NotAUnitError",
    "NotBasicIrreducibleError",
    "PAdicDigits",
    "ZMod",
    "ZPoly",
    "apply_morphism_to_matrix",
    "build_cauchy",
    "cauchy_det_closed_form",
    "check_involutory_preserved",
    "compose_scaled",
    "consecutive_nodes",
    "enumerate_scaled_automorphisms",
    "enumerate_scaled_isomorphisms",
    "find_conjugate_exponents",
    "first_singular_minor",
    "frobenius_ext_auto",
    "frobenius_power",
    "inverse",
    "is_irreducible",
    "is_primitive",
    "mat_det",
    "mat_is_involutory",
    "mat_is_mds_exhaustive",
    "mat_is_mds_fast",
    "mat_mul",
    "presentation_isomorphism",
    "scaled_automorphism",
    "tau_prime",
    "teichmuller_generator",
    "type2_involution_witness",
    "validate",
    "xi_powers",
]
