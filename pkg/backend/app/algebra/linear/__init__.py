"""
Semivector spaces inside Q^n: S-definite special bases and dimension,
restricted, converging and diverging maps, inner products and semilinear
algebras.
"""

from .algebra import (
    ProductRule,
    SemilinearDescriptor,
    coordinatewise,
    is_semilinear_algebra,
    matrix_product,
    truncated_product,
)
from .inner import (
    OrthogonalityReading,
    audit_inner_product,
    identity_form,
    inner_product,
    orthogonality_readings,
)
from .maps import (
    NAMED_RULES,
    RestrictedMap,
    apply_matrix,
    as_matrix,
    as_rule,
    cyclic_difference_matrix,
    pair_sum_map,
    sum_projection_map,
    verify_converging,
    verify_diverging,
    verify_restricted_transformation,
)
from .spaces import (
    BasisCheck,
    SemiVecDescriptor,
    Vector,
    as_vector,
    is_s_definite_basis,
    is_semivector_space,
    s_definite_dimension,
    unit_vector,
)

__all__ = [
    "ProductRule",
    "SemilinearDescriptor",
    "coordinatewise",
    "is_semilinear_algebra",
    "matrix_product",
    "truncated_product",
    "OrthogonalityReading",
    "audit_inner_product",
    "identity_form",
    "inner_product",
    "orthogonality_readings",
    "NAMED_RULES",
    "RestrictedMap",
    "apply_matrix",
    "as_matrix",
    "as_rule",
    "cyclic_difference_matrix",
    "pair_sum_map",
    "sum_projection_map",
    "verify_converging",
    "verify_diverging",
    "verify_restricted_transformation",
    "BasisCheck",
    "SemiVecDescriptor",
    "Vector",
    "as_vector",
    "is_s_definite_basis",
    "is_semivector_space",
    "s_definite_dimension",
    "unit_vector",
]
