"""
Builders for the named structures: Z_n, cyclic, dihedral and symmetric
groups, symmetric semigroups, polynomial quotients, group and semigroup
rings, matrix rings, quaternions, lattice semirings and truncated
polynomial algebras.
"""

from .groups import (
    build_zn,
    compose_left_first,
    cyclic,
    dihedral,
    permutation_label,
    symmetric_group,
    symmetric_semigroup,
    verify_on_build,
    zn_multiplicative,
)
from .magma_ring import CoefficientRing, MagmaRing, SupportedSum, group_ring, semigroup_ring
from .polynomial import (
    FieldCheck,
    Irreducibility,
    PolyModElement,
    PolyModRing,
    build_poly_quotient,
    format_poly,
    inverse_in_quotient,
    is_irreducible,
    poly_divmod,
    poly_mul,
    prime_subfield,
    prime_subfield_matches_zp,
    quotient_is_field,
)
from .quaternion import I, J, K, ONE, Quaternion, integral_inverse, quaternion_mul
from .rings import chain_lattice, lattice_semiring, matrix_ring
from .truncated import TruncPolyAlgebra, trunc_poly_mul

__all__ = [
    "build_zn",
    "compose_left_first",
    "cyclic",
    "dihedral",
    "permutation_label",
    "symmetric_group",
    "symmetric_semigroup",
    "verify_on_build",
    "zn_multiplicative",
    "CoefficientRing",
    "MagmaRing",
    "SupportedSum",
    "group_ring",
    "semigroup_ring",
    "FieldCheck",
    "Irreducibility",
    "PolyModElement",
    "PolyModRing",
    "build_poly_quotient",
    "format_poly",
    "inverse_in_quotient",
    "is_irreducible",
    "poly_divmod",
    "poly_mul",
    "prime_subfield",
    "prime_subfield_matches_zp",
    "quotient_is_field",
    "I",
    "J",
    "K",
    "ONE",
    "Quaternion",
    "integral_inverse",
    "quaternion_mul",
    "chain_lattice",
    "lattice_semiring",
    "matrix_ring",
    "TruncPolyAlgebra",
    "trunc_poly_mul",
]
