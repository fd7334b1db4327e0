"""
Exact algebra of lattice-like subsets of Q: cosets, double cosets,
products, intersections and closure tests.
"""

from .lattice import (
    EMPTY,
    Q,
    Q_NONNEG,
    Q_NONZERO,
    Q_POS,
    Z,
    Z_NONNEG,
    Z_NONZERO,
    Z_POS,
    ZERO,
    LatticeSet,
    Rat,
    SetKind,
    Sign,
    dense,
    format_set,
    intersect,
    is_closed_add,
    lattice,
    make,
    member,
    parse_set,
    rational_gcd,
    rational_lcm,
    subset_of,
    to_rat,
)
from .ops import (
    Ambient,
    double_coset,
    is_closed_mul,
    left_coset,
    negate,
    scalar_multiple,
    set_product,
    set_sum,
    translate,
)
from .oracle import enumerate_truncated, listing, pairwise_products, truncated_double_coset

__all__ = [
    "EMPTY",
    "Q",
    "Q_NONNEG",
    "Q_NONZERO",
    "Q_POS",
    "Z",
    "Z_NONNEG",
    "Z_NONZERO",
    "Z_POS",
    "ZERO",
    "LatticeSet",
    "Rat",
    "SetKind",
    "Sign",
    "dense",
    "format_set",
    "intersect",
    "is_closed_add",
    "lattice",
    "make",
    "member",
    "parse_set",
    "rational_gcd",
    "rational_lcm",
    "subset_of",
    "to_rat",
    "Ambient",
    "double_coset",
    "is_closed_mul",
    "left_coset",
    "negate",
    "scalar_multiple",
    "set_product",
    "set_sum",
    "translate",
    "enumerate_truncated",
    "listing",
    "pairwise_products",
    "truncated_double_coset",
]
