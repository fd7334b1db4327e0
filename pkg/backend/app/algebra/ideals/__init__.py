"""
Ideal enumeration and classification, and the Smarandache ideal notions
for finite rings, symbolic Z and Q, and semigroups of (Q \\ {0}, *).
"""

from .finite import (
    IdealClassification,
    RelativeIdealWitness,
    SIdealSearch,
    classify_all,
    classify_ideal,
    enumerate_ideals,
    field_subsets,
    find_s_definite_ideals,
    find_s_ideal,
    format_subset,
    principal_ideal,
)
from .symbolic import (
    FieldSideReport,
    IdealCheck,
    SpecialDefiniteIdeal,
    classify_group_side,
    classify_nZ,
    field_side_ideals,
    s_special_definite_ideal,
    sample_members,
    verify_semigroup_ideal,
)

__all__ = [
    "IdealClassification",
    "RelativeIdealWitness",
    "SIdealSearch",
    "classify_all",
    "classify_ideal",
    "enumerate_ideals",
    "field_subsets",
    "find_s_definite_ideals",
    "find_s_ideal",
    "format_subset",
    "principal_ideal",
    "FieldSideReport",
    "IdealCheck",
    "SpecialDefiniteIdeal",
    "classify_group_side",
    "classify_nZ",
    "field_side_ideals",
    "s_special_definite_ideal",
    "sample_members",
    "verify_semigroup_ideal",
]
