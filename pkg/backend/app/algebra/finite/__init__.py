"""
Finite algebraic structures given by Cayley tables.
"""
from .axioms import (
    MAGMA_CHECKERS,
    RING_CHECKERS,
    check_abelian_group,
    check_class,
    check_commutative,
    check_division_ring,
    check_field,
    check_group,
    check_left_distributivity,
    check_monoid,
    check_near_ring,
    check_ring,
    check_semifield,
    check_semigroup,
    check_seminear_ring,
    check_semiring,
    find_idempotents,
    find_zero_divisors,
    identity_element,
    inverse_of,
    restrict,
)
from .report import AxiomReport, ReportBuilder, StructureClass, Violation, jsonable
from .subsets import ClosureEngine, closure_of, enumerate_closed_subsets, is_normal
from .tables import ElementId, FiniteMagma, FiniteRingTable

__all__ = [
    "ElementId",
    "FiniteMagma",
    "FiniteRingTable",
    "AxiomReport",
    "ReportBuilder",
    "StructureClass",
    "Violation",
    "jsonable",
    "MAGMA_CHECKERS",
    "RING_CHECKERS",
    "check_abelian_group",
    "check_class",
    "check_commutative",
    "check_division_ring",
    "check_field",
    "check_group",
    "check_left_distributivity",
    "check_monoid",
    "check_near_ring",
    "check_ring",
    "check_semifield",
    "check_semigroup",
    "check_seminear_ring",
    "check_semiring",
    "find_idempotents",
    "find_zero_divisors",
    "identity_element",
    "inverse_of",
    "restrict",
    "ClosureEngine",
    "closure_of",
    "enumerate_closed_subsets",
    "is_normal",
]
