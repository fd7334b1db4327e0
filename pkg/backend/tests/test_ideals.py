"""
Tests for ideal enumeration, classification and the Smarandache ideal searches.
"""
from fractions import Fraction

import pytest

from app.algebra.constructors import build_zn, matrix_ring
from app.algebra.errors import (
    AxiomFailure,
    ImproperIdeal,
    NotAField,
    NotAnIdeal,
    NotASemigroup,
    NotCommutative,
    NotSubset,
)
from app.algebra.ideals import (
    classify_all,
    classify_group_side,
    classify_ideal,
    classify_nZ,
    enumerate_ideals,
    field_side_ideals,
    find_s_definite_ideals,
    find_s_ideal,
    principal_ideal,
    s_special_definite_ideal,
    verify_semigroup_ideal,
)
from app.algebra.finite import FiniteRingTable
from app.algebra.symbolic import Q_NONZERO, Z_NONZERO, Z_POS, Sign, lattice, member


def flags(c):
    return (c.minimal, c.principal, c.prime, c.maximal)


class TestFiniteIdeals:
    def test_z12_has_six_ideals(self, z12):
        assert enumerate_ideals(z12) == [
            (0,), (0, 6), (0, 4, 8), (0, 3, 6, 9), (0, 2, 4, 6, 8, 10), tuple(range(12)),
        ]

    def test_z12_classification(self, z12):
        by_ideal = {c.ideal: c for c in classify_all(z12)}
        for name in ("{0,6}", "{0,4,8}"):
            assert flags(by_ideal[name]) == (True, True, False, False)
        for name in ("{0,2,4,6,8,10}", "{0,3,6,9}"):
            c = by_ideal[name]
            assert c.maximal and c.principal
        assert by_ideal["{0,6}"].prime_witness == ("2", "3")
        assert by_ideal["{0,4,8}"].larger_ideal == "{0,2,4,6,8,10}"
        assert by_ideal["{0}"].trivial

    def test_z6_both_ideals_have_every_flag(self, z6):
        """{0,3} and {0,2,4} are prime, maximal, minimal and principal at once."""
        nontrivial = [c for c in classify_all(z6) if not c.trivial]
        assert [c.ideal for c in nontrivial] == ["{0,3}", "{0,2,4}"]
        for c in nontrivial:
            assert flags(c) == (True, True, True, True)

    def test_principal_ideal(self, z12):
        assert principal_ideal(z12, 8) == (0, 4, 8)
        assert principal_ideal(z12, 5) == tuple(range(12))

    def test_not_an_ideal(self, z12):
        with pytest.raises(NotAnIdeal):
            classify_ideal(z12, [0, 5])

    def test_needs_commutative_ring(self):
        with pytest.raises(NotCommutative):
            enumerate_ideals(matrix_ring(build_zn(2), 2))

    def test_near_ring_is_not_a_ring(self):
        ring = FiniteRingTable.from_tables(
            add=[[(a + b) % 3 for b in range(3)] for a in range(3)],
            mul=[[a for _ in range(3)] for a in range(3)],
        )
        with pytest.raises(AxiomFailure):
            enumerate_ideals(ring)


class TestSIdeals:
    def test_z12_s_ideal(self, z12):
        """{0,2,...,10} is an ideal containing the field {0,4,8}."""
        search = find_s_ideal(z12)
        assert search.found
        assert search.first == ((0, 2, 4, 6, 8, 10), (0, 4, 8))
        assert (0, 4, 8) in search.near_misses

    def test_z6_only_near_misses(self, z6):
        search = find_s_ideal(z6)
        assert not search.found
        assert search.near_misses == [(0, 3), (0, 2, 4)]

    def test_relative_ideals(self, z12):
        witnesses = find_s_definite_ideals(z12, (0, 4, 8))
        assert [w.ideal for w in witnesses] == [(0, 6), (0, 4, 8), (0, 3, 6, 9), (0, 2, 4, 6, 8, 10)]
        for w in witnesses:
            assert all(z12.times(s, b) in w.ideal for s, b in w.pairs)

    def test_relative_ideals_need_field(self, z12):
        with pytest.raises(NotAField):
            find_s_definite_ideals(z12, (0, 6))


class TestIntegerIdeals:
    def test_composite(self):
        c = classify_nZ(6)
        assert not c.prime and not c.maximal and not c.minimal and c.principal
        assert c.prime_witness == ("2", "3")
        assert c.larger_ideal == "2Z"
        assert c.smaller_ideal == "12Z"

    def test_prime(self):
        c = classify_nZ(7)
        assert c.prime and c.maximal and not c.minimal

    def test_improper(self):
        with pytest.raises(ImproperIdeal):
            classify_nZ(1)

    def test_s_special_definite(self):
        result = s_special_definite_ideal(3)
        assert result.holds
        assert result.semiring == "3*Z+,0"
        assert result.negation_witness == "-3"


class TestSemigroupIdeals:
    def test_even_integers(self):
        assert verify_semigroup_ideal(Z_NONZERO, lattice(2, Sign.NONZERO))
        assert verify_semigroup_ideal(Z_POS, lattice(2))

    def test_failure_has_witness(self):
        check = verify_semigroup_ideal(Q_NONZERO, Z_NONZERO)
        assert not check
        x, y, product = check.witness
        assert product == x * y
        assert not member(Z_NONZERO, product)
        assert x == Fraction(1, 7)

    def test_positive_integers_witness_is_smallest(self):
        check = verify_semigroup_ideal(Z_NONZERO, Z_POS)
        assert not check
        assert check.witness == (-1, 1, -1)
        assert not member(Z_POS, Fraction(-5) * 3)

    def test_needs_semigroup(self):
        with pytest.raises(NotASemigroup):
            verify_semigroup_ideal(lattice(1, Sign.NEG), lattice(2, Sign.NEG))

    def test_needs_subset(self):
        with pytest.raises(NotSubset):
            verify_semigroup_ideal(Z_POS, Z_NONZERO)

    def test_group_side(self):
        c = classify_group_side(lattice(6, Sign.NONZERO), Z_NONZERO)
        assert not c.prime
        assert c.larger_ideal == "2*Z!0"
        assert classify_group_side(lattice(5), Z_POS).maximal
        with pytest.raises(ImproperIdeal):
            classify_group_side(Z_POS, Z_POS)

    def test_field_side(self):
        report = field_side_ideals(lattice(2, Sign.ALL), [4, 6])
        four, six = report.classifications
        assert four.maximal and not four.prime
        assert four.prime_witness == ("2", "2")
        assert six.maximal and six.prime
        assert report.minimal_ideals == []
