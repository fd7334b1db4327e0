"""
Tests for property detection, certificates, the symbolic catalog and
strong commutativity.
"""
from dataclasses import replace
from fractions import Fraction

import pytest

from app.algebra.constructors import build_zn, matrix_ring
from app.algebra.detect import (
    Certificate,
    Mode,
    NotFound,
    Property,
    SymbolicStructure,
    Verdict,
    catalog_entries,
    certify,
    definite_special_subgroups,
    detect,
    detect_strongly_commutative,
    is_definite_special_simple,
    lookup,
    near_ring_commutativity,
    verify_certificate,
)
from app.algebra.detect.homomorphism import LatticeMap, SymbolicOperand, verify_s_homomorphism
from app.algebra.errors import AxiomFailure, ClassMismatch, PartialMap
from app.algebra.finite import FiniteRingTable, check_field, restrict
from app.algebra.symbolic import Q_NONZERO, Z, Z_POS, format_set
from app.utils.metrics import render_metrics


def left_zero_near_ring(n):
    """(Z_n, +) with a*b = a."""
    return FiniteRingTable.from_tables(
        add=[[(a + b) % n for b in range(n)] for a in range(n)],
        mul=[[a for _ in range(n)] for a in range(n)],
        name=f"N_{n}",
    )


class TestExhaustive:
    def test_units_of_z10(self, z10_mul):
        """{1,3,7,9} is the first group inside (Z_10, *)."""
        cert = detect(z10_mul, Property.S_SEMIGROUP)
        assert isinstance(cert, Certificate)
        assert cert.witness == (1, 3, 7, 9)
        assert cert.witness_labels == ("1", "3", "7", "9")
        assert cert.mode is Mode.EXHAUSTIVE
        assert cert.weak_axioms.ok
        assert not cert.strong_failure.ok
        assert verify_certificate(cert)

    def test_ring_searches_its_multiplication(self, z10):
        cert = detect(z10, "s-semigroup")
        assert cert.witness_labels == ("1", "3", "7", "9")

    def test_group_is_not_an_s_semigroup(self, c6):
        result = detect(c6, Property.S_SEMIGROUP)
        assert isinstance(result, NotFound)
        assert result.exhaustive
        assert "itself a group" in result.reason

    def test_finite_groups_have_no_semigroup_witness(self, c6, d3):
        """Closed subsets of a finite group are subgroups."""
        for group in (c6, d3):
            result = detect(group, Property.S_SPECIAL_DEFINITE_GROUP)
            assert isinstance(result, NotFound)
            assert result.exhaustive
            assert result.examined > 0

    def test_parent_class_mismatch(self, z10_mul, c6):
        with pytest.raises(ClassMismatch):
            detect(z10_mul, Property.S_SPECIAL_DEFINITE_GROUP)
        with pytest.raises(ClassMismatch):
            detect(c6, Property.S_RING)

    def test_s_ring_z6(self, z6):
        cert = detect(z6, Property.S_RING)
        assert cert.witness == (0, 2, 4)
        assert cert.strong_failure is None
        assert verify_certificate(cert)

    def test_finite_rings_have_no_definite_special_subring(self, z6):
        """Additively closed subsets of a finite ring are subgroups, hence rings."""
        result = detect(z6, Property.S_DEFINITE_SPECIAL_RING)
        assert isinstance(result, NotFound)
        assert result.exhaustive

    def test_doubly_strong_is_both_parts(self, z6, z10, z12, gf8):
        rings = [z6, z10, z12, build_zn(5), gf8.to_ring_table(), matrix_ring(build_zn(2), 2)]
        for ring in rings:
            s_ring = detect(ring, Property.S_RING)
            special = detect(ring, Property.S_DEFINITE_SPECIAL_RING)
            both = detect(ring, Property.S_DOUBLY_STRONG)
            assert both.found == (s_ring.found and special.found)

    def test_witness_in_a_subring_lifts(self, z12):
        """A field inside 2Z_12 is also a field inside Z_12."""
        subring = restrict(z12, z12.indices_of(["0", "2", "4", "6", "8", "10"]))
        cert = detect(subring, Property.S_RING)
        assert cert.witness_labels == ("0", "4", "8")
        assert check_field(z12, z12.indices_of(list(cert.witness_labels))).ok

    def test_gf8_has_no_prime_field_witness(self, gf8):
        result = detect(gf8.to_ring_table(), Property.S_SPECIAL_DEFINITE_PRIME_FIELD)
        assert isinstance(result, NotFound)

    def test_catalog_mode_on_finite_structure_is_silent(self, z6):
        result = detect(z6, Property.S_RING, mode="catalog")
        assert isinstance(result, NotFound)
        assert not result.exhaustive

    def test_runs_are_counted(self, z6):
        detect(z6, Property.S_RING)
        assert b"detector_runs_total" in render_metrics()

    @pytest.mark.parametrize("n", range(2, 17))
    def test_emitted_certificates_reverify(self, n):
        ring = build_zn(n)
        for structure, prop in ((ring.multiplicative_magma(), Property.S_SEMIGROUP),
                                (ring, Property.S_RING)):
            result = detect(structure, prop)
            if isinstance(result, Certificate):
                assert verify_certificate(result)


class TestCertificates:
    def test_tampered_witness(self, z10_mul):
        cert = detect(z10_mul, Property.S_SEMIGROUP)
        assert not verify_certificate(replace(cert, witness=(0, 1)))
        assert not verify_certificate(replace(cert, witness=(1, 3, 7)))
        assert not verify_certificate(replace(cert, witness=tuple(range(10))))

    def test_tampered_reports(self, z10_mul):
        cert = detect(z10_mul, Property.S_SEMIGROUP)
        assert not verify_certificate(replace(cert, strong_failure=None))
        assert not verify_certificate(replace(cert, weak_axioms=cert.strong_failure))

    def test_not_found_does_not_verify(self, c6):
        assert not verify_certificate(detect(c6, Property.S_SEMIGROUP))
        assert not verify_certificate(None)

    def test_given_witness(self, z10_mul):
        """{2,4,6,8} is a group with identity 6."""
        cert = certify(z10_mul, Property.S_SEMIGROUP, ["2", "4", "6", "8"])
        assert cert.mode is Mode.GIVEN
        assert cert.witness == (2, 4, 6, 8)
        assert verify_certificate(cert)

    def test_given_witness_not_closed(self, z10_mul):
        with pytest.raises(AxiomFailure):
            certify(z10_mul, Property.S_SEMIGROUP, ["2", "4"])

    def test_given_witness_must_be_proper(self, z10_mul):
        with pytest.raises(AxiomFailure):
            certify(z10_mul, Property.S_SEMIGROUP, list(range(10)))

    def test_given_subgroup_is_excluded(self, c6):
        with pytest.raises(AxiomFailure):
            certify(c6, Property.S_SPECIAL_DEFINITE_GROUP, [0, 3])

    def test_compound_properties_are_not_given(self, z6):
        with pytest.raises(ClassMismatch):
            certify(z6, Property.S_DOUBLY_STRONG, [0, 3])

    def test_to_dict(self, z10_mul):
        data = detect(z10_mul, Property.S_SEMIGROUP).to_dict()
        assert data["property"] == "s-semigroup"
        assert data["witness"] == [1, 3, 7, 9]
        assert data["weak_axioms"]["ok"] is True
        assert data["strong_failure"]["ok"] is False


class TestCatalog:
    def test_units_of_z(self):
        cert = detect(SymbolicStructure.Z_MUL, Property.S_SEMIGROUP, mode="catalog")
        assert cert.witness == "{1,-1}"
        assert cert.mode is Mode.CATALOG
        assert cert.structure == "(Z,*)"

    def test_positive_integers_in_z(self):
        cert = detect(SymbolicStructure.Z_ADD, Property.S_SPECIAL_DEFINITE_GROUP, mode="catalog")
        assert cert.witness == format_set(Z_POS)
        assert verify_certificate(cert)

    def test_catalog_silence(self):
        result = detect(SymbolicStructure.Q_FIELD, Property.S_RING, mode="catalog")
        assert isinstance(result, NotFound)
        assert not result.exhaustive

    def test_wrong_parent(self):
        with pytest.raises(ClassMismatch):
            detect(SymbolicStructure.Z_MUL, Property.S_RING, mode="catalog")

    def test_symbolic_needs_catalog_mode(self):
        with pytest.raises(ClassMismatch):
            detect(SymbolicStructure.Z_ADD, Property.S_SPECIAL_DEFINITE_GROUP)

    def test_every_entry_reverifies(self):
        for structure, prop in catalog_entries():
            cert = detect(structure, prop, mode="catalog")
            assert isinstance(cert, Certificate), (structure, prop)
            assert verify_certificate(cert), (structure, prop)
            if cert.weak_axioms is not None:
                assert cert.weak_axioms.ok, (structure, prop)
            if cert.strong_failure is not None:
                assert not cert.strong_failure.ok, (structure, prop)

    def test_entries_are_deterministic(self):
        for structure, prop in catalog_entries():
            assert lookup(structure, prop) == lookup(structure, prop)

    def test_tampered_catalog_certificate(self):
        cert = lookup(SymbolicStructure.Q_FIELD, Property.S_SPECIAL_DEFINITE_FIELD)
        assert not verify_certificate(replace(cert, witness="Q"))

    def test_qs3_doubly_strong_parts(self):
        cert = lookup(SymbolicStructure.QS3, Property.S_DOUBLY_STRONG)
        assert [p.witness for p in cert.parts] == ["Q*e", "Z0*e"]

    def test_gl2_generated_semigroup(self):
        cert = lookup(SymbolicStructure.GL2_Q, Property.COMMUTATIVE_SSDG)
        assert cert.witness == "<[1,-2;-2,1]>"


class TestCommutativity:
    def test_gl2_is_not_strongly_commutative(self):
        verdict = detect_strongly_commutative(SymbolicStructure.GL2_Q)
        assert verdict.verdict is Verdict.FALSE
        assert verdict.pair == ("[1,1;0,1]", "[1,0;1,1]")
        assert not verdict

    def test_abelian_groups(self):
        assert detect_strongly_commutative(SymbolicStructure.Z_ADD).verdict is Verdict.TRUE
        assert detect_strongly_commutative(SymbolicStructure.Q_NONZERO_MUL)

    def test_no_stored_verdict(self):
        assert detect_strongly_commutative(SymbolicStructure.Z_MUL).verdict is Verdict.UNKNOWN

    def test_finite_group(self, c6):
        verdict = detect_strongly_commutative(c6)
        assert verdict.verdict is Verdict.NO_SEMIGROUP_SUBSETS
        result = detect(c6, Property.STRONGLY_COMMUTATIVE_SSDG)
        assert isinstance(result, NotFound)
        assert result.reason == "no_semigroup_subsets"

    def test_near_ring_of_z(self):
        result = near_ring_commutativity(SymbolicStructure.Z_NEAR_RING)
        assert result.commutative is False
        assert result.strongly.pair == (0, 1)

    def test_finite_near_ring(self):
        result = near_ring_commutativity(left_zero_near_ring(3))
        assert result.commutative is False
        assert result.strongly.verdict is Verdict.NO_SEMIGROUP_SUBSETS


class TestGroupStructure:
    def test_cyclic_group_has_no_definite_special_subgroups(self, c6):
        assert definite_special_subgroups(c6) == []
        assert not is_definite_special_simple(c6)

    def test_needs_group(self, z10_mul):
        with pytest.raises(ClassMismatch):
            definite_special_subgroups(z10_mul)


class TestHomomorphisms:
    def test_multiplication_by_three_on_z6(self, z6):
        assert verify_s_homomorphism(lambda a: 3 * a % 6, z6, z6).ok

    def test_doubling_is_not_multiplicative(self, z6):
        report = verify_s_homomorphism(lambda a: 2 * a % 6, z6, z6)
        assert report.axioms_failed() == ["multiplicativity"]
        assert report.first().witness == (1, 1)

    def test_label_mapping(self):
        z2, z4 = build_zn(2), build_zn(4)
        report = verify_s_homomorphism({"0": "0", "1": "2"}, z2, z4)
        assert not report.ok

    def test_partial_map(self, z6):
        with pytest.raises(PartialMap):
            verify_s_homomorphism({0: 0}, z6, z6)

    def test_ring_against_magma(self, z6, c6):
        with pytest.raises(ClassMismatch):
            verify_s_homomorphism({i: i for i in range(6)}, z6, c6)

    def test_symbolic_scaling(self):
        add = SymbolicOperand(Z, "add")
        assert verify_s_homomorphism(LatticeMap(Fraction(2)), add, add).ok
        ring = SymbolicOperand(Z, "ring")
        assert verify_s_homomorphism(LatticeMap(), ring, ring).ok
        assert not verify_s_homomorphism(LatticeMap(Fraction(2)), ring, ring).ok

    def test_addition_to_multiplication(self):
        """x -> 2^x takes (Z+, +) into (Q\\{0}, *)."""
        report = verify_s_homomorphism(
            lambda x: Fraction(2) ** int(x),
            SymbolicOperand(Z_POS, "add"),
            SymbolicOperand(Q_NONZERO, "mul"),
            samples=50,
        )
        assert report.ok

    def test_symbolic_partial_map(self):
        add = SymbolicOperand(Z_POS, "add")
        with pytest.raises(PartialMap):
            verify_s_homomorphism({1: 1}, add, add)
