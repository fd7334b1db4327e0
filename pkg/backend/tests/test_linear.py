"""
Tests for semivector spaces, restricted maps, inner products and
semilinear algebras.
"""
from fractions import Fraction

import pytest

from app.algebra.errors import DimensionMismatch, NotInLattice, Unsupported, UnsupportedProduct
from app.algebra.linear import (
    ProductRule,
    RestrictedMap,
    SemilinearDescriptor,
    SemiVecDescriptor,
    as_rule,
    audit_inner_product,
    cyclic_difference_matrix,
    inner_product,
    is_s_definite_basis,
    is_semilinear_algebra,
    is_semivector_space,
    orthogonality_readings,
    pair_sum_map,
    s_definite_dimension,
    sum_projection_map,
    verify_converging,
    verify_diverging,
    verify_restricted_transformation,
)


def space(component, n, scalars="Z0"):
    return SemiVecDescriptor.uniform(component, n, scalars)


class TestSemivectorSpaces:
    def test_nonnegative_integers(self):
        assert is_semivector_space(space("Z0", 3)).ok

    def test_rationals_over_integers(self):
        assert is_semivector_space(space("Q0", 2)).ok

    def test_rational_scalars_leave_the_integers(self):
        """3/7 * (1, 1) is not in Z0^2."""
        report = is_semivector_space(space("Z0", 2, "Q0"))
        assert not report.ok
        assert report.first().axiom == "scalar_action"
        a, v = report.first().witness
        assert a == Fraction(3, 7)
        assert v == (1, 1)

    def test_scalars_must_be_a_semifield(self):
        assert not is_semivector_space(space("Z", 2, "Z")).ok

    def test_name(self):
        assert space("Z0", 3).name == "Z0^3 over Z0"
        assert "x" in SemiVecDescriptor.parse(["Z0", "Q0"], "Z0").name

    def test_membership_dimension(self):
        with pytest.raises(DimensionMismatch):
            space("Z0", 2).contains((1, 2, 3))


class TestBases:
    def test_standard_basis(self):
        check = is_s_definite_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3, space("Z0", 3))
        assert check
        assert check.q_rank == 3

    def test_q_basis_that_is_not_a_semifield_basis(self):
        """(1,0) = (1,1) - (0,1) needs a negative coefficient."""
        check = is_s_definite_basis([(1, 1), (0, 1)], 2, space("Z0", 2))
        assert not check
        assert check.q_rank == 2
        assert check.unreachable == (1, 0)

    def test_scaled_permuted_basis(self):
        """(0,1,0) = (1/3)(0,3,0) is the first generator out of reach."""
        check = is_s_definite_basis([(0, 3, 0), (0, 0, 1), (4, 0, 0)], 3, space("Z0", 3))
        assert not check
        assert check.q_rank == 3
        assert check.unreachable == (0, 1, 0)

    def test_dependent_vectors(self):
        check = is_s_definite_basis([(1, 0), (2, 0)], 2, space("Z0", 2))
        assert not check
        assert check.q_rank == 1

    def test_vector_outside_the_space(self):
        assert not is_s_definite_basis([(-1, 0), (0, 1)], 2, space("Z0", 2))

    def test_dense_space_has_no_finite_basis(self):
        check = is_s_definite_basis([(1, 0), (0, 1)], 2, space("Q0", 2))
        assert not check
        assert "no finite basis" in check.reason

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            is_s_definite_basis([(1, 0)], 2, space("Z0", 3))

    def test_dimension(self):
        assert s_definite_dimension(2, [space("Z0", 2)]) == 2
        assert s_definite_dimension(2, [space("Q0", 2, "Q0")]) == 2

    def test_dimension_undefined(self):
        assert s_definite_dimension(2, [space("Q0", 2), space("Z", 2)]) is None


class TestRestrictedMaps:
    def test_sum_projection(self):
        m = sum_projection_map()
        assert m((1, 2, 3, 4, 5)) == (3, 4, 2, 12)
        assert verify_restricted_transformation(m, samples=100).ok

    def test_pair_sum(self):
        assert verify_restricted_transformation(pair_sum_map(), samples=100).ok

    def test_negative_entry_leaves_the_codomain(self):
        m = RestrictedMap.of([[1, -1]], space("Z0", 2), space("Z0", 1))
        report = verify_restricted_transformation(m, samples=50)
        assert report.first().axiom == "containment"
        assert report.first().witness == ((0, 1),)

    def test_semifields_must_agree(self):
        m = RestrictedMap.of([[1, 0], [0, 1]], space("Z0", 2), space("Q0", 2, "Q0"))
        report = verify_restricted_transformation(m, samples=20)
        assert "semifield" in report.axioms_failed()

    def test_shape(self):
        with pytest.raises(DimensionMismatch):
            RestrictedMap.of([[1, 0]], space("Z0", 3), space("Z0", 1))

    def test_unknown_named_rule(self):
        with pytest.raises(Unsupported):
            as_rule("square")


class TestConvergingAndDiverging:
    def test_zero_map_converges(self):
        assert verify_converging("zero", space("Z0", 2), samples=50).ok

    def test_identity_leaves_the_space(self):
        report = verify_converging("identity", space("Z0", 2), samples=50)
        assert report.axioms_failed() == ["image"]

    def test_abs_is_not_additive(self):
        report = verify_converging("abs", space("Z0", 2), samples=50)
        assert "additivity" in report.axioms_failed()

    def test_identity_diverges(self):
        assert verify_diverging("identity", space("Z0", 2), samples=50).ok

    def test_cyclic_differences_diverge(self):
        matrix = cyclic_difference_matrix(4)
        assert matrix[0] == (1, -1, 0, 0)
        assert matrix[3] == (-1, 0, 0, 1)
        assert verify_diverging(matrix, space("Z0", 4), samples=50).ok

    def test_abs_does_not_diverge(self):
        report = verify_diverging("abs", space("Z0", 2), samples=50)
        assert report.axioms_failed() == ["linearity"]


class TestInnerProducts:
    def test_standard_product(self):
        assert inner_product((1, 2), (3, 4), space("Z0", 2)) == 11

    def test_arguments_must_be_members(self):
        with pytest.raises(NotInLattice):
            inner_product((-1, 0), (1, 0), space("Z0", 2))

    def test_audit(self):
        assert audit_inner_product(space("Z0", 3), samples=100).ok

    def test_indefinite_form(self):
        report = audit_inner_product(space("Z0", 2), form=[[1, 0], [0, -1]], samples=50)
        assert "positivity" in report.axioms_failed()

    def test_form_shape(self):
        with pytest.raises(DimensionMismatch):
            inner_product((1, 2), (3, 4), space("Z0", 2), form=[[1]])

    def test_readings_on_nonnegative_vectors(self):
        readings = orthogonality_readings(space("Z0", 2))
        assert [r.holds for r in readings] == [True, True, True, False]
        x, y = readings[3].witness
        assert any(x) and any(y)
        assert sum(a * b for a, b in zip(x, y)) == 0

    def test_supports_differ_with_signs(self):
        readings = orthogonality_readings(space("Z", 2))
        assert not readings[2].holds


class TestSemilinearAlgebras:
    def test_coordinatewise(self):
        desc = SemilinearDescriptor(space("Z0", 3))
        assert is_semilinear_algebra(desc, samples=50).ok

    def test_matrix_product(self):
        desc = SemilinearDescriptor(space("Z0", 4), ProductRule.MATRIX)
        assert is_semilinear_algebra(desc, samples=50).ok

    def test_truncated_polynomials(self):
        desc = SemilinearDescriptor(space("Z0", 6), ProductRule.TRUNCATED_POLYNOMIAL)
        assert is_semilinear_algebra(desc, samples=20).ok

    def test_mixed_components_are_not_closed(self):
        """A rational entry times an integer one lands outside Z0."""
        w = SemiVecDescriptor.parse(["Z0", "Q0", "Z0", "Z0"], "Z0")
        report = is_semilinear_algebra(SemilinearDescriptor(w, ProductRule.MATRIX), samples=20)
        assert "closure(*)" in report.axioms_failed()

    def test_space_failure_carries_over(self):
        desc = SemilinearDescriptor(space("Z0", 2, "Q0"))
        assert not is_semilinear_algebra(desc, samples=10).ok

    def test_matrix_needs_square_dimension(self):
        with pytest.raises(DimensionMismatch):
            is_semilinear_algebra(SemilinearDescriptor(space("Z0", 3), ProductRule.MATRIX))

    def test_parse_rule(self):
        assert ProductRule.parse("truncated_polynomial") is ProductRule.TRUNCATED_POLYNOMIAL
        with pytest.raises(UnsupportedProduct):
            ProductRule.parse("cross")
