"""
Tests for the finiteness conjecture sweeps.
"""
import pytest

from app.algebra.detect import Conjecture, Family, MemberResult, family_members, sweep, sweep_member
from app.algebra.errors import Budget, UnsupportedFamily


class TestFamilies:
    def test_dihedral_members(self):
        assert family_members(Conjecture.C1, Family.DIHEDRAL, 12) == [1, 2, 3, 4, 5, 6]

    def test_fields_are_primes(self):
        assert family_members(Conjecture.C3, Family.ZN, 12) == [2, 3, 5, 7, 11]

    def test_poly_quotients_in_canonical_order(self):
        members = family_members(Conjecture.C2, Family.POLY_QUOTIENT, 4)
        assert members == [
            [2, [0, 1]], [2, [1, 1]],
            [2, [0, 0, 1]], [2, [1, 0, 1]], [2, [0, 1, 1]], [2, [1, 1, 1]],
            [3, [0, 1]], [3, [1, 1]], [3, [2, 1]],
        ]

    def test_field_quotients_skip_reducible_moduli(self):
        members = family_members(Conjecture.C3, Family.POLY_QUOTIENT, 8)
        assert [2, [1, 1, 1]] in members
        assert [2, [1, 0, 1]] not in members
        assert [2, [1, 1, 0, 1]] in members

    def test_family_must_fit_the_conjecture(self):
        with pytest.raises(UnsupportedFamily):
            family_members(Conjecture.C3, Family.CYCLIC, 5)

    def test_unknown_family(self):
        with pytest.raises(UnsupportedFamily):
            Family.parse("quaternion")

    def test_aliases(self):
        assert Family.parse("zn-rings") is Family.ZN
        assert Family.parse("S_n") is Family.SYMMETRIC

    def test_symmetric_degree_guard(self):
        with pytest.raises(Budget):
            family_members(Conjecture.C1, Family.SYMMETRIC, 7)

    def test_table_guard(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_MAX_TABLE_ORDER", "16")
        with pytest.raises(Budget):
            family_members(Conjecture.C2, Family.ZN, 17)


class TestMembers:
    def test_cyclic_member(self):
        result = sweep_member("C1", "cyclic", 6)
        assert result.structure == "C_6"
        assert result.order == 6
        assert result.counterexamples == []
        assert result.examined > 0

    def test_closed_subsets_are_subgroups(self):
        result = sweep_member(Conjecture.C5, Family.DIHEDRAL, 4)
        assert result.counterexamples == []
        assert result.examined == 10

    def test_non_field_is_skipped(self):
        result = sweep_member(Conjecture.C3, Family.ZN, 6)
        assert result.skipped == "not a field"

    def test_near_ring_member(self):
        result = sweep_member(Conjecture.C4, Family.ZN_NEAR_RING, 5)
        assert result.structure == "(Z_5,+,a*b=a)"
        assert result.counterexamples == []

    def test_dict_round_trip(self):
        result = sweep_member(Conjecture.C2, Family.POLY_QUOTIENT, [2, [1, 0, 1]])
        assert MemberResult.from_dict(result.to_dict()) == result


class TestSweeps:
    def test_trivial_size_is_vacuous(self):
        report = sweep(Conjecture.C1, Family.CYCLIC, 1)
        assert report.upheld
        assert report.sizes == ["C_1"]

    def test_small_cyclic(self):
        report = sweep("C1", "cyclic", 12)
        assert report.upheld
        assert report.sizes == [f"C_{n}" for n in range(1, 13)]

    def test_report_dict(self):
        data = sweep(Conjecture.C3, Family.ZN, 12).to_dict()
        assert data["conjecture"] == "C3"
        assert data["witness_count"] == 0
        assert data["sizes"] == ["Z_2", "Z_3", "Z_5", "Z_7", "Z_11"]
        assert data["skipped"] == []

    def test_deterministic(self):
        first = sweep(Conjecture.C2, Family.ZN, 10).to_dict()
        assert sweep(Conjecture.C2, Family.ZN, 10).to_dict() == first

    def test_poly_quotient_rings(self):
        report = sweep(Conjecture.C2, Family.POLY_QUOTIENT, 8)
        assert report.upheld

    def test_poly_quotient_fields(self):
        report = sweep(Conjecture.C3, Family.POLY_QUOTIENT, 9)
        assert report.upheld
        assert len(report.sizes) == len(family_members(Conjecture.C3, Family.POLY_QUOTIENT, 9))

    def test_time_budget(self):
        with pytest.raises(Budget):
            sweep(Conjecture.C1, Family.CYCLIC, 5, time_budget=-1)

    def test_eager_without_broker(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_SWEEP_EAGER", "false")
        report = sweep(Conjecture.C4, Family.ZN_NEAR_RING, 6)
        assert report.upheld


@pytest.mark.slow
class TestFullSweeps:
    """The finiteness claims at their stated sizes."""

    @pytest.mark.parametrize(
        "family, max_size",
        [(Family.CYCLIC, 64), (Family.DIHEDRAL, 32), (Family.SYMMETRIC, 4)],
    )
    def test_no_finite_special_definite_group(self, family, max_size):
        assert sweep(Conjecture.C1, family, max_size).upheld

    @pytest.mark.parametrize(
        "family, max_size",
        [(Family.CYCLIC, 64), (Family.DIHEDRAL, 32), (Family.SYMMETRIC, 4)],
    )
    def test_closed_subsets_of_groups(self, family, max_size):
        assert sweep(Conjecture.C5, family, max_size).upheld

    def test_no_finite_definite_special_ring(self):
        assert sweep(Conjecture.C2, Family.ZN, 24).upheld

    def test_no_finite_special_definite_field(self):
        report = sweep(Conjecture.C3, Family.ZN, 23)
        assert report.upheld
        assert report.sizes[-1] == "Z_23"

    def test_no_finite_definite_special_near_ring(self):
        assert sweep(Conjecture.C4, Family.ZN_NEAR_RING, 24).upheld
