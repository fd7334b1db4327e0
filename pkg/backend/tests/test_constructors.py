"""
Tests for the named structure builders.
"""
import random
from itertools import product

import pytest

from app.algebra.constructors import (
    ONE,
    CoefficientRing,
    I,
    J,
    K,
    Quaternion,
    TruncPolyAlgebra,
    build_poly_quotient,
    build_zn,
    chain_lattice,
    compose_left_first,
    cyclic,
    dihedral,
    group_ring,
    integral_inverse,
    inverse_in_quotient,
    is_irreducible,
    lattice_semiring,
    matrix_ring,
    poly_mul,
    prime_subfield,
    prime_subfield_matches_zp,
    quaternion_mul,
    quotient_is_field,
    semigroup_ring,
    symmetric_group,
    symmetric_semigroup,
    trunc_poly_mul,
)
from app.algebra.errors import AxiomFailure, NonPrimeModulus, SizeGuard, ZeroDegree
from app.algebra.finite import check_field, check_group, check_ring, check_semigroup
from app.services.report_service import quotient_discrepancies


class TestGroups:
    def test_zn_tables(self, z12):
        assert z12.order == 12
        assert z12.labels[7] == "7"
        assert z12.times(5, 7) == 11

    def test_zn_size_guard(self):
        with pytest.raises(SizeGuard):
            build_zn(0)

    def test_zn_size_guard_from_settings(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_MAX_TABLE_ORDER", "10")
        with pytest.raises(SizeGuard):
            build_zn(11)

    def test_cyclic(self, c6):
        assert c6.name == "C_6"
        assert check_group(c6).ok

    def test_dihedral_labels_and_order(self, d3):
        assert d3.order == 6
        assert d3.labels == ("e", "b", "b^2", "a", "ba", "b^2a")
        assert check_group(d3).ok

    def test_dihedral_relations(self):
        """a^2 = b^m = e and bab = a."""
        d4 = dihedral(4)
        e, a, b = d4.index_of("e"), d4.index_of("a"), d4.index_of("b")
        assert d4.op(a, a) == e
        power = e
        for _ in range(4):
            power = d4.op(power, b)
        assert power == e
        assert d4.op(d4.op(b, a), b) == a

    def test_dihedral_is_not_abelian(self, d3):
        a, b = d3.index_of("a"), d3.index_of("b")
        assert d3.op(a, b) != d3.op(b, a)

    def test_symmetric_group(self, s3):
        assert s3.order == 6
        assert s3.labels[0] == "123"
        assert check_group(s3).ok

    def test_symmetric_group_applies_left_factor_first(self, s3):
        p, q = s3.index_of("213"), s3.index_of("132")
        # 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
        assert s3.labels[s3.op(p, q)] == "312"

    def test_symmetric_degree_guard(self):
        with pytest.raises(SizeGuard):
            symmetric_group(7)


class TestSymmetricSemigroup:
    def test_s2_left_first_products(self):
        """p1 o p2 = p2, p2 o p2 = p2, p3 o p3 = p3 and e is the identity."""
        s2 = symmetric_semigroup(2)
        assert s2.labels == ("11", "12", "21", "22")
        e, p1, p2, p3 = s2.indices_of(["12", "21", "11", "22"])
        assert s2.op(p1, p2) == p2
        assert s2.op(p2, p2) == p2
        assert s2.op(p3, p3) == p3
        assert s2.op(p3, e) == p3 and s2.op(e, p3) == p3
        assert s2.op(p2, p1) == p3

    def test_compose_left_first(self):
        assert compose_left_first((1, 0), (0, 0)) == (0, 0)
        assert compose_left_first((0, 0), (1, 0)) == (1, 1)

    def test_s3_is_a_semigroup(self):
        s = symmetric_semigroup(3)
        assert s.order == 27
        assert check_semigroup(s).ok
        assert not check_group(s, cap=1).ok

    def test_s4_has_256_maps(self):
        assert symmetric_semigroup(4).order == 256

    def test_degree_guard(self):
        with pytest.raises(SizeGuard):
            symmetric_semigroup(6)


class TestPolynomialQuotients:
    def test_gf8(self, gf8):
        """Z_2[x]/(x^3 + x + 1) is a field of 8 elements with prime subfield Z_2."""
        assert gf8.order == 8
        assert is_irreducible(2, [1, 1, 0, 1]).irreducible
        assert quotient_is_field(gf8).is_field
        assert check_field(gf8.to_ring_table()).ok
        assert [str(c) for c in prime_subfield(gf8)] == ["0", "1"]
        assert prime_subfield_matches_zp(gf8)

    def test_x2_plus_1_over_z2(self):
        """(1 + x)^2 = 0 in Z_2[x]/(x^2 + 1)."""
        ring = build_poly_quotient(2, [1, 0, 1])
        check = quotient_is_field(ring)
        assert not check.is_field
        a, b = check.zero_divisors
        assert a == b == ring.element((1, 1))
        assert (a * b).is_zero
        assert not check_field(ring.to_ring_table()).ok

    def test_x4_plus_1_over_z3(self):
        """81 elements, (2x^2)^-1 = x^2, and x^4 + 1 splits into two quadratics."""
        ring = build_poly_quotient(3, [1, 0, 0, 0, 1])
        assert ring.order == 81
        assert inverse_in_quotient(ring.element((0, 0, 2))) == ring.element((0, 0, 1))
        verdict = is_irreducible(3, [1, 0, 0, 0, 1])
        assert not verdict.irreducible
        g, h = verdict.factors
        assert len(g) == len(h) == 3
        assert poly_mul(g, h, 3) == (1, 0, 0, 0, 1)
        assert not quotient_is_field(ring).is_field

    def test_x4_plus_1_discrepancy(self):
        notes = quotient_discrepancies(3, (1, 0, 0, 0, 1), False, "(x^2 + x + 2)(x^2 + 2x + 2)")
        assert [n.code for n in notes] == ["reducible_modulus"]
        assert quotient_discrepancies(2, (1, 1, 0, 1), True) == []

    def test_inverses_multiply_to_one(self, gf8):
        for e in gf8.elements():
            if e.is_zero:
                assert inverse_in_quotient(e) is None
            else:
                assert e * inverse_in_quotient(e) == gf8.one

    def test_index_order(self, gf8):
        assert [e.index for e in gf8.elements()] == list(range(8))

    def test_non_prime_modulus(self):
        with pytest.raises(NonPrimeModulus):
            build_poly_quotient(4, [1, 1])

    def test_constant_modulus(self):
        with pytest.raises(ZeroDegree):
            build_poly_quotient(3, [2, 0, 3])


class TestMagmaRings:
    def test_z2_s2_has_16_elements(self):
        ring = semigroup_ring(CoefficientRing(2), symmetric_semigroup(2))
        assert len(list(ring.elements())) == 16
        table = ring.to_ring_table()
        assert table.order == 16
        assert check_ring(table).ok

    def test_group_ring_matches_convolution(self, d3):
        """Sparse group-ring products agree with a dense convolution on 100 random pairs."""
        ring = group_ring(CoefficientRing(5), d3)
        rng = random.Random(7)
        n = d3.order
        for _ in range(100):
            x = [rng.randrange(5) for _ in range(n)]
            y = [rng.randrange(5) for _ in range(n)]
            dense = [0] * n
            for g, h in product(range(n), repeat=2):
                dense[d3.op(g, h)] += x[g] * y[h]
            expected = ring.element(enumerate(dense))
            assert ring.mul(ring.element(enumerate(x)), ring.element(enumerate(y))) == expected

    def test_integer_group_ring(self, c6):
        ring = group_ring(CoefficientRing(), c6)
        assert ring.order is None
        x = ring.element({1: 2, 2: -1})
        assert ring.format(ring.mul(x, x)) == "4*2 + -4*3 + 4"
        with pytest.raises(SizeGuard):
            ring.to_ring_table()

    def test_identity(self, c6):
        ring = group_ring(CoefficientRing(3), c6)
        x = ring.element({2: 1, 5: 2})
        assert ring.mul(ring.identity, x) == x

    def test_group_ring_needs_group(self, left_zero_band):
        with pytest.raises(AxiomFailure):
            group_ring(CoefficientRing(2), left_zero_band)

    def test_enumeration_guard(self, monkeypatch, c6):
        monkeypatch.setenv("ALGLAB_ENUMERATION_LIMIT", "100")
        with pytest.raises(SizeGuard):
            list(group_ring(CoefficientRing(3), c6).elements())


class TestRings:
    def test_matrix_ring_over_z2(self):
        ring = matrix_ring(build_zn(2), 2)
        assert ring.order == 16
        assert check_ring(ring).ok
        assert not check_field(ring, cap=1).ok
        a, b = ring.index_of("[0,1;0,0]"), ring.index_of("[0,0;1,0]")
        assert ring.labels[ring.times(a, b)] == "[1,0;0,0]"
        assert ring.labels[ring.times(b, a)] == "[0,0;0,1]"

    def test_matrix_size_guard(self):
        with pytest.raises(SizeGuard):
            matrix_ring(build_zn(2), 3)

    def test_chain_lattice(self):
        chain = chain_lattice(4)
        assert chain.name == "C4"
        assert chain.plus(1, 3) == 3
        assert chain.times(1, 3) == 1

    def test_lattice_rejects_non_semiring(self):
        with pytest.raises(AxiomFailure):
            lattice_semiring(join=[[0, 0], [1, 1]], meet=[[0, 1], [0, 1]])


class TestQuaternions:
    RULES = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    }
    UNITS = {"1": ONE, "i": I, "j": J, "k": K}

    def _signed(self, sign, name):
        unit = self.UNITS[name]
        return unit if sign == 1 else -unit

    def test_signed_unit_products(self):
        """All 36 products of +-i, +-j, +-k follow the multiplication rules."""
        for (u, v), (sign, w) in self.RULES.items():
            for s, t in product((1, -1), repeat=2):
                left, right = self._signed(s, u), self._signed(t, v)
                assert quaternion_mul(left, right) == self._signed(s * t * sign, w)

    def test_associativity(self):
        rng = random.Random(11)
        for _ in range(1000):
            a, b, c = (Quaternion(*(rng.randint(-9, 9) for _ in range(4))) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    def test_inverse(self):
        q = Quaternion(1, 2, -1, 3)
        assert q * q.inverse() == ONE
        assert integral_inverse(q) is None
        assert integral_inverse(-J) == J
        assert Quaternion().inverse() is None

    def test_str(self):
        assert str(Quaternion(1, -1, 0, 2)) == "1 - i + 2k"


class TestTruncatedAlgebra:
    def test_worked_product(self):
        """(x^5 + 3x^3 - 4x + 1)(3x^5 + 2x^2 - 7) with x^6 = 1."""
        alg = TruncPolyAlgebra(bound=5)
        p = (1, -4, 0, 3, 0, 1)
        q = (-7, 0, 2, 0, 0, 3)
        assert trunc_poly_mul(alg, p, q) == (-19, 30, 11, -29, 3, 2)

    def test_x_powers_wrap(self):
        alg = TruncPolyAlgebra(bound=5)
        x = (0, 1)
        x5 = (0, 0, 0, 0, 0, 1)
        assert trunc_poly_mul(alg, x, x5) == alg.one()

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            TruncPolyAlgebra(bound=2).normalise((1, 2, 3, 4))
