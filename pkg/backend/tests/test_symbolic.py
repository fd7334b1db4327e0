"""
Tests for the exact symbolic subsets of Q and their coset algebra.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.algebra.errors import Malformed, NotASemigroup, Unsupported, ZeroScalar
from app.algebra.symbolic import (
    EMPTY,
    Q,
    Q_NONNEG,
    Q_NONZERO,
    Z,
    Z_NONNEG,
    Z_NONZERO,
    Z_POS,
    ZERO,
    Ambient,
    Sign,
    double_coset,
    enumerate_truncated,
    format_set,
    intersect,
    is_closed_add,
    is_closed_mul,
    lattice,
    left_coset,
    listing,
    member,
    pairwise_products,
    parse_set,
    set_product,
    set_sum,
    subset_of,
    translate,
    truncated_double_coset,
)
from app.services.report_service import double_coset_discrepancies

signs = st.sampled_from([Sign.POS, Sign.NEG, Sign.NONZERO, Sign.ALL])
rational_scales = st.builds(Fraction, st.integers(1, 50), st.integers(1, 6))


@st.composite
def lattices(draw, scales=rational_scales):
    return lattice(draw(scales), draw(signs), draw(st.booleans()))


class TestCosets:
    def test_half_coset_contains_z_plus(self):
        coset = left_coset(Fraction(1, 2), Z_POS)
        assert coset == lattice(Fraction(1, 2))
        assert subset_of(Z_POS, coset)

    def test_two_coset_inside_z_plus(self):
        coset = left_coset(2, Z_POS)
        assert subset_of(coset, Z_POS)
        assert coset != Z_POS

    def test_coset_intersection(self):
        assert intersect(left_coset(Fraction(1, 2), Z_POS), left_coset(2, Z_POS)) == lattice(2)

    def test_negative_double_coset(self):
        """K(-1)H is the negative lattice of 6, disjoint from H."""
        h, k = lattice(2), lattice(3)
        result = double_coset(k, -1, h)
        assert result == lattice(6, Sign.NEG)
        assert format_set(result) == "6*Z-"
        assert intersect(result, h) == EMPTY
        assert intersect(k, h) == lattice(6)
        doubled = double_coset(k, 2, h)
        assert doubled == lattice(12)
        assert is_closed_mul(doubled)

    def test_double_coset_scales(self):
        assert double_coset(lattice(5), 8, lattice(6)) == lattice(240)
        sevenths = double_coset(lattice(5), Fraction(1, 7), lattice(6))
        assert sevenths == lattice(Fraction(30, 7))
        assert not is_closed_mul(sevenths)

    def test_product(self):
        assert set_product(lattice(5), lattice(3)) == lattice(15)

    def test_double_coset_listing_discrepancy(self):
        h, k = lattice(2), lattice(3)
        result = double_coset(h, 5, k)
        assert result == lattice(30)
        assert Fraction(90) in result
        notes = double_coset_discrepancies(h, 5, k, result)
        assert [n.code for n in notes] == ["double_coset_listing"]
        assert listing(result) == "{30, 60, 90, 120, 150, 180, ...}"
        assert double_coset_discrepancies(h, 7, k, double_coset(h, 7, k)) == []

    def test_zero_scalar(self):
        with pytest.raises(ZeroScalar):
            left_coset(0, Z_POS)

    def test_double_coset_needs_semigroups(self):
        with pytest.raises(NotASemigroup):
            double_coset(lattice(1, Sign.NEG), 2, Z_POS)

    def test_additive_cosets(self):
        assert left_coset(3, Z, Ambient.Q_ADD) == Z
        assert translate(Fraction(1, 3), Q) == Q
        with pytest.raises(Unsupported):
            translate(1, lattice(2, Sign.ALL))

    @settings(max_examples=200)
    @given(st.integers(1, 50), st.integers(1, 50), st.integers(1, 50))
    def test_double_coset_law(self, m, n, x):
        """mZ+ x nZ+ = (mxn)Z+, and the truncated listing agrees."""
        result = double_coset(lattice(m), x, lattice(n))
        assert result == lattice(m * x * n)
        bound = 300
        assert set(enumerate_truncated(result, bound)) == truncated_double_coset(
            lattice(m), x, lattice(n), bound
        )

    @pytest.mark.slow
    def test_double_coset_oracle_at_full_bound(self):
        assert set(enumerate_truncated(lattice(240))) == truncated_double_coset(
            lattice(5), 8, lattice(6)
        )


class TestSetAlgebra:
    def test_membership(self):
        assert member(lattice(Fraction(3, 2)), Fraction(9, 2))
        assert not member(lattice(Fraction(3, 2)), 2)
        assert not member(Z_POS, 0)
        assert member(Z_NONNEG, 0)
        assert member(Q_NONZERO, Fraction(-1, 3))

    def test_sums(self):
        assert set_sum(lattice(4, Sign.ALL), lattice(6, Sign.ALL)) == lattice(2, Sign.ALL)
        assert set_sum(ZERO, Z) == Z
        with pytest.raises(Unsupported):
            set_sum(Z_POS, Z_POS)

    def test_additive_closure(self):
        assert is_closed_add(Z_POS)
        assert not is_closed_add(Z_NONZERO)

    def test_negative_lattice_not_multiplicatively_closed(self):
        assert not is_closed_mul(lattice(1, Sign.NEG))
        assert is_closed_mul(Z_NONZERO)

    def test_dense_cannot_be_enumerated(self):
        with pytest.raises(Unsupported):
            enumerate_truncated(Q)

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("Z+", Z_POS),
            ("2Z+", lattice(2)),
            ("1/2Z+", lattice(Fraction(1, 2))),
            ("Z0", Z_NONNEG),
            ("Z!0", Z_NONZERO),
            ("Z", Z),
            ("6*Z-", lattice(6, Sign.NEG)),
            ("Q0", Q_NONNEG),
            ("0", ZERO),
            ("EMPTY", EMPTY),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_set(text) == expected

    def test_parse_rejects_text(self):
        with pytest.raises(Malformed):
            parse_set("2W+")

    @settings(max_examples=300)
    @given(lattices())
    def test_format_parse(self, s):
        assert parse_set(format_set(s)) == s


class TestOracle:
    """Symbolic results against explicit truncated listings."""

    @settings(max_examples=500)
    @given(lattices(), lattices())
    def test_intersection(self, a, b):
        bound = 200
        expected = set(enumerate_truncated(a, bound)) & set(enumerate_truncated(b, bound))
        assert set(enumerate_truncated(intersect(a, b), bound)) == expected

    @settings(max_examples=300)
    @given(lattices(st.integers(1, 20)), lattices(st.integers(1, 20)))
    def test_product(self, a, b):
        bound = 80
        expected = pairwise_products(enumerate_truncated(a, bound), enumerate_truncated(b, bound), bound)
        assert set(enumerate_truncated(set_product(a, b), bound)) == expected

    @settings(max_examples=200)
    @given(lattices(), lattices())
    def test_subset(self, a, b):
        """A failed inclusion already shows on 0, a's scale or its negative."""
        bound = 200
        listed = set(enumerate_truncated(a, bound)) <= set(enumerate_truncated(b, bound))
        assert subset_of(a, b) == listed
