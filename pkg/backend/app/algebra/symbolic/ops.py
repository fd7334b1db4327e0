"""
Coset, double-coset and product algebra on LatticeSets.

The rules below are exact over {Dense, Lattice, ZERO, EMPTY}; a combination
with no exact answer raises Unsupported instead of approximating.
"""
from enum import Enum
from fractions import Fraction

import structlog

from app.algebra.errors import NotASemigroup, Unsupported, ZeroScalar
from app.algebra.symbolic.lattice import (
    EMPTY,
    ZERO,
    LatticeSet,
    RatLike,
    SetKind,
    Sign,
    make,
    member,
    rational_gcd,
    subset_of,
    to_rat,
)

logger = structlog.get_logger()


class Ambient(str, Enum):
    """Symbolic ambient structures; the name decides which operation cosets use."""

    Q_NONZERO_MUL = "Q_nonzero_mul"
    Q_ADD = "Q_add"
    Z_RING = "Z_ring"
    Q_FIELD = "Q_field"

    @property
    def multiplicative(self) -> bool:
        return self is Ambient.Q_NONZERO_MUL


def set_product(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    """
    Elementwise product {x*y : x in a, y in b}.

    Uses {k*l : k, l in Z+} = Z+, so a lattice times a lattice is the lattice
    of the product scale, and anything times a dense set is dense.
    """
    if a.is_empty or b.is_empty:
        return EMPTY
    if a.kind is SetKind.ZERO or b.kind is SetKind.ZERO:
        return ZERO
    units = frozenset(s * t for s in a.units for t in b.units)
    with_zero = a.with_zero or b.with_zero
    if a.is_dense or b.is_dense:
        return make(SetKind.DENSE, units, with_zero)
    return make(SetKind.LATTICE, units, with_zero, a.scale * b.scale)


def scalar_multiple(a: RatLike, h: LatticeSet) -> LatticeSet:
    """a*H for a nonzero rational a."""
    a = to_rat(a)
    if a == 0:
        raise ZeroScalar("scalar 0 in a multiplicative coset")
    if h.kind in (SetKind.EMPTY, SetKind.ZERO):
        return h
    sign = 1 if a > 0 else -1
    units = frozenset(sign * u for u in h.units)
    if h.is_dense:
        return make(SetKind.DENSE, units, h.with_zero)
    return make(SetKind.LATTICE, units, h.with_zero, abs(a) * h.scale)


def translate(a: RatLike, h: LatticeSet) -> LatticeSet:
    """
    Additive coset a + H, exact only where it is again a LatticeSet.

    Raises:
        Unsupported: when a + H leaves the representable sets.
    """
    a = to_rat(a)
    if a == 0 or h.is_empty:
        return h
    if h.is_dense and h.sign is Sign.ALL:
        return h
    if h.is_lattice and h.sign is Sign.ALL and member(h, a):
        return h
    raise Unsupported(f"{a} + {h} is not representable as a lattice set")


def left_coset(a: RatLike, h: LatticeSet, ambient: Ambient = Ambient.Q_NONZERO_MUL) -> LatticeSet:
    """
    The coset aH under the ambient's operation.

    Raises:
        ZeroScalar: for a = 0 in a multiplicative ambient.
        Unsupported: for additive cosets that are not lattice sets.
    """
    if ambient.multiplicative:
        return scalar_multiple(a, h)
    return translate(a, h)


def set_sum(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    """
    Sumset {x + y}, defined for the sign-symmetric sets with 0 (subgroups of Q).

    Raises:
        Unsupported: for any other operands.
    """
    if a.is_empty or b.is_empty:
        return EMPTY
    if a.kind is SetKind.ZERO:
        return b
    if b.kind is SetKind.ZERO:
        return a
    if a.sign is not Sign.ALL or b.sign is not Sign.ALL:
        raise Unsupported(f"sumset of {a} and {b} is not a lattice set")
    if a.is_dense or b.is_dense:
        return make(SetKind.DENSE, frozenset({1, -1}), True)
    return make(SetKind.LATTICE, frozenset({1, -1}), True, rational_gcd(a.scale, b.scale))


def is_closed_mul(s: LatticeSet) -> bool:
    """s*s is contained in s."""
    return subset_of(set_product(s, s), s)


def double_coset(h: LatticeSet, x: RatLike, k: LatticeSet) -> LatticeSet:
    """
    HxK = {h*x*k} inside (Q \\ {0}, *).

    Raises:
        NotASemigroup: if H or K is not closed under multiplication.
        ZeroScalar: for x = 0.
    """
    for name, operand in (("H", h), ("K", k)):
        if not is_closed_mul(operand):
            raise NotASemigroup(f"{name} = {operand} is not closed under multiplication")
    x = to_rat(x)
    result = scalar_multiple(x, set_product(h, k))
    logger.debug("double_coset", h=str(h), x=str(x), k=str(k), result=str(result))
    return result


def negate(s: LatticeSet) -> LatticeSet:
    """-s, used for additive-inverse checks."""
    return scalar_multiple(Fraction(-1), s)
