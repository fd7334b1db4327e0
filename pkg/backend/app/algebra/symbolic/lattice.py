"""
Exact symbolic subsets of the rationals.

A LatticeSet is one of

* ``Dense``: all rationals of the allowed signs, optionally with 0 (Q, Q+, Q0 = Q+ u {0}, ...)
* ``Lattice``: {q*k : k a nonzero integer of the allowed signs}, optionally with 0
* ``ZERO``: the set {0}
* ``EMPTY``

Values are kept in canonical form so that two LatticeSets compare equal
exactly when they denote the same set. A scale is always positive; the sign
of the members lives in ``sign``.
"""
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import FrozenSet, Optional, Union

from app.algebra.errors import Malformed, Unsupported

Rat = Fraction
RatLike = Union[int, str, Fraction]


def to_rat(value: RatLike) -> Fraction:
    """Parse an int, ``"a/b"`` string or Fraction into a Fraction."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise Malformed(f"not a rational number: {value!r}") from exc


class Sign(str, Enum):
    """Signs allowed for the nonzero members."""

    POS = "+"
    NEG = "-"
    NONZERO = "!0"
    ALL = ""

    @property
    def units(self) -> FrozenSet[int]:
        if self is Sign.POS:
            return frozenset({1})
        if self is Sign.NEG:
            return frozenset({-1})
        return frozenset({1, -1})

    @classmethod
    def of(cls, units: FrozenSet[int], with_zero: bool) -> "Sign":
        if units == {1}:
            return cls.POS
        if units == {-1}:
            return cls.NEG
        return cls.ALL if with_zero else cls.NONZERO


class SetKind(str, Enum):
    DENSE = "dense"
    LATTICE = "lattice"
    ZERO = "zero"
    EMPTY = "empty"


@dataclass(frozen=True)
class LatticeSet:
    """Canonical symbolic subset of Q. Build values with :func:`make`."""

    kind: SetKind
    sign: Sign = Sign.ALL
    with_zero: bool = False
    scale: Optional[Fraction] = None

    @property
    def units(self) -> FrozenSet[int]:
        if self.kind in (SetKind.ZERO, SetKind.EMPTY):
            return frozenset()
        return self.sign.units

    @property
    def is_empty(self) -> bool:
        return self.kind is SetKind.EMPTY

    @property
    def is_lattice(self) -> bool:
        return self.kind is SetKind.LATTICE

    @property
    def is_dense(self) -> bool:
        return self.kind is SetKind.DENSE

    def __contains__(self, x: RatLike) -> bool:
        return member(self, x)

    def __str__(self) -> str:
        return format_set(self)


def make(
    kind: SetKind,
    units: FrozenSet[int] = frozenset(),
    with_zero: bool = False,
    scale: Optional[RatLike] = None,
) -> LatticeSet:
    """
    Canonical constructor.

    Raises:
        Unsupported: for a non-positive lattice scale.
    """
    if kind is SetKind.EMPTY:
        return EMPTY
    if kind is SetKind.ZERO or not units:
        return ZERO if (with_zero or kind is SetKind.ZERO) else EMPTY
    sign = Sign.of(frozenset(units), with_zero)
    if sign is Sign.ALL:
        with_zero = True
    if kind is SetKind.DENSE:
        return LatticeSet(SetKind.DENSE, sign, with_zero, None)
    q = Fraction(scale)
    if q <= 0:
        raise Unsupported(f"lattice scale must be positive, got {q}")
    return LatticeSet(SetKind.LATTICE, sign, with_zero, q)


def lattice(scale: RatLike, sign: Sign = Sign.POS, with_zero: bool = False) -> LatticeSet:
    """The set {scale*k} for nonzero integers k of the given sign, plus 0 if asked."""
    return make(SetKind.LATTICE, sign.units, with_zero or sign is Sign.ALL, to_rat(scale))


def dense(sign: Sign = Sign.ALL, with_zero: bool = False) -> LatticeSet:
    return make(SetKind.DENSE, sign.units, with_zero or sign is Sign.ALL)


ZERO = LatticeSet(SetKind.ZERO, Sign.ALL, True, None)
EMPTY = LatticeSet(SetKind.EMPTY, Sign.ALL, False, None)

Z_POS = lattice(1, Sign.POS)
Z_NONNEG = lattice(1, Sign.POS, with_zero=True)
Z_NONZERO = lattice(1, Sign.NONZERO)
Z = lattice(1, Sign.ALL)
Q = dense(Sign.ALL)
Q_NONZERO = dense(Sign.NONZERO)
Q_POS = dense(Sign.POS)
Q_NONNEG = dense(Sign.POS, with_zero=True)


def member(s: LatticeSet, x: RatLike) -> bool:
    """Exact membership test."""
    x = to_rat(x)
    if s.kind is SetKind.EMPTY:
        return False
    if x == 0:
        return s.with_zero
    if (1 if x > 0 else -1) not in s.units:
        return False
    if s.kind is SetKind.DENSE:
        return True
    return (x / s.scale).denominator == 1


def rational_lcm(a: Fraction, b: Fraction) -> Fraction:
    """lcm(p/q, r/s) = lcm(p, r) / gcd(q, s) for positive reduced fractions."""
    return Fraction(lcm(a.numerator, b.numerator), gcd(a.denominator, b.denominator))


def rational_gcd(a: Fraction, b: Fraction) -> Fraction:
    """gcd(p/q, r/s) = gcd(p, r) / lcm(q, s) for positive reduced fractions."""
    return Fraction(gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator))


def subset_of(a: LatticeSet, b: LatticeSet) -> bool:
    if a.kind is SetKind.EMPTY:
        return True
    if b.kind is SetKind.EMPTY:
        return False
    if a.kind is SetKind.ZERO:
        return b.with_zero
    if b.kind is SetKind.ZERO:
        return False
    if a.with_zero and not b.with_zero:
        return False
    if not a.units <= b.units:
        return False
    if b.kind is SetKind.DENSE:
        return True
    if a.kind is SetKind.DENSE:
        return False
    return (a.scale / b.scale).denominator == 1


def intersect(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    if a.kind is SetKind.EMPTY or b.kind is SetKind.EMPTY:
        return EMPTY
    if a.kind is SetKind.ZERO or b.kind is SetKind.ZERO:
        return ZERO if (a.with_zero and b.with_zero) else EMPTY
    units = a.units & b.units
    with_zero = a.with_zero and b.with_zero
    if a.is_dense and b.is_dense:
        return make(SetKind.DENSE, units, with_zero)
    if a.is_lattice and b.is_lattice:
        scale = rational_lcm(a.scale, b.scale)
    else:
        scale = a.scale if a.is_lattice else b.scale
    return make(SetKind.LATTICE, units, with_zero, scale)


def is_closed_add(s: LatticeSet) -> bool:
    """s + s is contained in s; only the sign-symmetric sets without 0 fail."""
    if s.kind in (SetKind.EMPTY, SetKind.ZERO):
        return True
    return s.sign is not Sign.NONZERO


_LATTICE_TEXT = re.compile(
    r"^(?:(?P<scale>\+?\d+(?:/\d+)?)\s*\*?\s*)?Z(?P<sign>\+|-|!0|0|°)?(?P<zero>,\s*0)?$"
)
_DENSE_TEXT = re.compile(r"^Q(?P<sign>\+|-|!0|0|°)?(?P<zero>,\s*0)?$")
_SIGN_TEXT = {
    None: (Sign.ALL, True),
    "": (Sign.ALL, True),
    "+": (Sign.POS, False),
    "-": (Sign.NEG, False),
    "!0": (Sign.NONZERO, False),
    "0": (Sign.POS, True),
    "°": (Sign.POS, True),
}


def format_set(s: LatticeSet) -> str:
    """
    Canonical text: ``q*Z+``, ``q*Z-``, ``q*Z!0``, ``q*Z`` with ``,0`` appended
    to the signed forms that contain 0; dense forms ``Q``, ``Q!0``, ``Q+``,
    ``Q-``, ``Q0`` and ``Q-,0``; ``0`` and ``EMPTY``.
    """
    if s.kind is SetKind.EMPTY:
        return "EMPTY"
    if s.kind is SetKind.ZERO:
        return "0"
    zero = ",0" if s.with_zero and s.sign in (Sign.POS, Sign.NEG) else ""
    if s.kind is SetKind.DENSE:
        if s.sign is Sign.POS and s.with_zero:
            return "Q0"
        return f"Q{s.sign.value}{zero}"
    return f"{s.scale}*Z{s.sign.value}{zero}"


def parse_set(text: str) -> LatticeSet:
    """
    Parse canonical text and the shorthands ``Z+``, ``2Z+``, ``1/2Z+``,
    ``Z0`` (= Z+ u {0}) and ``Z!0``.

    Raises:
        Malformed: for text that names no set.
    """
    raw = text.strip().replace(" ", "")
    if raw in ("0", "{0}"):
        return ZERO
    if raw.upper() in ("EMPTY", "∅", "{}"):
        return EMPTY
    match = _LATTICE_TEXT.match(raw)
    if match:
        sign, with_zero = _SIGN_TEXT[match.group("sign")]
        scale = Fraction(match.group("scale") or 1)
        if scale <= 0:
            raise Malformed(f"lattice scale must be positive in {text!r}")
        return lattice(scale, sign, with_zero or bool(match.group("zero")))
    match = _DENSE_TEXT.match(raw)
    if match:
        sign, with_zero = _SIGN_TEXT[match.group("sign")]
        return dense(sign, with_zero or bool(match.group("zero")))
    raise Malformed(f"not a symbolic set: {text!r}")
