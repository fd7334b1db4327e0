"""
Ideals in the symbolic structures: nZ in Z, ideals of multiplicative
semigroups of (Q \\ {0}, *), ideals of subrings of Q, and the S-special
definite ideals nZ of Z.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import structlog
from sympy import factorint, isprime

from app.algebra.errors import (
    ImproperIdeal,
    NotAnIdeal,
    NotASemigroup,
    NotSubset,
    UnsupportedSubring,
)
from app.algebra.ideals.finite import IdealClassification
from app.algebra.symbolic import (
    Z,
    LatticeSet,
    Sign,
    format_set,
    is_closed_add,
    is_closed_mul,
    lattice,
    member,
    negate,
    set_product,
    subset_of,
)

logger = structlog.get_logger()


def _smallest_factorisation(n: int) -> Tuple[int, int]:
    """n = a*b with a the smallest prime factor; n must be composite."""
    a = min(factorint(n))
    return a, n // a


def classify_nZ(n: int) -> IdealClassification:
    """
    nZ as an ideal of Z: maximal iff prime iff n is prime; always principal;
    never minimal, since 2nZ is a smaller nonzero ideal.

    Raises:
        ImproperIdeal: for n < 2 (Z itself, or the zero ideal).
    """
    if n < 2:
        raise ImproperIdeal(f"{n}Z is not a proper nonzero ideal of Z")
    prime = bool(isprime(n))
    witness = None
    larger = None
    if not prime:
        a, b = _smallest_factorisation(n)
        witness = (str(a), str(b))
        larger = f"{a}Z"
    return IdealClassification(
        ideal=f"{n}Z",
        prime=prime,
        maximal=prime,
        minimal=False,
        principal=True,
        generator=str(n),
        prime_witness=witness,
        larger_ideal=larger,
        smaller_ideal=f"{2 * n}Z",
    )


@dataclass(frozen=True)
class IdealCheck:
    """Verdict of T*P within P, with a failing pair when it does not hold."""

    is_ideal: bool
    witness: Optional[Tuple[Fraction, Fraction, Fraction]] = None

    def __bool__(self) -> bool:
        return self.is_ideal


def sample_members(s: LatticeSet, count: int = 12) -> List[Fraction]:
    """Small members of ``s`` in order of magnitude, positives before negatives."""
    if s.is_empty:
        return []
    out: List[Fraction] = []
    if s.with_zero:
        out.append(Fraction(0))
    if s.is_lattice:
        steps = [s.scale * k for k in range(1, count + 1)]
    elif s.is_dense:
        steps = [Fraction(1, d) for d in range(2, count // 2 + 2)] + [Fraction(k) for k in range(1, count // 2 + 1)]
        steps.sort()
    else:
        steps = []
    for x in steps:
        for u in sorted(s.units, reverse=True):
            out.append(u * x)
    return out


def verify_semigroup_ideal(t: LatticeSet, p: LatticeSet) -> IdealCheck:
    """
    Whether P is an ideal of the multiplicative semigroup T (tp, pt in P).

    A failing check carries the first pair (t, p) with tp outside P, taking
    t and p from ``sample_members`` in order, so the witness uses the
    smallest magnitudes that fail.

    Raises:
        NotASemigroup: if T is not closed under multiplication.
        NotSubset: if P is not contained in T.
    """
    if not is_closed_mul(t):
        raise NotASemigroup(f"{format_set(t)} is not closed under multiplication")
    if not subset_of(p, t):
        raise NotSubset(f"{format_set(p)} is not contained in {format_set(t)}")
    if subset_of(set_product(t, p), p):
        return IdealCheck(True)
    for x in sample_members(t):
        for y in sample_members(p):
            if not member(p, x * y):
                return IdealCheck(False, (x, y, x * y))
    return IdealCheck(False)


def _integer_scale(p: LatticeSet) -> int:
    if not p.is_lattice or p.scale.denominator != 1:
        raise NotAnIdeal(f"{format_set(p)} is not of the form mZ")
    return p.scale.numerator


def classify_group_side(p: LatticeSet, t: LatticeSet) -> IdealClassification:
    """
    Classify an ideal P = mZ-type lattice of the semigroup T (Z \\ {0} or Z+).

    Maximal iff prime iff |m| is prime; always principal, generated by m.

    Raises:
        NotAnIdeal: if P is not an ideal of T.
        ImproperIdeal: if P = T.
    """
    if not verify_semigroup_ideal(t, p):
        raise NotAnIdeal(f"{format_set(p)} is not an ideal of {format_set(t)}")
    if p == t:
        raise ImproperIdeal(f"{format_set(p)} is the whole semigroup")
    m = _integer_scale(p)
    prime = bool(isprime(m))
    witness = None
    larger = None
    if not prime and m > 1:
        a, b = _smallest_factorisation(m)
        witness = (str(a), str(b))
        larger = format_set(lattice(a, p.sign, p.with_zero))
    return IdealClassification(
        ideal=format_set(p),
        prime=prime,
        maximal=prime,
        minimal=False,
        principal=True,
        generator=str(m),
        prime_witness=witness,
        larger_ideal=larger,
        smaller_ideal=format_set(lattice(2 * m, p.sign, p.with_zero)),
    )


@dataclass
class FieldSideReport:
    """Ideals kZ of a subring nZ of Q, classified up to a search bound."""

    field: str
    subring: str
    classifications: List[IdealClassification]
    minimal_ideals: List[str] = field(default_factory=list)
    search_bound: int = 0
    note: str = ""


def _subring_scale(subring: LatticeSet) -> int:
    if not subring.is_lattice or subring.sign is not Sign.ALL or subring.scale.denominator != 1:
        raise UnsupportedSubring(f"{format_set(subring)} is not a subring of the form nZ")
    return subring.scale.numerator


def _prime_in_subring(n: int, m: int, bound: int) -> Optional[Tuple[str, str]]:
    """A pair x, y in nZ outside mZ with xy in mZ, searched up to |x|, |y| <= n*bound."""
    if n == 1:
        if isprime(m):
            return None
        a, b = _smallest_factorisation(m)
        return str(a), str(b)
    for i in range(1, bound + 1):
        x = n * i
        if x % m == 0:
            continue
        for j in range(i, bound + 1):
            y = n * j
            if y % m and (x * y) % m == 0:
                return str(x), str(y)
    return None


def field_side_ideals(
    subring: LatticeSet,
    generators: Sequence[int],
    field_name: str = "Q",
    bound: int = 50,
) -> FieldSideReport:
    """
    Classify the ideals kZ (k a multiple of n) of a subring nZ inside Q.

    kZ is maximal iff k/n is prime and always principal. Primality is exact
    for n = 1 and a bounded search otherwise. No minimal ideal exists, since
    2kZ lies strictly inside kZ.

    Raises:
        UnsupportedSubring: for subrings other than nZ.
        NotAnIdeal: for generators that are not multiples of n.
    """
    n = _subring_scale(subring)
    classifications = []
    for k in generators:
        if k <= 0 or k % n:
            raise NotAnIdeal(f"{k}Z is not an ideal of {format_set(subring)}")
        if k == n:
            raise ImproperIdeal(f"{k}Z is the whole subring")
        witness = _prime_in_subring(n, k, bound)
        maximal = bool(isprime(k // n))
        larger = None
        if not maximal:
            larger = f"{n * min(factorint(k // n))}Z"
        classifications.append(
            IdealClassification(
                ideal=f"{k}Z",
                prime=witness is None,
                maximal=maximal,
                minimal=False,
                principal=True,
                generator=str(k),
                prime_witness=witness,
                larger_ideal=larger,
                smaller_ideal=f"{2 * k}Z",
            )
        )
    return FieldSideReport(
        field=field_name,
        subring=f"{n}Z" if n > 1 else "Z",
        classifications=classifications,
        minimal_ideals=[],
        search_bound=bound,
        note="no minimal ideals: every kZ properly contains 2kZ",
    )


@dataclass(frozen=True)
class SpecialDefiniteIdeal:
    """nZ as an ideal of Z holding the semiring nZ+ u {0} that is not a subring."""

    ideal: str
    semiring: str
    holds: bool
    negation_witness: Optional[str] = None


def s_special_definite_ideal(n: int) -> SpecialDefiniteIdeal:
    """
    Check that nZ is an S-special definite ideal of Z.

    nZ is an ideal of Z and contains V = nZ+ u {0}, which is closed under
    both operations and contains 0 but is not a ring (n has no negative in V).
    """
    if n < 2:
        raise ImproperIdeal(f"{n}Z is not a proper nonzero ideal of Z")
    ideal = lattice(n, Sign.ALL)
    v = lattice(n, Sign.POS, with_zero=True)
    is_ideal = subset_of(set_product(Z, ideal), ideal)
    semiring = is_closed_add(v) and is_closed_mul(v) and member(v, 0) and subset_of(v, ideal)
    not_ring = not subset_of(negate(v), v)
    logger.debug("s_special_definite_ideal", n=n, ideal=is_ideal, semiring=semiring)
    return SpecialDefiniteIdeal(
        ideal=f"{n}Z",
        semiring=format_set(v),
        holds=is_ideal and semiring and not_ring,
        negation_witness=f"-{n}" if not_ring else None,
    )
