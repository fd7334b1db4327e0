"""
Polynomial quotient rings Z_p[x]/(f).

Polynomials are coefficient tuples with the constant term first
(a_0, a_1, ..., a_n). Quotient elements always carry exactly deg f
coefficients and are enumerated by reading those coefficients as base-p
digits, least significant first.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

import structlog
from sympy import isprime

from app.algebra.errors import NonPrimeModulus, SizeGuard, ZeroDegree
from app.algebra.finite import FiniteRingTable
from app.config import get_settings

logger = structlog.get_logger()

Poly = Tuple[int, ...]


# Plain polynomial arithmetic over Z_p

def trim(a: Sequence[int], p: int) -> Poly:
    coeffs = [c % p for c in a]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(a: Poly) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(a) - 1


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def poly_divmod(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    """Quotient and remainder of a by a nonzero b."""
    a, b = trim(a, p), trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = pow(b[-1], -1, p)
    rem = list(a)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = (rem[shift + len(b) - 1] * lead_inv) % p
        quot[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    return trim(quot, p), trim(rem[: max(len(b) - 1, 0)], p)


def monic(a: Poly, p: int) -> Poly:
    a = trim(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return trim([c * inv for c in a], p)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic greatest common divisor."""
    a, b = trim(a, p), trim(b, p)
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    return monic(a, p)


def poly_ext_gcd(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly, Poly]:
    """(g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = trim(a, p), trim(b, p)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    if not r0:
        return (), s0, t0
    inv = pow(r0[-1], -1, p)
    scale = (inv,)
    return poly_mul(r0, scale, p), poly_mul(s0, scale, p), poly_mul(t0, scale, p)


def format_poly(a: Sequence[int], var: str = "x") -> str:
    """Human form, highest degree first, e.g. ``x^4 + 2x^2 + 1``."""
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            power = var if i == 1 else f"{var}^{i}"
            terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms) if terms else "0"


# The quotient ring

@dataclass(frozen=True)
class PolyModRing:
    """Z_p[x]/(f) for a prime p and a monic f of degree at least one."""

    p: int
    modulus: Poly

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def name(self) -> str:
        return f"Z_{self.p}[x]/({format_poly(self.modulus)})"

    def element(self, coeffs: Sequence[int]) -> "PolyModElement":
        """Reduce an arbitrary polynomial into the quotient."""
        rem = poly_divmod(tuple(coeffs), self.modulus, self.p)[1]
        return PolyModElement(self, tuple(rem) + (0,) * (self.degree - len(rem)))

    @property
    def zero(self) -> "PolyModElement":
        return self.element(())

    @property
    def one(self) -> "PolyModElement":
        return self.element((1,))

    @property
    def x(self) -> "PolyModElement":
        return self.element((0, 1))

    def constant(self, c: int) -> "PolyModElement":
        return self.element((c,))

    def from_index(self, index: int) -> "PolyModElement":
        digits = []
        for _ in range(self.degree):
            index, digit = divmod(index, self.p)
            digits.append(digit)
        return PolyModElement(self, tuple(digits))

    def elements(self) -> Iterator["PolyModElement"]:
        for digits in product(range(self.p), repeat=self.degree):
            yield PolyModElement(self, tuple(reversed(digits)))

    def to_ring_table(self) -> FiniteRingTable:
        """
        Full addition and multiplication tables, indexed like :meth:`elements`.

        Raises:
            SizeGuard: above ``max_table_order`` elements.
        """
        limit = get_settings().max_table_order
        if self.order > limit:
            raise SizeGuard(f"{self.name} has {self.order} elements, above {limit}")
        return self._table

    @cached_property
    def _table(self) -> FiniteRingTable:
        elements = list(self.elements())
        return FiniteRingTable.from_tables(
            add=[[(a + b).index for b in elements] for a in elements],
            mul=[[(a * b).index for b in elements] for a in elements],
            labels=[str(e) for e in elements],
            name=self.name,
        )


@dataclass(frozen=True)
class PolyModElement:
    ring: PolyModRing
    coeffs: Poly

    @property
    def index(self) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.ring.p + c
        return value

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def poly(self) -> Poly:
        return trim(self.coeffs, self.ring.p)

    def _same_ring(self, other: "PolyModElement") -> None:
        if other.ring != self.ring:
            raise ValueError("elements of different quotient rings")

    def __add__(self, other: "PolyModElement") -> "PolyModElement":
        self._same_ring(other)
        return self.ring.element(poly_add(self.coeffs, other.coeffs, self.ring.p))

    def __sub__(self, other: "PolyModElement") -> "PolyModElement":
        self._same_ring(other)
        return self.ring.element(poly_sub(self.coeffs, other.coeffs, self.ring.p))

    def __neg__(self) -> "PolyModElement":
        return self.ring.zero - self

    def __mul__(self, other: "PolyModElement") -> "PolyModElement":
        self._same_ring(other)
        return self.ring.element(poly_mul(self.coeffs, other.coeffs, self.ring.p))

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def build_poly_quotient(p: int, f: Sequence[int]) -> PolyModRing:
    """
    Z_p[x]/(f) with f given constant term first and scaled to be monic.

    Raises:
        NonPrimeModulus: if p is not prime.
        ZeroDegree: if f has degree below one.
    """
    if not isprime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    f = trim(f, p)
    if degree(f) < 1:
        raise ZeroDegree(f"modulus {format_poly(f)} has degree {degree(f)}")
    ring = PolyModRing(p=p, modulus=monic(f, p))
    logger.debug("poly_quotient_built", ring=ring.name, order=ring.order)
    return ring


@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    factors: Optional[Tuple[Poly, Poly]] = None


def is_irreducible(p: int, f: Sequence[int]) -> Irreducibility:
    """
    Exhaustive search for a monic divisor of degree 1..deg(f)/2.

    Candidate divisors are tried by degree, then in base-p index order of
    their lower coefficients; the first hit is returned with its cofactor.
    """
    if not isprime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    f = monic(f, p)
    d = degree(f)
    if d < 1:
        raise ZeroDegree(f"{format_poly(f)} has degree {d}")
    for k in range(1, d // 2 + 1):
        for digits in product(range(p), repeat=k):
            g = tuple(reversed(digits)) + (1,)
            q, r = poly_divmod(f, g, p)
            if not r:
                return Irreducibility(False, (g, q))
    return Irreducibility(True)


@dataclass(frozen=True)
class FieldCheck:
    is_field: bool
    zero_divisors: Optional[Tuple[PolyModElement, PolyModElement]] = None


def quotient_is_field(ring: PolyModRing) -> FieldCheck:
    """
    The quotient is a field iff no nonzero element shares a factor with f.

    When it is not, the first such element a (in index order) is returned
    together with b = f / gcd(a, f), so that a*b = 0 in the quotient.
    """
    for index in range(1, ring.order):
        a = ring.from_index(index)
        g = poly_gcd(a.poly(), ring.modulus, ring.p)
        if degree(g) >= 1:
            b = ring.element(poly_divmod(ring.modulus, g, ring.p)[0])
            return FieldCheck(False, (a, b))
    return FieldCheck(True)


def inverse_in_quotient(e: PolyModElement) -> Optional[PolyModElement]:
    """Inverse by extended Euclid, or None when gcd(e, f) is not a unit."""
    ring = e.ring
    g, s, _ = poly_ext_gcd(e.poly(), ring.modulus, ring.p)
    if g != (1,):
        return None
    return ring.element(s)


def prime_subfield(ring: PolyModRing) -> List[PolyModElement]:
    """The constants 0, 1, 2*1, ..., (p-1)*1."""
    return [ring.constant(c) for c in range(ring.p)]


def prime_subfield_matches_zp(ring: PolyModRing) -> bool:
    """
    Check that c -> c*1 carries the tables of Z_p onto the constants of the ring.
    """
    p = ring.p
    constants = prime_subfield(ring)
    for a in range(p):
        for b in range(p):
            if constants[a] + constants[b] != constants[(a + b) % p]:
                return False
            if constants[a] * constants[b] != constants[(a * b) % p]:
                return False
    return True
