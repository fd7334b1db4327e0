"""
Truncated polynomial algebras where x^(n+1) = 1, so exponents wrap mod n+1.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class TruncPolyAlgebra:
    """
    Polynomials of degree at most ``bound`` with x^(bound+1) = 1.

    ``coefficients`` names the coefficient semifield or field (``Q``, ``Q0``,
    ``Z0``); arithmetic itself is exact over the rationals.
    """

    bound: int
    coefficients: str = "Q"

    @property
    def period(self) -> int:
        return self.bound + 1

    def normalise(self, p: Sequence[Coeff]) -> Tuple[Coeff, ...]:
        if len(p) > self.period:
            raise ValueError(f"degree {len(p) - 1} exceeds the bound {self.bound}")
        return tuple(p) + (0,) * (self.period - len(p))

    def add(self, p: Sequence[Coeff], q: Sequence[Coeff]) -> Tuple[Coeff, ...]:
        p, q = self.normalise(p), self.normalise(q)
        return tuple(a + b for a, b in zip(p, q))

    def scale(self, c: Coeff, p: Sequence[Coeff]) -> Tuple[Coeff, ...]:
        return tuple(c * a for a in self.normalise(p))

    def one(self) -> Tuple[Coeff, ...]:
        return self.normalise((1,))


def trunc_poly_mul(alg: TruncPolyAlgebra, p: Sequence[Coeff], q: Sequence[Coeff]) -> Tuple[Coeff, ...]:
    """Cyclic convolution: the coefficient of x^i*x^j lands on x^((i+j) mod (n+1))."""
    p, q = alg.normalise(p), alg.normalise(q)
    n = alg.period
    out = [0] * n
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[(i + j) % n] += a * b
    return tuple(out)
