"""
Quaternions a0 + a1 i + a2 j + a3 k with integer or rational coefficients.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Quaternion:
    a0: Number = 0
    a1: Number = 0
    a2: Number = 0
    a3: Number = 0

    @classmethod
    def scalar(cls, c: Number) -> "Quaternion":
        return cls(c, 0, 0, 0)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.a0 + other.a0, self.a1 + other.a1,
                          self.a2 + other.a2, self.a3 + other.a3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-other)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return quaternion_mul(self, other)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def norm(self) -> Number:
        return self.a0 ** 2 + self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in (self.a0, self.a1, self.a2, self.a3))

    def inverse(self) -> Optional["Quaternion"]:
        """conj(q) / N(q) with rational coefficients; None for q = 0."""
        n = self.norm()
        if n == 0:
            return None
        c = self.conjugate()
        return Quaternion(*(Fraction(x) / n for x in (c.a0, c.a1, c.a2, c.a3)))

    def __str__(self) -> str:
        parts = []
        for c, unit in ((self.a0, ""), (self.a1, "i"), (self.a2, "j"), (self.a3, "k")):
            if not c:
                continue
            if unit and c == 1:
                parts.append(unit)
            elif unit and c == -1:
                parts.append(f"-{unit}")
            else:
                parts.append(f"{c}{unit}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def quaternion_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """
    Hamilton product, component by component:

        g0 = a0 b0 - a1 b1 - a2 b2 - a3 b3
        g1 = a0 b1 + a1 b0 + a2 b3 - a3 b2
        g2 = a0 b2 + a2 b0 - a1 b3 + a3 b1
        g3 = a0 b3 - a2 b1 + a1 b2 + a3 b0
    """
    return Quaternion(
        a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
        a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
        a.a0 * b.a2 + a.a2 * b.a0 - a.a1 * b.a3 + a.a3 * b.a1,
        a.a0 * b.a3 - a.a2 * b.a1 + a.a1 * b.a2 + a.a3 * b.a0,
    )


def integral_inverse(q: Quaternion) -> Optional[Quaternion]:
    """Inverse inside the integer quaternions, if it exists."""
    inv = q.inverse()
    if inv is None or not inv.is_integral():
        return None
    return Quaternion(*(int(c) for c in (inv.a0, inv.a1, inv.a2, inv.a3)))
