"""
Semilinear algebras: semivector spaces with a bilinear product.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Callable, Optional

import numpy as np
import structlog

from app.algebra.constructors import TruncPolyAlgebra, trunc_poly_mul
from app.algebra.detect.homomorphism import random_members
from app.algebra.errors import DimensionMismatch, UnsupportedProduct
from app.algebra.finite import AxiomReport, ReportBuilder, StructureClass
from app.algebra.linear.spaces import SemiVecDescriptor, Vector, add_vectors, is_semivector_space, scale_vector
from app.config import get_settings

logger = structlog.get_logger()

Product = Callable[[Vector, Vector], Vector]


class ProductRule(str, Enum):
    COORDINATEWISE = "coordinatewise"
    MATRIX = "matrix"
    TRUNCATED_POLYNOMIAL = "truncated-polynomial"

    @classmethod
    def parse(cls, text: str) -> "ProductRule":
        try:
            return cls(text.strip().lower().replace("_", "-"))
        except ValueError:
            raise UnsupportedProduct(f"unsupported product rule {text!r}") from None


def coordinatewise(x: Vector, y: Vector) -> Vector:
    return tuple(a * b for a, b in zip(x, y))


def matrix_product(size: int) -> Product:
    """Product of size x size matrices stored row-major as vectors."""
    def mul(x: Vector, y: Vector) -> Vector:
        a = np.array(x, dtype=object).reshape(size, size)
        b = np.array(y, dtype=object).reshape(size, size)
        return tuple(Fraction(v) for v in a.dot(b).reshape(-1))
    return mul


def truncated_product(alg: TruncPolyAlgebra) -> Product:
    """Coefficient vectors, constant term first, multiplied with x^(bound+1) = 1."""
    return lambda x, y: tuple(Fraction(c) for c in trunc_poly_mul(alg, x, y))


@dataclass(frozen=True)
class SemilinearDescriptor:
    space: SemiVecDescriptor
    product: ProductRule = ProductRule.COORDINATEWISE

    def multiplication(self) -> Product:
        """
        Raises:
            DimensionMismatch: for a matrix product on a non-square dimension.
        """
        n = self.space.dimension
        if self.product is ProductRule.COORDINATEWISE:
            return coordinatewise
        if self.product is ProductRule.MATRIX:
            size = isqrt(n)
            if size * size != n:
                raise DimensionMismatch(f"matrix product needs a square dimension, got {n}")
            return matrix_product(size)
        return truncated_product(TruncPolyAlgebra(n - 1, "Q"))


def is_semilinear_algebra(desc: SemilinearDescriptor, samples: Optional[int] = None,
                          seed: Optional[int] = None) -> AxiomReport:
    """
    Audit a semilinear algebra on probes and seeded samples.

    Besides the semivector space axioms: the product stays in W, is
    associative, distributes on both sides, and satisfies
    c(uv) = (cu)v = u(cv) for scalars c of the semifield.

    Raises:
        UnsupportedProduct: if ``desc.product`` is not a known rule.
    """
    if not isinstance(desc.product, ProductRule):
        raise UnsupportedProduct(f"unsupported product rule {desc.product!r}")
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    mul = desc.multiplication()
    w = desc.space
    builder = ReportBuilder(StructureClass.SEMILINEAR_ALGEBRA)
    builder.merge(is_semivector_space(w, samples=0))

    rng = np.random.default_rng(seed)
    probes = w.probes()
    drawn = w.sample(3 * samples, rng, settings.audit_magnitude)
    triples = [(x, y, z) for x in probes for y in probes for z in probes[:3]]
    triples += list(zip(drawn[0::3], drawn[1::3], drawn[2::3]))
    scalars = random_members(w.scalars, len(triples), rng, settings.audit_magnitude)

    laws = [
        ("closure(*)", lambda c, x, y, z: w.contains(mul(x, y))),
        ("associativity(*)", lambda c, x, y, z: mul(mul(x, y), z) == mul(x, mul(y, z))),
        ("left_distributivity", lambda c, x, y, z: mul(x, add_vectors(y, z)) == add_vectors(mul(x, y), mul(x, z))),
        ("right_distributivity", lambda c, x, y, z: mul(add_vectors(x, y), z) == add_vectors(mul(x, z), mul(y, z))),
        ("scalar_compatibility", lambda c, x, y, z: scale_vector(c, mul(x, y)) == mul(scale_vector(c, x), y)
         == mul(x, scale_vector(c, y))),
    ]
    for axiom, holds in laws:
        for k, (x, y, z) in enumerate(triples):
            c = scalars[k] if k < len(scalars) else Fraction(1)
            if not holds(c, x, y, z):
                if axiom == "scalar_compatibility":
                    builder.add(axiom, c, x, y)
                else:
                    builder.add(axiom, x, y, z)
                break

    report = builder.build()
    logger.debug("semilinear_algebra_checked", space=w.name, product=desc.product.value, ok=report.ok)
    return report
