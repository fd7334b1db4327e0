"""
Linear maps restricted to semivector spaces.

* restricted transformations T: S -> S1 between semivector spaces over one
  semifield, with T(au + v) = aT(u) + T(v) and T(S) inside S1;
* converging maps V -> W, linear over the whole field with image in W;
* diverging maps W -> V, with T(ax + y) = aT(x) + T(y) for x, y in W and a
  anywhere in the field.

Maps are rational matrices (row-major, one row per output coordinate) or one
of the named componentwise rules ``abs``, ``zero`` and ``identity``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import structlog

from app.algebra.detect.homomorphism import random_members
from app.algebra.errors import DimensionMismatch, Unsupported
from app.algebra.finite import AxiomReport, ReportBuilder, StructureClass
from app.algebra.ideals import sample_members
from app.algebra.linear.spaces import (
    SemiVecDescriptor,
    Vector,
    add_vectors,
    as_vector,
    is_semivector_space,
    scale_vector,
    unit_vector,
)
from app.algebra.symbolic import Q, ZERO, format_set, scalar_multiple, subset_of
from app.config import get_settings

logger = structlog.get_logger()

Matrix = Tuple[Tuple[Fraction, ...], ...]
Rule = Callable[[Vector], Vector]
MapSpec = Union[str, Sequence[Sequence], Rule]

FIELD_SCALARS = (Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 7), Fraction(0))

NAMED_RULES = {
    "abs": lambda v: tuple(abs(x) for x in v),
    "zero": lambda v: tuple(Fraction(0) for _ in v),
    "identity": lambda v: tuple(v),
}


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    matrix = tuple(as_vector(r) for r in rows)
    if len({len(r) for r in matrix}) > 1:
        raise DimensionMismatch("matrix rows have different lengths")
    return matrix


def apply_matrix(matrix: Matrix, v: Sequence[Fraction]) -> Vector:
    if matrix and len(matrix[0]) != len(v):
        raise DimensionMismatch(f"matrix with {len(matrix[0])} columns applied to a vector of length {len(v)}")
    return tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in matrix)


def as_rule(spec: MapSpec) -> Rule:
    """Callable form of a named rule, a matrix or a callable."""
    if isinstance(spec, str):
        try:
            return NAMED_RULES[spec]
        except KeyError:
            raise Unsupported(f"unknown map {spec!r}; expected one of {sorted(NAMED_RULES)}") from None
    if callable(spec):
        return spec
    matrix = as_matrix(spec)
    return lambda v: apply_matrix(matrix, v)


@dataclass(frozen=True)
class RestrictedMap:
    """A rational matrix between two semivector spaces."""

    matrix: Matrix
    domain: SemiVecDescriptor
    codomain: SemiVecDescriptor

    def __post_init__(self):
        rows = len(self.matrix)
        cols = len(self.matrix[0]) if rows else 0
        if rows != self.codomain.dimension or cols != self.domain.dimension:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix cannot map dimension {self.domain.dimension} "
                f"to dimension {self.codomain.dimension}"
            )

    @classmethod
    def of(cls, rows: Iterable[Iterable], domain: SemiVecDescriptor,
           codomain: SemiVecDescriptor) -> "RestrictedMap":
        return cls(as_matrix(rows), domain, codomain)

    def __call__(self, v: Sequence) -> Vector:
        return apply_matrix(self.matrix, as_vector(v))


def sum_projection_map() -> RestrictedMap:
    """T(x,y,z,u,v) = (x+y, u, y, z+u+v) from Z0^5 to Q0 x Q0 x Z0 x Q0, over Z0."""
    return RestrictedMap.of(
        [[1, 1, 0, 0, 0], [0, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 1, 1, 1]],
        SemiVecDescriptor.uniform("Z0", 5, "Z0"),
        SemiVecDescriptor.parse(["Q0", "Q0", "Z0", "Q0"], "Z0"),
    )


def pair_sum_map() -> RestrictedMap:
    """T(x,y,z) = (x+y, z, y+z, x) from Z0^3 to Z0^4, over Z0."""
    return RestrictedMap.of(
        [[1, 1, 0], [0, 0, 1], [0, 1, 1], [1, 0, 0]],
        SemiVecDescriptor.uniform("Z0", 3, "Z0"),
        SemiVecDescriptor.uniform("Z0", 4, "Z0"),
    )


def cyclic_difference_matrix(n: int = 4) -> Matrix:
    """(x1 - x2, x2 - x3, ..., xn - x1)."""
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] += 1
        row[(i + 1) % n] -= 1
        rows.append(row)
    return as_matrix(rows)


def _containment_by_signs(builder: ReportBuilder, m: RestrictedMap) -> None:
    """
    Column i sends component i into t_ji * component i; when every domain
    component holds 0 and the codomain components are additively closed,
    T(S) lies in S1 exactly when every such term does.
    """
    domain, codomain = m.domain, m.codomain
    if not all(c.with_zero for c in domain.components):
        return
    for j, row in enumerate(m.matrix):
        for i, t in enumerate(row):
            c = domain.components[i]
            term = ZERO if t == 0 else scalar_multiple(t, c)
            if subset_of(term, codomain.components[j]):
                continue
            for x in sample_members(c):
                v = unit_vector(domain.dimension, i, x)
                if not codomain.contains(m(v)):
                    builder.add("containment", v)
                    return
            builder.add("containment", i, j, format_set(term))
            return


def verify_restricted_transformation(m: RestrictedMap, samples: Optional[int] = None,
                                     seed: Optional[int] = None) -> AxiomReport:
    """
    Audit a restricted transformation.

    Checks that both sides are semivector spaces over the same semifield,
    the identity T(au + v) = aT(u) + T(v) on probes and samples, and
    T(S) inside S1 by sign analysis of the matrix plus sampling.
    """
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    builder = ReportBuilder(StructureClass.RESTRICTED_MAP)
    builder.merge(is_semivector_space(m.domain, samples=0), prefix="domain:")
    builder.merge(is_semivector_space(m.codomain, samples=0), prefix="codomain:")
    if m.domain.scalars != m.codomain.scalars:
        builder.add("semifield", format_set(m.domain.scalars), format_set(m.codomain.scalars))

    rng = np.random.default_rng(seed)
    points = m.domain.probes() + m.domain.sample(samples, rng, settings.audit_magnitude)
    scalars = [a for a in sample_members(m.domain.scalars, 6)]
    for u, v in zip(points, points[1:] + points[:1]):
        for a in scalars:
            if m(add_vectors(scale_vector(a, u), v)) != add_vectors(scale_vector(a, m(u)), m(v)):
                builder.add("linearity", a, u, v)
                break

    _containment_by_signs(builder, m)
    if not any(v.axiom == "containment" for v in builder.violations):
        for v in points:
            if not m.codomain.contains(m(v)):
                builder.add("containment", v)
                break

    report = builder.build()
    logger.debug("restricted_map_checked", domain=m.domain.name, codomain=m.codomain.name, ok=report.ok)
    return report


def _field_points(n: int, count: int, rng: np.random.Generator, magnitude: int) -> List[Vector]:
    probes = [unit_vector(n, i, sign) for i in range(n) for sign in (Fraction(1), Fraction(-1))]
    columns = [random_members(Q, count, rng, magnitude) for _ in range(n)]
    return probes + [tuple(col[k] for col in columns) for k in range(count)]


def _first_pair(points: Sequence[Vector], bad: Callable[[Vector, Vector], bool]):
    for x in points:
        for y in points:
            if bad(x, y):
                return x, y
    return None


def verify_converging(spec: MapSpec, w: SemiVecDescriptor, samples: Optional[int] = None,
                      seed: Optional[int] = None) -> AxiomReport:
    """
    Audit a converging map T: Q^n -> W.

    T must be additive, homogeneous for every rational scalar (negative ones
    included) and land in W. Only the zero map passes into a space such as
    Z0^n, and the report shows why the others fail.
    """
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    rule = as_rule(spec)
    n = w.dimension
    rng = np.random.default_rng(seed)
    points = _field_points(n, samples, rng, settings.audit_magnitude)
    probes = points[:2 * n]
    builder = ReportBuilder(StructureClass.CONVERGING_MAP)

    pair = _first_pair(probes, lambda x, y: rule(add_vectors(x, y)) != add_vectors(rule(x), rule(y)))
    if pair is None:
        pair = next(((x, y) for x, y in zip(points[::2], points[1::2])
                     if rule(add_vectors(x, y)) != add_vectors(rule(x), rule(y))), None)
    if pair is not None:
        builder.add("additivity", *pair)

    scalars = list(FIELD_SCALARS) + random_members(Q, samples, rng, settings.audit_magnitude)
    for a, x in ((a, x) for a in scalars for x in probes):
        if rule(scale_vector(a, x)) != scale_vector(a, rule(x)):
            builder.add("homogeneity", a, x)
            break

    for x in points:
        image = rule(x)
        if len(image) != n or not w.contains(image):
            builder.add("image", x)
            break

    report = builder.build()
    logger.debug("converging_map_checked", space=w.name, ok=report.ok)
    return report


def verify_diverging(spec: MapSpec, w: SemiVecDescriptor, samples: Optional[int] = None,
                     seed: Optional[int] = None) -> AxiomReport:
    """Audit T(ax + y) = aT(x) + T(y) for x, y in W and every rational a."""
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    rule = as_rule(spec)
    rng = np.random.default_rng(seed)
    probes = w.probes()
    drawn = w.sample(2 * samples, rng, settings.audit_magnitude)
    scalars = random_members(Q, samples, rng, settings.audit_magnitude)
    checks = [(a, x, y) for x in probes for y in probes for a in FIELD_SCALARS]
    checks += list(zip(scalars, drawn[::2], drawn[1::2]))
    builder = ReportBuilder(StructureClass.DIVERGING_MAP)

    for a, x, y in checks:
        if rule(add_vectors(scale_vector(a, x), y)) != add_vectors(scale_vector(a, rule(x)), rule(y)):
            builder.add("linearity", a, x, y)
            break

    report = builder.build()
    logger.debug("diverging_map_checked", space=w.name, ok=report.ok)
    return report
