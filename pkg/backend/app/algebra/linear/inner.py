"""
Inner products on semivector spaces: (x|y) = sum form[i][j] * x_i * y_j.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from app.algebra.detect.homomorphism import random_members
from app.algebra.errors import DimensionMismatch, NotInLattice
from app.algebra.finite import AxiomReport, ReportBuilder, StructureClass, jsonable
from app.algebra.linear.maps import Matrix, as_matrix
from app.algebra.linear.spaces import SemiVecDescriptor, Vector, add_vectors, as_vector, scale_vector
from app.algebra.symbolic import enumerate_truncated, member
from app.config import get_settings

logger = structlog.get_logger()


def identity_form(n: int) -> Matrix:
    return as_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def _form(w: SemiVecDescriptor, form: Optional[Sequence[Sequence]]) -> Matrix:
    matrix = identity_form(w.dimension) if form is None else as_matrix(form)
    if len(matrix) != w.dimension or any(len(r) != w.dimension for r in matrix):
        raise DimensionMismatch(f"form must be {w.dimension}x{w.dimension}")
    return matrix


def _value(form: Matrix, x: Vector, y: Vector) -> Fraction:
    return sum((form[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(y))), Fraction(0))


def inner_product(x: Sequence, y: Sequence, w: SemiVecDescriptor,
                  form: Optional[Sequence[Sequence]] = None) -> Fraction:
    """
    (x|y) for x, y in W; the identity form gives the standard product.

    Raises:
        NotInLattice: if x or y is not a member of W.
        DimensionMismatch: if the vectors or the form have the wrong size.
    """
    x, y = as_vector(x), as_vector(y)
    for name, v in (("x", x), ("y", y)):
        if not w.contains(v):
            raise NotInLattice(f"{name} = {jsonable(v)} is not in {w.name}")
    return _value(_form(w, form), x, y)


def audit_inner_product(w: SemiVecDescriptor, form: Optional[Sequence[Sequence]] = None,
                        samples: Optional[int] = None, seed: Optional[int] = None) -> AxiomReport:
    """
    Check the inner product axioms on sampled members of W.

    Additivity in the first argument, homogeneity for scalars of the
    semifield, values inside the semifield, and (a|a) > 0 for a != 0.
    Conjugate symmetry holds trivially over Q.
    """
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    matrix = _form(w, form)
    rng = np.random.default_rng(seed)
    points = w.probes() + w.sample(3 * samples, rng, settings.audit_magnitude)
    scalars = random_members(w.scalars, samples, rng, settings.audit_magnitude)
    builder = ReportBuilder(StructureClass.INNER_PRODUCT)

    triples = list(zip(points[0::3], points[1::3], points[2::3]))
    for a, b, c in triples:
        if _value(matrix, add_vectors(a, b), c) != _value(matrix, a, c) + _value(matrix, b, c):
            builder.add("additivity", a, b, c)
            break
    for k, (a, b, _) in enumerate(triples):
        s = scalars[k % len(scalars)] if scalars else Fraction(1)
        if _value(matrix, scale_vector(s, a), b) != s * _value(matrix, a, b):
            builder.add("homogeneity", s, a, b)
            break
    for a, b in zip(points, points[1:]):
        if not member(w.scalars, _value(matrix, a, b)):
            builder.add("value_in_semifield", a, b)
            break
    for a in points:
        if any(a) and _value(matrix, a, a) <= 0:
            builder.add("positivity", a)
            break

    report = builder.build()
    logger.debug("inner_product_audited", space=w.name, ok=report.ok)
    return report


@dataclass(frozen=True)
class OrthogonalityReading:
    """One reading of "the only orthogonal vector is 0", decided on a finite box."""

    statement: str
    holds: bool
    witness: Optional[Tuple[Vector, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"statement": self.statement, "holds": self.holds, "witness": jsonable(self.witness)}


def _box(w: SemiVecDescriptor, bound: int) -> List[Vector]:
    columns = [enumerate_truncated(c, bound) for c in w.components]
    return [tuple(v) for v in product(*columns)]


def orthogonality_readings(w: SemiVecDescriptor, bound: int = 3,
                           form: Optional[Sequence[Sequence]] = None) -> List[OrthogonalityReading]:
    """
    Decide, on every member of W with coordinates of magnitude at most
    ``bound``:

    * (x|x) = 0 only for x = 0;
    * x orthogonal to every member only for x = 0;
    * (x|y) = 0 exactly when x and y have disjoint supports;
    * (x|y) = 0 only when x or y is 0, the literal sentence, which fails.
    """
    matrix = _form(w, form)
    box = _box(w, bound)
    zero = tuple(Fraction(0) for _ in range(w.dimension))

    self_orthogonal = next((x for x in box if x != zero and _value(matrix, x, x) == 0), None)
    to_all = next((x for x in box if x != zero and all(_value(matrix, x, y) == 0 for y in box)), None)
    support_mismatch = None
    zero_pair = None
    for x, y in product(box, box):
        orthogonal = _value(matrix, x, y) == 0
        disjoint = all(a == 0 or b == 0 for a, b in zip(x, y))
        if orthogonal != disjoint and support_mismatch is None:
            support_mismatch = (x, y)
        if orthogonal and x != zero and y != zero and zero_pair is None:
            zero_pair = (x, y)

    readings = [
        OrthogonalityReading("(x|x) = 0 implies x = 0", self_orthogonal is None,
                             None if self_orthogonal is None else (self_orthogonal,)),
        OrthogonalityReading("x orthogonal to all of W implies x = 0", to_all is None,
                             None if to_all is None else (to_all,)),
        OrthogonalityReading("(x|y) = 0 iff x and y have disjoint supports", support_mismatch is None,
                             support_mismatch),
        OrthogonalityReading("(x|y) = 0 implies x = 0 or y = 0", zero_pair is None, zero_pair),
    ]
    logger.debug("orthogonality_readings", space=w.name, bound=bound,
                 holds=[r.holds for r in readings])
    return readings
