"""
Semivector spaces embedded in Q^n and their S-definite special bases.

A SemiVecDescriptor is a product of symbolic component sets (Z0, Q0, Z, Q,
{0}, lattices) acted on by a scalar semifield. Closure is decided by the
symbolic-set rules and then confirmed on seeded random samples.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import structlog
from sympy import Matrix, Rational

from app.algebra.detect.homomorphism import random_members
from app.algebra.detect.rules import semifield_report
from app.algebra.errors import DimensionMismatch
from app.algebra.finite import AxiomReport, ReportBuilder, StructureClass
from app.algebra.ideals import sample_members
from app.algebra.symbolic import (
    LatticeSet,
    SetKind,
    format_set,
    is_closed_add,
    member,
    parse_set,
    set_product,
    subset_of,
    to_rat,
)
from app.config import get_settings

logger = structlog.get_logger()

Vector = Tuple[Fraction, ...]

# Scalars tried first when looking for an action that leaves a component.
_SCALAR_PROBES = (Fraction(3, 7), Fraction(1, 2), Fraction(-1), Fraction(2), Fraction(0))


def as_vector(values: Iterable) -> Vector:
    return tuple(to_rat(v) for v in values)


def unit_vector(n: int, i: int, value: Fraction = Fraction(1)) -> Vector:
    return tuple(value if j == i else Fraction(0) for j in range(n))


@dataclass(frozen=True)
class SemiVecDescriptor:
    """
    W = components[0] x ... x components[n-1] over the semifield ``scalars``.

    Whether the scalars really act inside W is checked by
    :func:`is_semivector_space`, never assumed.
    """

    components: Tuple[LatticeSet, ...]
    scalars: LatticeSet

    @classmethod
    def parse(cls, components: Sequence[str], scalars: str) -> "SemiVecDescriptor":
        return cls(tuple(parse_set(c) for c in components), parse_set(scalars))

    @classmethod
    def uniform(cls, component: str, n: int, scalars: str) -> "SemiVecDescriptor":
        return cls.parse([component] * n, scalars)

    @property
    def dimension(self) -> int:
        return len(self.components)

    @property
    def name(self) -> str:
        parts = [format_set(c) for c in self.components]
        if len(set(parts)) == 1:
            body = f"{parts[0]}^{len(parts)}"
        else:
            body = " x ".join(parts)
        return f"{body} over {format_set(self.scalars)}"

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.dimension:
            raise DimensionMismatch(f"vector of length {len(v)} in a space of dimension {self.dimension}")
        return all(member(c, x) for c, x in zip(self.components, v))

    def sample(self, count: int, rng: np.random.Generator, magnitude: int) -> List[Vector]:
        """Seeded random members of W."""
        columns = [random_members(c, count, rng, magnitude) for c in self.components]
        if any(len(col) < count for col in columns):
            return []
        return [tuple(col[k] for col in columns) for k in range(count)]

    def probes(self) -> List[Vector]:
        """Small structured members: zero and one nonzero coordinate at a time."""
        n = self.dimension
        out: List[Vector] = []
        if all(c.with_zero for c in self.components):
            out.append(tuple(Fraction(0) for _ in range(n)))
            for i, c in enumerate(self.components):
                for x in sample_members(c, 4):
                    if x != 0:
                        out.append(unit_vector(n, i, x))
        return out


def scale_vector(a: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(a * x for x in v)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def _action_witness(w: SemiVecDescriptor, failing: Sequence[int]) -> Optional[Tuple[Fraction, Vector]]:
    """A scalar and a vector nonzero on (at most two) failing coordinates."""
    for a in _SCALAR_PROBES + tuple(sample_members(w.scalars)):
        if not member(w.scalars, a):
            continue
        for i in failing:
            for x in sample_members(w.components[i]):
                if member(w.components[i], a * x):
                    continue
                support = [j for j in failing if member(w.components[j], x)][:2] or [i]
                v = tuple(x if j in support else Fraction(0) for j in range(w.dimension))
                if not w.contains(v):
                    continue
                return a, v
    return None


def is_semivector_space(w: SemiVecDescriptor, samples: Optional[int] = None,
                        seed: Optional[int] = None) -> AxiomReport:
    """
    Check that W is closed under addition and under the scalar action.

    Args:
        w: the candidate semivector space
        samples: random confirmations (default ``audit_samples``)
        seed: generator seed (default ``default_seed``)

    Returns:
        AxiomReport; a failed scalar action carries the witness (a, w).
    """
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    builder = ReportBuilder(StructureClass.SEMIVECTOR_SPACE)

    builder.merge(semifield_report(w.scalars), prefix="scalars:")
    for i, c in enumerate(w.components):
        if not is_closed_add(c):
            builder.add("closure(+)", i, format_set(c))

    failing = [i for i, c in enumerate(w.components) if not subset_of(set_product(w.scalars, c), c)]
    if failing:
        witness = _action_witness(w, failing)
        builder.add("scalar_action", *(witness or (format_set(w.scalars),)))

    if not builder.failed:
        rng = np.random.default_rng(seed)
        vectors = w.sample(2 * samples, rng, settings.audit_magnitude)
        scalars = random_members(w.scalars, samples, rng, settings.audit_magnitude)
        for a, u, v in zip(scalars, vectors[::2], vectors[1::2]):
            if not w.contains(add_vectors(u, v)):
                builder.add("closure(+)", u, v)
                break
            if not w.contains(scale_vector(a, u)):
                builder.add("scalar_action", a, u)
                break

    report = builder.build()
    logger.debug("semivector_space_checked", space=w.name, ok=report.ok)
    return report


def _generators(w: SemiVecDescriptor) -> Optional[List[Vector]]:
    """
    A finite set whose nonnegative scalar combinations give all of W, or None
    when W has no finite generating set over its semifield.
    """
    n = w.dimension
    integral = w.scalars.is_lattice
    gens: List[Vector] = []
    for i, c in enumerate(w.components):
        if c.kind in (SetKind.ZERO, SetKind.EMPTY):
            continue
        if c.is_dense:
            if integral:
                return None
            step = Fraction(1)
        else:
            if not integral:
                return None
            step = c.scale
        for u in sorted(c.units, reverse=True):
            gens.append(unit_vector(n, i, u * step))
    return gens


@dataclass(frozen=True)
class BasisCheck:
    """
    ``q_rank`` is the rank over Q; ``unreachable`` is a member of W that is
    not a nonnegative scalar combination of the basis, when one was found.
    """

    is_basis: bool
    q_rank: int
    unreachable: Optional[Vector] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_basis


def _to_sympy(vectors: Sequence[Vector]) -> Matrix:
    return Matrix([[Rational(x.numerator, x.denominator) for x in v] for v in vectors])


def _coordinates(basis: Matrix, target: Vector) -> Vector:
    solution = basis.T.LUsolve(Matrix([Rational(x.numerator, x.denominator) for x in target]))
    return tuple(Fraction(int(x.p), int(x.q)) for x in solution)


def _scan_order(gens: Sequence[Vector], vectors: Sequence[Vector]) -> List[Vector]:
    """Generators ordered by the first basis vector whose support they share."""
    def first_sharing(g):
        return next((i for i, v in enumerate(vectors) if any(a and b for a, b in zip(v, g))), len(vectors))
    return sorted(gens, key=first_sharing)


def is_s_definite_basis(basis: Sequence[Sequence], n: int, w: SemiVecDescriptor) -> BasisCheck:
    """
    Whether ``basis`` is a basis of Q^n over Q and of W over its semifield.

    Q-independence gives unique coordinates, so the semifield basis test
    reduces to: every basis vector lies in W and every generator of W has
    coordinates in the semifield.

    Raises:
        DimensionMismatch: if a vector or W does not have dimension ``n``.
    """
    vectors = [as_vector(v) for v in basis]
    if w.dimension != n or any(len(v) != n for v in vectors):
        raise DimensionMismatch(f"basis vectors and {w.name} must all have dimension {n}")
    rank = _to_sympy(vectors).rank() if vectors else 0
    if len(vectors) != n or rank != n:
        return BasisCheck(False, rank, reason=f"not a basis of Q^{n}")
    if not is_semivector_space(w, samples=0).ok:
        return BasisCheck(False, rank, reason=f"{w.name} is not a semivector space")
    outside = next((v for v in vectors if not w.contains(v)), None)
    if outside is not None:
        return BasisCheck(False, rank, reason=f"{outside} is not in {w.name}")
    gens = _generators(w)
    if gens is None:
        return BasisCheck(False, rank, reason=f"{w.name} has no finite basis")
    m = _to_sympy(vectors)
    for g in _scan_order(gens, vectors):
        if not all(member(w.scalars, c) for c in _coordinates(m, g)):
            return BasisCheck(False, rank, unreachable=g, reason=f"{g} is not a combination over the semifield")
    return BasisCheck(True, rank)


def s_definite_dimension(n: int, candidates: Sequence[SemiVecDescriptor]) -> Optional[int]:
    """
    ``n`` when some candidate semivector space of Q^n has a basis of n
    vectors that is also a basis of Q^n; None (undefined) otherwise.
    """
    for w in candidates:
        if w.dimension != n or not is_semivector_space(w, samples=0).ok:
            continue
        gens = _generators(w)
        if gens is None or len(gens) != n:
            continue
        if is_s_definite_basis(gens, n, w):
            logger.debug("s_definite_dimension", n=n, space=w.name)
            return n
    return None

