"""
Ideals of finite commutative rings and the Smarandache ideal searches on them.

{0} and the whole ring are enumerated but flagged ``trivial``. "Maximal"
means maximal among proper ideals and "minimal" means minimal among nonzero
proper ideals.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog

from app.algebra.errors import AxiomFailure, NotAField, NotAnIdeal, NotCommutative
from app.algebra.finite import (
    FiniteRingTable,
    check_commutative,
    check_field,
    check_ring,
    closure_of,
    enumerate_closed_subsets,
)

logger = structlog.get_logger()

Subset = Tuple[int, ...]


@dataclass(frozen=True)
class IdealClassification:
    """Flags of one ideal, with witnesses for the flags that fail."""

    ideal: str
    prime: bool
    maximal: bool
    minimal: bool
    principal: bool
    generator: Optional[str] = None
    trivial: bool = False
    members: Optional[Subset] = None
    prime_witness: Optional[Tuple[str, str]] = None
    larger_ideal: Optional[str] = None
    smaller_ideal: Optional[str] = None


@dataclass(frozen=True)
class RelativeIdealWitness:
    """A subset S that absorbs a reference subset, with every checked pair."""

    ideal: Subset
    reference: Subset
    pairs: Tuple[Tuple[int, int], ...]


@dataclass
class SIdealSearch:
    """Ideals containing a strictly smaller field, plus ideals that are fields themselves."""

    witnesses: List[Tuple[Subset, Subset]] = field(default_factory=list)
    near_misses: List[Subset] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    @property
    def first(self) -> Optional[Tuple[Subset, Subset]]:
        return self.witnesses[0] if self.witnesses else None


def format_subset(ring: FiniteRingTable, subset: Sequence[int]) -> str:
    return "{" + ",".join(ring.labels[e] for e in subset) + "}"


def _require_commutative_ring(ring: FiniteRingTable) -> None:
    report = check_ring(ring, cap=1)
    if not report.ok:
        raise AxiomFailure(f"{ring.name} is not a ring", report)
    if not check_commutative(ring.multiplicative_magma(), cap=1).ok:
        raise NotCommutative(f"{ring.name} has non-commutative multiplication")


def _absorbs(ring: FiniteRingTable, subset: Sequence[int]) -> bool:
    inside = np.zeros(ring.order, dtype=bool)
    inside[list(subset)] = True
    products = ring.mul_array[:, list(subset)]
    return bool(inside[products].all())


def enumerate_ideals(ring: FiniteRingTable) -> List[Subset]:
    """
    All ideals of a finite commutative ring, ordered by size then lexicographically.

    Raises:
        AxiomFailure: if the tables are not a ring.
        NotCommutative: if multiplication is not commutative.
    """
    _require_commutative_ring(ring)
    subgroups = enumerate_closed_subsets(ring.additive_magma(), check=False)
    ideals = [s for s in subgroups if _absorbs(ring, s)]
    logger.debug("ideals_enumerated", ring=ring.name, count=len(ideals))
    return ideals


def principal_ideal(ring: FiniteRingTable, a: int) -> Subset:
    """Ideal generated by a: the additive span of a and r*a for every r."""
    generators = {a} | {ring.times(r, a) for r in range(ring.order)}
    return closure_of(ring.additive_magma(), generators)


def classify_ideal(
    ring: FiniteRingTable, ideal: Sequence[int], ideals: Optional[List[Subset]] = None
) -> IdealClassification:
    """
    Prime, maximal, minimal and principal flags of one ideal.

    Raises:
        NotAnIdeal: if ``ideal`` is not among the ring's ideals.
    """
    ideals = enumerate_ideals(ring) if ideals is None else ideals
    members = tuple(sorted(set(ideal)))
    if members not in ideals:
        raise NotAnIdeal(f"{format_subset(ring, members)} is not an ideal of {ring.name}")

    whole = tuple(range(ring.order))
    zero = (ring.zero,)
    proper = members != whole
    nonzero = members != zero
    inside = set(members)

    prime_witness = None
    prime = proper
    if proper:
        M = ring.mul_array
        for x in range(ring.order):
            if x in inside:
                continue
            for y in range(ring.order):
                if y not in inside and int(M[x, y]) in inside:
                    prime_witness = (ring.labels[x], ring.labels[y])
                    break
            if prime_witness:
                prime = False
                break

    larger = [j for j in ideals if j != whole and j != members and inside < set(j)]
    smaller = [j for j in ideals if j != zero and j != members and set(j) < inside]
    maximal = proper and not larger
    minimal = proper and nonzero and not smaller

    generator = None
    for a in members:
        if principal_ideal(ring, a) == members:
            generator = ring.labels[a]
            break

    return IdealClassification(
        ideal=format_subset(ring, members),
        prime=prime,
        maximal=maximal,
        minimal=minimal,
        principal=generator is not None,
        generator=generator,
        trivial=not proper or not nonzero,
        members=members,
        prime_witness=prime_witness,
        larger_ideal=format_subset(ring, larger[0]) if larger else None,
        smaller_ideal=format_subset(ring, smaller[0]) if smaller else None,
    )


def classify_all(ring: FiniteRingTable) -> List[IdealClassification]:
    ideals = enumerate_ideals(ring)
    return [classify_ideal(ring, i, ideals) for i in ideals]


def field_subsets(ring: FiniteRingTable) -> List[Subset]:
    """Closed subsets with at least two elements that are fields under the induced operations."""
    return [
        s for s in enumerate_closed_subsets(ring, check=False)
        if len(s) >= 2 and check_field(ring, subset=s, cap=1).ok
    ]


def find_s_ideal(ring: FiniteRingTable) -> SIdealSearch:
    """
    Proper ideals A containing a strictly smaller subset that is a field.

    An ideal that is itself a field but contains no smaller field is
    recorded as a near miss.
    """
    ideals = enumerate_ideals(ring)
    fields = field_subsets(ring)
    whole = tuple(range(ring.order))
    result = SIdealSearch()
    for ideal in ideals:
        if ideal == whole:
            continue
        inside = set(ideal)
        contained = [f for f in fields if set(f) <= inside]
        strict = [f for f in contained if len(f) < len(ideal)]
        for f in strict:
            result.witnesses.append((ideal, f))
        if not strict and ideal in contained:
            result.near_misses.append(ideal)
    logger.debug(
        "s_ideal_search",
        ring=ring.name,
        witnesses=len(result.witnesses),
        near_misses=len(result.near_misses),
    )
    return result


def find_s_definite_ideals(
    ring: FiniteRingTable, reference: Sequence[int], allow_trivial: bool = False
) -> List[RelativeIdealWitness]:
    """
    Subsets S with (S,+) an abelian group and s*b in S for every s in S, b in B.

    Raises:
        NotAField: if B is not a field under the induced operations.
    """
    b = tuple(sorted(set(reference)))
    report = check_field(ring, subset=b)
    if not report.ok:
        raise NotAField(f"{format_subset(ring, b)} is not a field in {ring.name}")

    whole = tuple(range(ring.order))
    zero = (ring.zero,)
    witnesses = []
    for s in enumerate_closed_subsets(ring.additive_magma(), check=False):
        if not allow_trivial and s in (whole, zero):
            continue
        inside = set(s)
        pairs = tuple((x, y) for x in s for y in b)
        if all(ring.times(x, y) in inside for x, y in pairs):
            witnesses.append(RelativeIdealWitness(ideal=s, reference=b, pairs=pairs))
    return witnesses
