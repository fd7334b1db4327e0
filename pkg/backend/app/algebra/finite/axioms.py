"""
Axiom checkers for finite magmas and two-operation tables.

Every checker scans the Cayley tables with numpy, optionally restricted to a
subset of elements, and reports counterexamples in lexicographic witness
order up to the violation cap. A subset that is not closed yields only
closure violations; the remaining axioms are meaningless on it.
"""
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import structlog

from app.algebra.errors import AxiomFailure, MalformedTable
from app.algebra.finite.report import AxiomReport, ReportBuilder, StructureClass
from app.algebra.finite.tables import ElementId, FiniteMagma, FiniteRingTable

logger = structlog.get_logger()

Subset = Optional[Iterable[ElementId]]
Structure = Union[FiniteMagma, FiniteRingTable]

ADD = "(+)"
MUL = "(*)"


class _Restriction:
    """Re-indexes a subset to ``0..k-1`` and records where it is not closed."""

    def __init__(self, arrays: Dict[str, np.ndarray], subset: Subset):
        n = next(iter(arrays.values())).shape[0]
        if subset is None:
            elements = np.arange(n, dtype=np.int64)
        else:
            chosen = sorted({int(s) for s in subset})
            if chosen and (chosen[0] < 0 or chosen[-1] >= n):
                raise MalformedTable(f"subset {chosen} has indices outside 0..{n - 1}")
            elements = np.array(chosen, dtype=np.int64)
        self.elements = elements
        lookup = np.full(n, -1, dtype=np.int64)
        lookup[elements] = np.arange(len(elements))
        self.local: Dict[str, np.ndarray] = {}
        self.closure: List[Tuple[str, int, int]] = []
        for name, arr in arrays.items():
            mapped = lookup[arr[np.ix_(elements, elements)]]
            for i, j in np.argwhere(mapped < 0):
                self.closure.append((name, int(elements[i]), int(elements[j])))
            self.local[name] = mapped

    @property
    def size(self) -> int:
        return len(self.elements)

    def parent(self, *local_ids) -> Tuple[int, ...]:
        return tuple(int(self.elements[i]) for i in local_ids)


def _emit(builder: ReportBuilder, axiom: str, witnesses: Iterable[Tuple[int, ...]]) -> bool:
    """Add witnesses; False once the cap has been passed."""
    for witness in witnesses:
        builder.add(axiom, *witness)
        if builder.truncated:
            return False
    return True


# Single-operation scans on a local table ``t``

def _associativity(builder, r: _Restriction, t: np.ndarray, suffix: str = "") -> bool:
    for a in range(t.shape[0]):
        mask = t[t[a]] != t[a][t]
        if mask.any() and not _emit(
            builder, "associativity" + suffix, (r.parent(a, b, c) for b, c in np.argwhere(mask))
        ):
            return False
    return True


def _identity_local(t: np.ndarray) -> Optional[int]:
    n = t.shape[0]
    ar = np.arange(n)
    left = np.all(t == ar[None, :], axis=1)
    right = np.all(t == ar[:, None], axis=0)
    ids = np.flatnonzero(left & right)
    return int(ids[0]) if ids.size else None


def _identity(builder, t: np.ndarray, suffix: str = "") -> Optional[int]:
    e = _identity_local(t)
    if e is None:
        builder.add("identity" + suffix)
    return e


def _inverses(builder, r: _Restriction, t: np.ndarray, e: int, suffix: str = "",
              skip: Optional[int] = None) -> bool:
    has_inverse = np.any((t == e) & (t.T == e), axis=1)
    missing = [int(a) for a in np.flatnonzero(~has_inverse) if a != skip]
    return _emit(builder, "inverse" + suffix, (r.parent(a) for a in missing))


def _commutativity(builder, r: _Restriction, t: np.ndarray, suffix: str = "") -> bool:
    mask = np.triu(t != t.T, k=1)
    return _emit(builder, "commutativity" + suffix, (r.parent(a, b) for a, b in np.argwhere(mask)))


# Two-operation scans on local tables ``A`` (addition) and ``M`` (multiplication)

def _left_distributivity(builder, r: _Restriction, A: np.ndarray, M: np.ndarray) -> bool:
    for a in range(A.shape[0]):
        row = M[a]
        mask = row[A] != A[row[:, None], row[None, :]]
        if mask.any() and not _emit(
            builder, "left_distributivity", (r.parent(a, b, c) for b, c in np.argwhere(mask))
        ):
            return False
    return True


def _right_distributivity(builder, r: _Restriction, A: np.ndarray, M: np.ndarray) -> bool:
    for a in range(A.shape[0]):
        mask = M[A[a]] != A[M[a][None, :], M]
        if mask.any() and not _emit(
            builder, "right_distributivity", (r.parent(a, b, c) for b, c in np.argwhere(mask))
        ):
            return False
    return True


def _strictness(builder, r: _Restriction, A: np.ndarray, z: int) -> bool:
    mask = A == z
    mask[z, z] = False
    return _emit(builder, "strictness", (r.parent(a, b) for a, b in np.argwhere(mask)))


def _zero_divisors(builder, r: _Restriction, M: np.ndarray, z: int) -> bool:
    mask = M == z
    mask[z, :] = False
    mask[:, z] = False
    return _emit(builder, "zero_divisor", (r.parent(a, b) for a, b in np.argwhere(mask)))


# Drivers

def _magma_restriction(m: FiniteMagma, subset: Subset, builder: ReportBuilder):
    r = _Restriction({"": m.array}, subset)
    for _, a, b in r.closure:
        builder.add("closure", a, b)
    return r


def _ring_restriction(ring: FiniteRingTable, subset: Subset, builder: ReportBuilder):
    r = _Restriction({ADD: ring.add_array, MUL: ring.mul_array}, subset)
    for name, a, b in r.closure:
        builder.add("closure" + name, a, b)
    return r


def _finish(builder: ReportBuilder, name: str, order: int) -> AxiomReport:
    report = builder.build()
    logger.debug(
        "axiom_check",
        claimed_class=report.claimed_class.value,
        structure=name,
        order=order,
        violations=len(report.violations),
    )
    return report


def _single(cls: StructureClass, steps: Sequence[Callable]) -> Callable:
    def checker(m: FiniteMagma, subset: Subset = None, cap: Optional[int] = None) -> AxiomReport:
        builder = ReportBuilder(cls, cap)
        r = _magma_restriction(m, subset, builder)
        if not r.closure:
            t = r.local[""]
            for step in steps:
                if step(builder, r, t) is False:
                    break
        return _finish(builder, m.name, r.size)

    return checker


def _group_steps(builder, r, t, suffix="", abelian=False) -> bool:
    if not _associativity(builder, r, t, suffix):
        return False
    e = _identity(builder, t, suffix)
    if e is not None and not _inverses(builder, r, t, e, suffix):
        return False
    if abelian:
        return _commutativity(builder, r, t, suffix)
    return True


def _monoid_steps(builder, r, t, suffix="") -> bool:
    if not _associativity(builder, r, t, suffix):
        return False
    _identity(builder, t, suffix)
    return not builder.truncated


check_semigroup = _single(StructureClass.SEMIGROUP, [_associativity])
check_semigroup.__doc__ = "Associativity of the operation."

check_monoid = _single(StructureClass.MONOID, [_monoid_steps])
check_monoid.__doc__ = "Associativity plus a two-sided identity."

check_group = _single(StructureClass.GROUP, [_group_steps])
check_group.__doc__ = "Associativity, a two-sided identity and an inverse for every element."

check_abelian_group = _single(
    StructureClass.ABELIAN_GROUP, [lambda b, r, t: _group_steps(b, r, t, abelian=True)]
)
check_abelian_group.__doc__ = "Group axioms plus commutativity."

check_commutative = _single(StructureClass.COMMUTATIVE, [_commutativity])
check_commutative.__doc__ = "Commutativity of the operation; nothing else is checked."


def _ring_check(cls: StructureClass, body: Callable) -> Callable:
    def checker(ring: FiniteRingTable, subset: Subset = None, cap: Optional[int] = None) -> AxiomReport:
        builder = ReportBuilder(cls, cap)
        r = _ring_restriction(ring, subset, builder)
        if not r.closure:
            body(builder, r, r.local[ADD], r.local[MUL])
        return _finish(builder, ring.name, r.size)

    return checker


def _ring_body(builder, r, A, M) -> bool:
    return (
        _group_steps(builder, r, A, ADD, abelian=True)
        and _associativity(builder, r, M, MUL)
        and _left_distributivity(builder, r, A, M)
        and _right_distributivity(builder, r, A, M)
    )


def _semiring_body(builder, r, A, M) -> bool:
    return (
        _monoid_steps(builder, r, A, ADD)
        and _commutativity(builder, r, A, ADD)
        and _associativity(builder, r, M, MUL)
        and _left_distributivity(builder, r, A, M)
        and _right_distributivity(builder, r, A, M)
    )


def _unit_body(builder, r, A, M, invertible: bool, commutative: bool) -> bool:
    """Ring-with-unit tail shared by fields and division rings."""
    if commutative and not _commutativity(builder, r, M, MUL):
        return False
    z = _identity_local(A)
    one = _identity(builder, M, MUL)
    if one is None or z is None:
        return not builder.truncated
    if one == z:
        builder.add("nontrivial", r.parent(z)[0])
        return not builder.truncated
    if invertible:
        return _inverses(builder, r, M, one, MUL, skip=z)
    return True


def _field_body(builder, r, A, M) -> bool:
    return _ring_body(builder, r, A, M) and _unit_body(builder, r, A, M, True, True)


def _division_ring_body(builder, r, A, M) -> bool:
    return _ring_body(builder, r, A, M) and _unit_body(builder, r, A, M, True, False)


def _semifield_body(builder, r, A, M) -> bool:
    if not _semiring_body(builder, r, A, M):
        return False
    if not _commutativity(builder, r, M, MUL):
        return False
    _identity(builder, M, MUL)
    z = _identity_local(A)
    if z is None:
        return not builder.truncated
    return _strictness(builder, r, A, z) and _zero_divisors(builder, r, M, z)


def _near_ring_body(builder, r, A, M) -> bool:
    return (
        _group_steps(builder, r, A, ADD)
        and _associativity(builder, r, M, MUL)
        and _right_distributivity(builder, r, A, M)
    )


def _seminear_ring_body(builder, r, A, M) -> bool:
    return (
        _associativity(builder, r, A, ADD)
        and _associativity(builder, r, M, MUL)
        and _right_distributivity(builder, r, A, M)
    )


check_ring = _ring_check(StructureClass.RING, _ring_body)
check_ring.__doc__ = "(R,+) abelian group, (R,*) semigroup, both distributive laws; no unit required."

check_semiring = _ring_check(StructureClass.SEMIRING, _semiring_body)
check_semiring.__doc__ = "(S,+) commutative monoid, (S,*) semigroup, both distributive laws."

check_semifield = _ring_check(StructureClass.SEMIFIELD, _semifield_body)
check_semifield.__doc__ = (
    "Semiring axioms, commutative multiplication with unit, strictness and no zero divisors."
)

check_field = _ring_check(StructureClass.FIELD, _field_body)
check_field.__doc__ = "Commutative ring with 1 != 0 in which every nonzero element is invertible."

check_division_ring = _ring_check(StructureClass.DIVISION_RING, _division_ring_body)
check_division_ring.__doc__ = "Ring with 1 != 0 in which every nonzero element is invertible."

check_near_ring = _ring_check(StructureClass.NEAR_RING, _near_ring_body)
check_near_ring.__doc__ = "(N,+) group, (N,*) semigroup, right distributivity (a+b)*c = a*c + b*c."

check_seminear_ring = _ring_check(StructureClass.SEMINEAR_RING, _seminear_ring_body)
check_seminear_ring.__doc__ = "(N,+) semigroup, (N,*) semigroup, right distributivity."

check_left_distributivity = _ring_check(
    StructureClass.LEFT_DISTRIBUTIVE, lambda b, r, A, M: _left_distributivity(b, r, A, M)
)
check_left_distributivity.__doc__ = "The law a*(b+c) = a*b + a*c alone."


MAGMA_CHECKERS: Dict[StructureClass, Callable] = {
    StructureClass.SEMIGROUP: check_semigroup,
    StructureClass.MONOID: check_monoid,
    StructureClass.GROUP: check_group,
    StructureClass.ABELIAN_GROUP: check_abelian_group,
    StructureClass.COMMUTATIVE: check_commutative,
}

RING_CHECKERS: Dict[StructureClass, Callable] = {
    StructureClass.RING: check_ring,
    StructureClass.SEMIRING: check_semiring,
    StructureClass.SEMIFIELD: check_semifield,
    StructureClass.FIELD: check_field,
    StructureClass.DIVISION_RING: check_division_ring,
    StructureClass.NEAR_RING: check_near_ring,
    StructureClass.SEMINEAR_RING: check_seminear_ring,
    StructureClass.LEFT_DISTRIBUTIVE: check_left_distributivity,
}


def check_class(structure: Structure, cls: StructureClass, subset: Subset = None,
                cap: Optional[int] = None) -> AxiomReport:
    """
    Run the checker for ``cls`` on a magma or a ring table.

    Single-operation classes on a ring table are checked against its
    multiplication.

    Raises:
        MalformedTable: if ``cls`` needs two operations and only one is given.
    """
    if isinstance(structure, FiniteRingTable):
        if cls in RING_CHECKERS:
            return RING_CHECKERS[cls](structure, subset, cap)
        return MAGMA_CHECKERS[cls](structure.multiplicative_magma(), subset, cap)
    if cls not in MAGMA_CHECKERS:
        raise MalformedTable(f"class {cls.value} needs an addition and a multiplication table")
    return MAGMA_CHECKERS[cls](structure, subset, cap)


def identity_element(m: FiniteMagma, subset: Subset = None) -> Optional[ElementId]:
    """Two-sided identity of ``m`` (or of the closed ``subset``), if any."""
    r = _Restriction({"": m.array}, subset)
    if r.closure:
        return None
    e = _identity_local(r.local[""])
    return None if e is None else r.parent(e)[0]


def inverse_of(m: FiniteMagma, a: ElementId, e: ElementId) -> Optional[ElementId]:
    t = m.array
    candidates = np.flatnonzero((t[a] == e) & (t[:, a] == e))
    return int(candidates[0]) if candidates.size else None


def find_zero_divisors(ring: FiniteRingTable, subset: Subset = None) -> List[Tuple[int, int]]:
    """All pairs of nonzero elements whose product is zero."""
    z = ring.zero
    if z is None:
        return []
    M = ring.mul_array
    mask = M == z
    mask[z, :] = False
    mask[:, z] = False
    if subset is not None:
        keep = np.zeros(ring.order, dtype=bool)
        keep[list(subset)] = True
        mask &= keep[:, None] & keep[None, :]
    return [(int(a), int(b)) for a, b in np.argwhere(mask)]


def find_idempotents(structure: Structure, operation: str = "mul") -> List[int]:
    """Elements with a*a = a under the chosen operation (``add`` or ``mul``)."""
    if isinstance(structure, FiniteMagma):
        t = structure.array
    else:
        t = structure.add_array if operation == "add" else structure.mul_array
    diag = np.diagonal(t)
    return [int(a) for a in np.flatnonzero(diag == np.arange(len(diag)))]


def restrict(structure: Structure, subset: Iterable[ElementId]) -> Structure:
    """
    Sub-table of a closed subset, relabelled to ``0..k-1`` in index order.

    Raises:
        AxiomFailure: if the subset is not closed under every operation.
    """
    if isinstance(structure, FiniteRingTable):
        r = _Restriction({ADD: structure.add_array, MUL: structure.mul_array}, subset)
    else:
        r = _Restriction({"": structure.array}, subset)
    if r.closure:
        name, a, b = r.closure[0]
        raise AxiomFailure(f"subset is not closed{name}: {a} op {b} leaves it")
    labels = tuple(structure.labels[e] for e in r.elements)
    if isinstance(structure, FiniteRingTable):
        return FiniteRingTable(labels=labels, add=r.local[ADD].tolist(), mul=r.local[MUL].tolist(),
                               name=structure.name)
    return FiniteMagma(labels=labels, table=r.local[""].tolist(), name=structure.name)
