"""
Closed-subset enumeration and normality.

Closed subsets are built as closures of generator sets, growing one
generator at a time from the single-generator closures, so the cost tracks
the number of closed subsets rather than 2^n.
"""
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import structlog

from app.algebra.errors import AxiomFailure, CapacityExceeded, NotASubgroup
from app.algebra.finite.axioms import check_group, check_semigroup, identity_element, inverse_of
from app.algebra.finite.tables import ElementId, FiniteMagma, FiniteRingTable, Table
from app.config import get_settings
from app.utils.metrics import closed_subsets_enumerated_total

logger = structlog.get_logger()

Structure = Union[FiniteMagma, FiniteRingTable]


def _tables_of(structure: Structure) -> List[Table]:
    if isinstance(structure, FiniteRingTable):
        return [structure.add, structure.mul]
    return [structure.table]


class ClosureEngine:
    """Incremental closure under one or more operation tables."""

    def __init__(self, tables: Sequence[Table]):
        self.tables = list(tables)
        self.order = len(self.tables[0]) if self.tables else 0
        self._singles: Dict[ElementId, FrozenSet[ElementId]] = {}

    @classmethod
    def for_structure(cls, structure: Structure) -> "ClosureEngine":
        return cls(_tables_of(structure))

    def close(self, base: Iterable[ElementId], generators: Iterable[ElementId]) -> FrozenSet[ElementId]:
        """Closure of ``base`` plus ``generators``; ``base`` must already be closed."""
        members = set(base)
        queue = [g for g in generators if g not in members]
        while queue:
            x = queue.pop()
            if x in members:
                continue
            members.add(x)
            current = list(members)
            for t in self.tables:
                row = t[x]
                for y in current:
                    left, right = row[y], t[y][x]
                    if left not in members:
                        queue.append(left)
                    if right not in members:
                        queue.append(right)
        return frozenset(members)

    def single(self, x: ElementId) -> FrozenSet[ElementId]:
        if x not in self._singles:
            self._singles[x] = self.close((), (x,))
        return self._singles[x]

    def extend(self, closed: FrozenSet[ElementId], x: ElementId) -> FrozenSet[ElementId]:
        return self.close(closed, self.single(x) - closed)


def closure_of(structure: Structure, generators: Iterable[ElementId]) -> Tuple[ElementId, ...]:
    """Smallest subset containing ``generators`` and closed under every operation."""
    engine = ClosureEngine.for_structure(structure)
    return tuple(sorted(engine.close((), generators)))


def _require_associative(structure: Structure) -> None:
    if isinstance(structure, FiniteRingTable):
        magmas = [structure.additive_magma(), structure.multiplicative_magma()]
    else:
        magmas = [structure]
    for magma in magmas:
        report = check_semigroup(magma, cap=1)
        if not report.ok:
            raise AxiomFailure(f"{magma.name or 'operation'} is not associative", report)


def enumerate_closed_subsets(
    structure: Structure,
    max_count: Optional[int] = None,
    check: bool = True,
) -> List[Tuple[ElementId, ...]]:
    """
    Every nonempty subset closed under all operations of ``structure``.

    Args:
        structure: a magma, or a ring-shaped table (closure under both tables)
        max_count: stop with CapacityExceeded past this many subsets;
            defaults to the ``closed_subset_limit`` setting
        check: verify associativity of each operation first

    Returns:
        Sorted tuples of element ids, ordered by size then lexicographically.

    Raises:
        AxiomFailure: if an operation is not associative.
        CapacityExceeded: if more than ``max_count`` subsets exist.
    """
    if check:
        _require_associative(structure)
    if max_count is None:
        max_count = get_settings().closed_subset_limit

    engine = ClosureEngine.for_structure(structure)
    found = set()
    frontier: List[FrozenSet[ElementId]] = []

    def record(subset: FrozenSet[ElementId]) -> None:
        if subset in found:
            return
        found.add(subset)
        frontier.append(subset)
        if max_count is not None and len(found) > max_count:
            raise CapacityExceeded(
                f"more than {max_count} closed subsets in a structure of order {engine.order}"
            )

    for x in range(engine.order):
        record(engine.single(x))
    while frontier:
        level = list(frontier)
        frontier.clear()
        for closed in level:
            for x in range(engine.order):
                if x not in closed:
                    record(engine.extend(closed, x))

    result = sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s))
    closed_subsets_enumerated_total.inc(len(result))
    logger.debug("closed_subsets_enumerated", order=engine.order, count=len(result))
    return result


def is_normal(group: FiniteMagma, subgroup: Iterable[ElementId]) -> bool:
    """
    True iff g h g^-1 lies in the subgroup for every g in the group.

    Raises:
        AxiomFailure: if ``group`` is not a group.
        NotASubgroup: if ``subgroup`` is not a subgroup of it.
    """
    members = sorted(set(subgroup))
    parent = check_group(group)
    if not parent.ok:
        raise AxiomFailure(f"{group.name or 'structure'} is not a group", parent)
    if not members or not check_group(group, subset=members).ok:
        raise NotASubgroup(f"{members} is not a subgroup")

    t = group.array
    e = identity_element(group)
    h = np.array(members, dtype=np.int64)
    target = set(members)
    for g in range(group.order):
        g_inv = inverse_of(group, g, e)
        conjugates = t[t[g, h], g_inv]
        if set(int(c) for c in conjugates) != target:
            return False
    return True
