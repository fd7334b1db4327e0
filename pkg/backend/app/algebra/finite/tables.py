"""
Cayley-table representations of finite magmas and two-operation structures.

Elements are dense integer indices ``0..n-1``; labels are only used when
printing. Tables are stored as tuples so that structures stay immutable and
hashable, and a cached numpy view is kept for the vectorised axiom scans.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from app.algebra.errors import MalformedTable

ElementId = int
Table = Tuple[Tuple[ElementId, ...], ...]


def _freeze_table(rows: Sequence[Sequence[int]], n: int, name: str) -> Table:
    if len(rows) != n:
        raise MalformedTable(f"{name} table has {len(rows)} rows, expected {n}")
    frozen = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"{name} table row {i} has {len(row)} entries, expected {n}")
        for j, entry in enumerate(row):
            if not isinstance(entry, (int, np.integer)) or not 0 <= int(entry) < n:
                raise MalformedTable(
                    f"{name} table entry ({i}, {j}) = {entry!r} is not an element index"
                )
        frozen.append(tuple(int(e) for e in row))
    return tuple(frozen)


def _default_labels(n: int) -> Tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _check_labels(labels: Sequence[str], n: int) -> Tuple[str, ...]:
    labels = tuple(str(label) for label in labels)
    if len(labels) != n:
        raise MalformedTable(f"{len(labels)} labels given for {n} elements")
    if len(set(labels)) != n:
        raise MalformedTable("element labels must be distinct")
    return labels


@dataclass(frozen=True)
class FiniteMagma:
    """A finite set with one binary operation given by its Cayley table."""

    labels: Tuple[str, ...]
    table: Table
    name: str = ""

    def __post_init__(self):
        n = len(self.table)
        object.__setattr__(self, "table", _freeze_table(self.table, n, "operation"))
        object.__setattr__(self, "labels", _check_labels(self.labels, n))

    @classmethod
    def from_table(
        cls,
        table: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "FiniteMagma":
        return cls(
            labels=tuple(labels) if labels is not None else _default_labels(len(table)),
            table=tuple(tuple(row) for row in table),
            name=name,
        )

    @classmethod
    def from_operation(
        cls,
        elements: Sequence[Hashable],
        operation: Callable[[Hashable, Hashable], Hashable],
        label: Callable[[Hashable], str] = str,
        name: str = "",
    ) -> "FiniteMagma":
        """
        Tabulate ``operation`` over ``elements``.

        Raises:
            MalformedTable: if the operation leaves the element list.
        """
        index = {e: i for i, e in enumerate(elements)}
        rows = []
        for a in elements:
            row = []
            for b in elements:
                c = operation(a, b)
                if c not in index:
                    raise MalformedTable(f"{a!r} * {b!r} = {c!r} leaves the element set")
                row.append(index[c])
            rows.append(tuple(row))
        return cls(labels=tuple(label(e) for e in elements), table=tuple(rows), name=name)

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, a: ElementId, b: ElementId) -> ElementId:
        return self.table[a][b]

    def index_of(self, label: str) -> ElementId:
        return self.labels.index(label)

    def indices_of(self, labels: Sequence[str]) -> Tuple[ElementId, ...]:
        return tuple(self.index_of(label) for label in labels)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class FiniteRingTable:
    """
    A finite set with an addition and a multiplication table.

    The same shape houses rings, semirings, semifields, near rings and
    lattice semirings; which axioms hold is decided by the checkers.
    """

    labels: Tuple[str, ...]
    add: Table
    mul: Table
    name: str = ""

    def __post_init__(self):
        n = len(self.add)
        object.__setattr__(self, "add", _freeze_table(self.add, n, "addition"))
        object.__setattr__(self, "mul", _freeze_table(self.mul, n, "multiplication"))
        object.__setattr__(self, "labels", _check_labels(self.labels, n))

    @classmethod
    def from_tables(
        cls,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "FiniteRingTable":
        return cls(
            labels=tuple(labels) if labels is not None else _default_labels(len(add)),
            add=tuple(tuple(row) for row in add),
            mul=tuple(tuple(row) for row in mul),
            name=name,
        )

    @classmethod
    def from_operations(
        cls,
        elements: Sequence[Hashable],
        add: Callable[[Hashable, Hashable], Hashable],
        mul: Callable[[Hashable, Hashable], Hashable],
        label: Callable[[Hashable], str] = str,
        name: str = "",
    ) -> "FiniteRingTable":
        additive = FiniteMagma.from_operation(elements, add, label)
        multiplicative = FiniteMagma.from_operation(elements, mul, label)
        return cls(
            labels=additive.labels,
            add=additive.table,
            mul=multiplicative.table,
            name=name,
        )

    @property
    def order(self) -> int:
        return len(self.add)

    def plus(self, a: ElementId, b: ElementId) -> ElementId:
        return self.add[a][b]

    def times(self, a: ElementId, b: ElementId) -> ElementId:
        return self.mul[a][b]

    def index_of(self, label: str) -> ElementId:
        return self.labels.index(label)

    def indices_of(self, labels: Sequence[str]) -> Tuple[ElementId, ...]:
        return tuple(self.index_of(label) for label in labels)

    def additive_magma(self) -> FiniteMagma:
        return FiniteMagma(labels=self.labels, table=self.add, name=f"({self.name}, +)")

    def multiplicative_magma(self) -> FiniteMagma:
        return FiniteMagma(labels=self.labels, table=self.mul, name=f"({self.name}, *)")

    @cached_property
    def add_array(self) -> np.ndarray:
        arr = np.array(self.add, dtype=np.int64).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr

    @cached_property
    def mul_array(self) -> np.ndarray:
        arr = np.array(self.mul, dtype=np.int64).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr

    @cached_property
    def zero(self) -> Optional[ElementId]:
        """Index of the additive identity, if one exists."""
        n = self.order
        ids = [
            e for e in range(n)
            if all(self.add[e][x] == x and self.add[x][e] == x for x in range(n))
        ]
        return ids[0] if ids else None


def relabel(labels: Sequence[str], elements: Sequence[ElementId]) -> List[str]:
    """Labels of ``elements`` in the given order."""
    return [labels[e] for e in elements]
