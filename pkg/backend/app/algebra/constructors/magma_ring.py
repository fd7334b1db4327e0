"""
Group rings and semigroup rings RG over Z or Z_n.

Elements are finitely supported sums kept as sorted (basis id, coefficient)
pairs with no zero coefficients; multiplication is the convolution
(sum a_g g)(sum b_h h) = sum a_g b_h (gh) over the base table.
"""
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

import structlog

from app.algebra.errors import AxiomFailure, SizeGuard
from app.algebra.finite import FiniteMagma, FiniteRingTable, check_group, check_semigroup, identity_element
from app.config import get_settings

logger = structlog.get_logger()


@dataclass(frozen=True)
class CoefficientRing:
    """Z when ``modulus`` is None, otherwise Z_modulus."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 1:
            raise ValueError(f"coefficient modulus must be positive, got {self.modulus}")

    @property
    def finite(self) -> bool:
        return self.modulus is not None

    @property
    def name(self) -> str:
        return "Z" if self.modulus is None else f"Z_{self.modulus}"

    def reduce(self, c: int) -> int:
        return c if self.modulus is None else c % self.modulus


@dataclass(frozen=True)
class SupportedSum:
    terms: Tuple[Tuple[int, int], ...] = ()

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(g for g, _ in self.terms)

    def coefficient(self, g: int) -> int:
        for basis, c in self.terms:
            if basis == g:
                return c
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)


class MagmaRing:
    """The magma ring coeff[base]; ``kind`` is ``group`` or ``semigroup``."""

    def __init__(self, coeff: CoefficientRing, base: FiniteMagma, kind: str = "semigroup"):
        self.coeff = coeff
        self.base = base
        self.kind = kind
        self._identity = identity_element(base)

    @property
    def name(self) -> str:
        return f"{self.coeff.name}{self.base.name}"

    def element(self, coefficients: Union[Mapping[int, int], Iterable[Tuple[int, int]]]) -> SupportedSum:
        """Normalise a basis-id -> coefficient mapping into a SupportedSum."""
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: Dict[int, int] = {}
        for g, c in items:
            if not 0 <= g < self.base.order:
                raise ValueError(f"basis id {g} outside 0..{self.base.order - 1}")
            acc[g] = acc.get(g, 0) + c
        return self._normalise(acc)

    def _normalise(self, acc: Dict[int, int]) -> SupportedSum:
        terms = []
        for g in sorted(acc):
            c = self.coeff.reduce(acc[g])
            if c:
                terms.append((g, c))
        return SupportedSum(tuple(terms))

    def basis(self, g: int, c: int = 1) -> SupportedSum:
        return self.element({g: c})

    @property
    def zero(self) -> SupportedSum:
        return SupportedSum()

    @property
    def identity(self) -> Optional[SupportedSum]:
        """1*e when the base has an identity e."""
        return None if self._identity is None else self.basis(self._identity)

    def add(self, x: SupportedSum, y: SupportedSum) -> SupportedSum:
        acc = x.as_dict()
        for g, c in y.terms:
            acc[g] = acc.get(g, 0) + c
        return self._normalise(acc)

    def neg(self, x: SupportedSum) -> SupportedSum:
        return self._normalise({g: -c for g, c in x.terms})

    def sub(self, x: SupportedSum, y: SupportedSum) -> SupportedSum:
        return self.add(x, self.neg(y))

    def scale(self, c: int, x: SupportedSum) -> SupportedSum:
        return self._normalise({g: c * a for g, a in x.terms})

    def mul(self, x: SupportedSum, y: SupportedSum) -> SupportedSum:
        table = self.base.table
        acc: Dict[int, int] = {}
        for g, a in x.terms:
            row = table[g]
            for h, b in y.terms:
                gh = row[h]
                acc[gh] = acc.get(gh, 0) + a * b
        return self._normalise(acc)

    @property
    def order(self) -> Optional[int]:
        if not self.coeff.finite:
            return None
        return self.coeff.modulus ** self.base.order

    def elements(self) -> Iterator[SupportedSum]:
        """
        Every element, by coefficient vectors in lexicographic order.

        Raises:
            SizeGuard: for infinite coefficients or more than ``enumeration_limit`` elements.
        """
        limit = get_settings().enumeration_limit
        if self.order is None:
            raise SizeGuard(f"{self.name} has infinitely many elements")
        if self.order > limit:
            raise SizeGuard(f"{self.name} has {self.order} elements, above {limit}")
        for vector in product(range(self.coeff.modulus), repeat=self.base.order):
            yield self._normalise(dict(enumerate(vector)))

    def format(self, x: SupportedSum) -> str:
        if not x.terms:
            return "0"
        parts = []
        for g, c in x.terms:
            label = self.base.labels[g]
            parts.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(parts)

    def to_ring_table(self) -> FiniteRingTable:
        """
        Addition and multiplication tables over :meth:`elements`.

        Raises:
            SizeGuard: for infinite coefficients or more than ``max_table_order`` elements.
        """
        limit = get_settings().max_table_order
        if self.order is not None and self.order > limit:
            raise SizeGuard(f"{self.name} has {self.order} elements, above {limit}")
        elements = list(self.elements())
        return FiniteRingTable.from_operations(
            elements, self.add, self.mul, label=self.format, name=self.name
        )


def group_ring(coeff: CoefficientRing, base: FiniteMagma) -> MagmaRing:
    """
    Raises:
        AxiomFailure: if ``base`` is not a group.
    """
    report = check_group(base, cap=1)
    if not report.ok:
        raise AxiomFailure(f"{base.name} is not a group", report)
    ring = MagmaRing(coeff, base, kind="group")
    logger.debug("magma_ring_built", ring=ring.name, kind="group")
    return ring


def semigroup_ring(coeff: CoefficientRing, base: FiniteMagma) -> MagmaRing:
    """
    Raises:
        AxiomFailure: if ``base`` is not associative.
    """
    report = check_semigroup(base, cap=1)
    if not report.ok:
        raise AxiomFailure(f"{base.name} is not a semigroup", report)
    ring = MagmaRing(coeff, base, kind="semigroup")
    logger.debug("magma_ring_built", ring=ring.name, kind="semigroup")
    return ring
