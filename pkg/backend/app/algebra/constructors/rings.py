"""
Matrix rings over finite coefficient rings and table-driven lattice semirings.
"""
from itertools import product
from typing import Optional, Sequence, Tuple

from app.algebra.errors import AxiomFailure, SizeGuard
from app.algebra.finite import FiniteRingTable, check_ring, check_semiring
from app.algebra.constructors.groups import verify_on_build
from app.config import get_settings

Matrix = Tuple[int, ...]


def matrix_ring(coeff: FiniteRingTable, k: int) -> FiniteRingTable:
    """
    All k x k matrices over ``coeff`` with entrywise addition and the usual
    row-by-column product. Entries are stored row-major.

    Raises:
        SizeGuard: for k above ``max_matrix_size`` or a table above ``max_table_order``.
        AxiomFailure: if the coefficient addition has no zero.
    """
    settings = get_settings()
    if not 1 <= k <= settings.max_matrix_size:
        raise SizeGuard(f"{k}x{k} matrices are outside the supported sizes 1..{settings.max_matrix_size}")
    order = coeff.order ** (k * k)
    if order > settings.max_table_order:
        raise SizeGuard(f"M_{k}({coeff.name}) has {order} elements, above {settings.max_table_order}")
    zero = coeff.zero
    if zero is None:
        raise AxiomFailure(f"{coeff.name} has no additive identity")

    def add(a: Matrix, b: Matrix) -> Matrix:
        return tuple(coeff.plus(x, y) for x, y in zip(a, b))

    def mul(a: Matrix, b: Matrix) -> Matrix:
        out = []
        for i in range(k):
            for j in range(k):
                acc = zero
                for m in range(k):
                    acc = coeff.plus(acc, coeff.times(a[i * k + m], b[m * k + j]))
                out.append(acc)
        return tuple(out)

    def label(a: Matrix) -> str:
        rows = [",".join(coeff.labels[a[i * k + j]] for j in range(k)) for i in range(k)]
        return "[" + ";".join(rows) + "]"

    elements = list(product(range(coeff.order), repeat=k * k))
    ring = FiniteRingTable.from_operations(
        elements, add, mul, label=label, name=f"M_{k}({coeff.name})"
    )
    return verify_on_build(ring, check_ring)


def lattice_semiring(
    join: Sequence[Sequence[int]],
    meet: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    name: str = "L",
) -> FiniteRingTable:
    """
    A lattice read as a semiring with join as addition and meet as multiplication.

    Raises:
        AxiomFailure: if the tables do not satisfy the semiring axioms.
    """
    semiring = FiniteRingTable.from_tables(add=join, mul=meet, labels=labels, name=name)
    report = check_semiring(semiring)
    if not report.ok:
        raise AxiomFailure(f"{name} is not a semiring under join and meet", report)
    return semiring


def chain_lattice(length: int, name: Optional[str] = None) -> FiniteRingTable:
    """The chain 0 < 1 < ... < length-1 as a lattice semiring (join = max, meet = min)."""
    r = range(length)
    return lattice_semiring(
        join=[[max(a, b) for b in r] for a in r],
        meet=[[min(a, b) for b in r] for a in r],
        name=name or f"C{length}",
    )
