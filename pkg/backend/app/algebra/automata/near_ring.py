"""
Near rings (Z_n, +, *) with a*b = a, and N-group verification.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import structlog

from app.algebra.constructors.groups import guard_order, verify_on_build
from app.algebra.errors import MalformedTable, TableShape
from app.algebra.finite import (
    AxiomReport,
    FiniteMagma,
    FiniteRingTable,
    ReportBuilder,
    StructureClass,
    check_abelian_group,
    check_left_distributivity,
    check_near_ring,
)

logger = structlog.get_logger()


@dataclass(frozen=True)
class NearRingZn:
    """(Z_n, + mod n, a*b = a): right distributive, left distributive only for n = 1."""

    n: int
    table: FiniteRingTable

    @property
    def name(self) -> str:
        return self.table.name

    def left_distributivity(self, cap: Optional[int] = None) -> AxiomReport:
        return check_left_distributivity(self.table, cap=cap)


def build_near_ring_zn(n: int) -> NearRingZn:
    """
    Build and verify (Z_n, +, a*b = a).

    Raises:
        SizeGuard: outside 1 <= n <= max_table_order.
    """
    guard_order(n, f"(Z_{n},+,a*b=a)")
    table = FiniteRingTable.from_tables(
        add=[[(a + b) % n for b in range(n)] for a in range(n)],
        mul=[[a for _ in range(n)] for a in range(n)],
        name=f"(Z_{n},+,a*b=a)",
    )
    verify_on_build(table, check_near_ring)
    logger.debug("near_ring_built", n=n)
    return NearRingZn(n, table)


def _action_array(action: Sequence[Sequence[int]], rows: int, cols: int) -> np.ndarray:
    if len(action) != rows:
        raise TableShape(f"action has {len(action)} rows, expected {rows}")
    for i, row in enumerate(action):
        if len(row) != cols:
            raise TableShape(f"action row {i} has {len(row)} entries, expected {cols}")
    arr = np.array(action, dtype=np.int64).reshape(rows, cols)
    if arr.size and (arr.min() < 0 or arr.max() >= cols):
        raise MalformedTable("action values must be element ids of P")
    return arr


def check_n_group(near_ring: FiniteRingTable, group: FiniteMagma,
                  action: Sequence[Sequence[int]], cap: Optional[int] = None) -> AxiomReport:
    """
    Check that ``action[n][p]`` makes the abelian group P an N-group:
    (n + m)p = np + mp and (nm)p = n(mp) for all n, m in N and p in P.

    Witnesses are (n, m, p) as element ids.

    Raises:
        TableShape: if the action is not |N| x |P|.
        MalformedTable: if an action value is not an element of P.
    """
    builder = ReportBuilder(StructureClass.N_GROUP, cap=cap)
    builder.merge(check_abelian_group(group, cap=cap), prefix="P:")
    mu = _action_array(action, near_ring.order, group.order)
    A, M, G = near_ring.add_array, near_ring.mul_array, group.array
    ids = np.arange(near_ring.order)

    additive = mu[A] != G[mu[:, None, :], mu[None, :, :]]
    builder.extend("additive_action", (tuple(int(v) for v in w) for w in np.argwhere(additive)))
    multiplicative = mu[M] != mu[ids[:, None, None], mu[None, :, :]]
    builder.extend("multiplicative_action", (tuple(int(v) for v in w) for w in np.argwhere(multiplicative)))

    report = builder.build()
    logger.debug("n_group_checked", near_ring=near_ring.name, group=group.name, ok=report.ok)
    return report
