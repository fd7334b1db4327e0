"""
Named finite groups, semigroups and the rings Z_n.
"""
from itertools import permutations, product
from typing import Callable, Tuple

import structlog
from sympy.combinatorics import Permutation

from app.algebra.errors import AxiomFailure, SizeGuard
from app.algebra.finite import (
    FiniteMagma,
    FiniteRingTable,
    check_group,
    check_ring,
    check_semigroup,
)
from app.algebra.finite.report import AxiomReport
from app.config import get_settings

logger = structlog.get_logger()


def verify_on_build(structure, checker: Callable[..., AxiomReport]):
    """
    Run ``checker`` on freshly built tables small enough to scan.

    Raises:
        AxiomFailure: if the construction does not satisfy its class.
    """
    if structure.order <= get_settings().verify_on_build_max_order:
        report = checker(structure, cap=1)
        if not report.ok:
            raise AxiomFailure(f"{structure.name} fails {report.claimed_class.value} axioms", report)
    return structure


def guard_order(order: int, what: str) -> None:
    limit = get_settings().max_table_order
    if order < 1:
        raise SizeGuard(f"{what} needs at least one element")
    if order > limit:
        raise SizeGuard(f"{what} has {order} elements, above the table limit {limit}")


def build_zn(n: int) -> FiniteRingTable:
    """The ring (Z_n, +, *) of residues mod n."""
    guard_order(n, f"Z_{n}")
    ring = FiniteRingTable.from_tables(
        add=[[(a + b) % n for b in range(n)] for a in range(n)],
        mul=[[(a * b) % n for b in range(n)] for a in range(n)],
        name=f"Z_{n}",
    )
    return verify_on_build(ring, check_ring)


def zn_multiplicative(n: int) -> FiniteMagma:
    """The semigroup (Z_n, *)."""
    return build_zn(n).multiplicative_magma()


def cyclic(n: int) -> FiniteMagma:
    """The cyclic group of order n, written additively as (Z_n, +)."""
    guard_order(n, f"C_{n}")
    group = FiniteMagma.from_table(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        name=f"C_{n}",
    )
    return verify_on_build(group, check_group)


def _dihedral_label(r: int, s: int) -> str:
    if r == 0 and s == 0:
        return "e"
    rotation = "" if r == 0 else ("b" if r == 1 else f"b^{r}")
    return rotation + ("a" if s else "")


def dihedral(m: int) -> FiniteMagma:
    """
    The dihedral group <a, b | a^2 = b^m = 1, bab = a> of order 2m.

    Elements are b^r a^s, listed with all rotations first; the product is
    (b^r a^s)(b^t a^u) = b^(r + (-1)^s t) a^(s+u).
    """
    guard_order(2 * m, f"D_{2 * m}")
    elements = [(r, s) for s in range(2) for r in range(m)]

    def multiply(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        r, s = x
        t, u = y
        return ((r + (-t if s else t)) % m, (s + u) % 2)

    group = FiniteMagma.from_operation(
        elements, multiply, label=lambda e: _dihedral_label(*e), name=f"D_{2 * m}"
    )
    return verify_on_build(group, check_group)


def permutation_label(images: Tuple[int, ...]) -> str:
    """One-line notation with 1-based images, e.g. ``2341``."""
    return "".join(str(i + 1) for i in images)


def symmetric_group(k: int) -> FiniteMagma:
    """
    The symmetric group S_k on one-line labelled permutations.

    The product p*q applies p first, then q.

    Raises:
        SizeGuard: for k above ``max_symmetric_degree``.
    """
    limit = get_settings().max_symmetric_degree
    if not 1 <= k <= limit:
        raise SizeGuard(f"S_{k} is outside the supported degrees 1..{limit}")
    perms = [Permutation(list(p)) for p in permutations(range(k))]
    index = {tuple(p.array_form): i for i, p in enumerate(perms)}
    table = [[index[tuple((p * q).array_form)] for q in perms] for p in perms]
    group = FiniteMagma.from_table(
        table,
        labels=[permutation_label(tuple(p.array_form)) for p in perms],
        name=f"S_{k}",
    )
    logger.debug("symmetric_group_built", degree=k, order=group.order)
    return verify_on_build(group, check_group)


def compose_left_first(f: Tuple[int, ...], g: Tuple[int, ...]) -> Tuple[int, ...]:
    """(f o g)(x) = g(f(x)): f is applied first."""
    return tuple(g[f[x]] for x in range(len(f)))


def symmetric_semigroup(n: int) -> FiniteMagma:
    """
    The semigroup S(n) of all maps {1..n} -> {1..n} under left-first composition.

    A map is labelled by its image word, so for n = 2 the swap is ``21`` and
    the constant map onto 1 is ``11``; with f applied first, ``21 o 11 = 11``.

    Raises:
        SizeGuard: for n above ``max_symmetric_semigroup_degree``.
    """
    limit = get_settings().max_symmetric_semigroup_degree
    if not 1 <= n <= limit:
        raise SizeGuard(f"S({n}) is outside the supported degrees 1..{limit}")
    maps = list(product(range(n), repeat=n))

    def index(f: Tuple[int, ...]) -> int:
        value = 0
        for image in f:
            value = value * n + image
        return value

    table = [[index(compose_left_first(f, g)) for g in maps] for f in maps]
    semigroup = FiniteMagma.from_table(
        table, labels=[permutation_label(f) for f in maps], name=f"S({n})"
    )
    return verify_on_build(semigroup, check_semigroup)
