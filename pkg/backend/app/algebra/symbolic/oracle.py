"""
Bounded explicit enumeration of symbolic sets.

Used to cross-check the symbolic rules and to print listings next to
results. Truncation keeps the members of magnitude at most ``bound``.
"""
from fractions import Fraction
from math import floor
from typing import Iterable, List, Optional, Set

from app.algebra.errors import Unsupported
from app.algebra.symbolic.lattice import LatticeSet, RatLike, SetKind, to_rat
from app.config import get_settings


def enumerate_truncated(s: LatticeSet, bound: Optional[int] = None) -> List[Fraction]:
    """
    Sorted members of ``s`` with |x| <= bound.

    Raises:
        Unsupported: for dense sets, which have infinitely many members in any window.
    """
    bound = get_settings().oracle_bound if bound is None else bound
    if s.kind is SetKind.EMPTY:
        return []
    if s.kind is SetKind.ZERO:
        return [Fraction(0)]
    if s.kind is SetKind.DENSE:
        raise Unsupported(f"{s} cannot be enumerated")
    top = floor(Fraction(bound) / s.scale)
    members = []
    for u in sorted(s.units):
        members.extend(u * k * s.scale for k in range(1, top + 1))
    if s.with_zero:
        members.append(Fraction(0))
    return sorted(members)


def pairwise_products(
    a: Iterable[Fraction], b: Iterable[Fraction], bound: Optional[int] = None
) -> Set[Fraction]:
    """
    {x*y} over explicit member lists, truncated to |x*y| <= bound.

    Complete for truncations of integer-scale sets: a product of magnitude
    at most ``bound`` then has both factors of magnitude at most ``bound``.
    """
    bound = get_settings().oracle_bound if bound is None else bound
    b = list(b)
    return {x * y for x in a for y in b if abs(x * y) <= bound}


def truncated_double_coset(
    h: LatticeSet, x: RatLike, k: LatticeSet, bound: Optional[int] = None
) -> Set[Fraction]:
    """{h*x*k} from explicit listings of H and K."""
    bound = get_settings().oracle_bound if bound is None else bound
    x = to_rat(x)
    hs = enumerate_truncated(h, bound)
    ks = enumerate_truncated(k, bound)
    return {p * x for p in pairwise_products(hs, ks, bound) if abs(p * x) <= bound}


def listing(s: LatticeSet, count: int = 6) -> str:
    """First few positive (or negative) members, for annotations."""
    members = [m for m in enumerate_truncated(s, get_settings().oracle_bound) if m != 0]
    members.sort(key=abs)
    shown = ", ".join(str(m) for m in members[:count])
    return "{" + shown + ", ...}"
