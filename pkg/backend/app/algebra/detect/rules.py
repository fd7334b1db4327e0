"""
Axiom reports for lattice subsets of Q under the operations inherited from Q.

Associativity, commutativity and distributivity are inherited from Q and
hold on every subset, so only closure, identities, inverses and
strictness are decided, exactly by the symbolic-set rules. Violation
witnesses are the smallest sampled members that exhibit the failure.
"""
from fractions import Fraction
from typing import Callable, Iterable, Optional

from app.algebra.finite import AxiomReport, ReportBuilder, StructureClass
from app.algebra.ideals import sample_members
from app.algebra.symbolic import LatticeSet, is_closed_add, is_closed_mul, member, negate, subset_of

ADD = "(+)"
MUL = "(*)"


def _pair(s: LatticeSet, bad: Callable[[Fraction, Fraction], bool]):
    samples = sample_members(s)
    for x in samples:
        for y in samples:
            if bad(x, y):
                return x, y
    return None


def closure_add(builder: ReportBuilder, s: LatticeSet) -> bool:
    if is_closed_add(s):
        return True
    witness = _pair(s, lambda x, y: not member(s, x + y))
    builder.add("closure" + ADD, *(witness or ()))
    return False


def closure_mul(builder: ReportBuilder, s: LatticeSet, suffix: str = MUL) -> bool:
    if is_closed_mul(s):
        return True
    witness = _pair(s, lambda x, y: not member(s, x * y))
    builder.add("closure" + suffix, *(witness or ()))
    return False


def additive_identity(builder: ReportBuilder, s: LatticeSet) -> bool:
    if member(s, 0):
        return True
    builder.add("identity" + ADD, Fraction(0))
    return False


def additive_inverses(builder: ReportBuilder, s: LatticeSet) -> bool:
    if subset_of(negate(s), s):
        return True
    for x in sample_members(s):
        if not member(s, -x):
            builder.add("inverse" + ADD, x)
            break
    return False


def unit(builder: ReportBuilder, s: LatticeSet, suffix: str = MUL) -> bool:
    if member(s, 1):
        return True
    builder.add("identity" + suffix, Fraction(1))
    return False


def multiplicative_inverses(builder: ReportBuilder, s: LatticeSet, suffix: str = MUL,
                            skip_zero: bool = True) -> bool:
    """1/x in S for the sampled x; dense sets are decided by their sign alone."""
    ok = True
    for x in sample_members(s):
        if x == 0:
            if not skip_zero:
                builder.add("inverse" + suffix, x)
                ok = False
            continue
        if not member(s, 1 / x):
            builder.add("inverse" + suffix, x)
            return False
    return ok


def strictness(builder: ReportBuilder, s: LatticeSet) -> bool:
    """a + b = 0 only for a = b = 0: S holds no pair x, -x with x != 0."""
    if len(s.units) < 2:
        return True
    x = next(v for v in sample_members(s) if v > 0)
    builder.add("strictness", x, -x)
    return False


def _report(cls: StructureClass, steps: Iterable[Callable[[ReportBuilder], bool]]) -> AxiomReport:
    builder = ReportBuilder(cls)
    for step in steps:
        if step(builder) is False and builder.full:
            break
    return builder.build()


def additive_semigroup_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.SEMIGROUP, [lambda b: closure_add(b, s)])


def additive_group_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.GROUP, [
        lambda b: closure_add(b, s),
        lambda b: additive_identity(b, s),
        lambda b: additive_inverses(b, s),
    ])


def multiplicative_semigroup_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.SEMIGROUP, [lambda b: closure_mul(b, s, "")])


def multiplicative_group_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.GROUP, [
        lambda b: closure_mul(b, s, ""),
        lambda b: unit(b, s, ""),
        lambda b: multiplicative_inverses(b, s, "", skip_zero=False),
    ])


def ring_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.RING, [
        lambda b: closure_add(b, s),
        lambda b: additive_identity(b, s),
        lambda b: additive_inverses(b, s),
        lambda b: closure_mul(b, s),
    ])


def semiring_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.SEMIRING, [
        lambda b: closure_add(b, s),
        lambda b: additive_identity(b, s),
        lambda b: closure_mul(b, s),
    ])


def semifield_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.SEMIFIELD, [
        lambda b: closure_add(b, s),
        lambda b: additive_identity(b, s),
        lambda b: closure_mul(b, s),
        lambda b: unit(b, s),
        lambda b: strictness(b, s),
    ])


def field_report(s: LatticeSet, invertible: Optional[Callable[[Fraction], bool]] = None,
                 cls: StructureClass = StructureClass.FIELD) -> AxiomReport:
    """
    Ring axioms plus 1 and inverses of nonzero elements.

    ``invertible`` overrides the inverse test, for embeddings of Q-lattices in
    larger rings such as the quaternions.
    """
    def inverses(b: ReportBuilder) -> bool:
        if invertible is None:
            return multiplicative_inverses(b, s)
        for x in sample_members(s):
            if x != 0 and not invertible(x):
                b.add("inverse" + MUL, x)
                return False
        return True

    return _report(cls, [
        lambda b: closure_add(b, s),
        lambda b: additive_identity(b, s),
        lambda b: additive_inverses(b, s),
        lambda b: closure_mul(b, s),
        lambda b: unit(b, s),
        inverses,
    ])


def seminear_ring_report(s: LatticeSet) -> AxiomReport:
    """Under a*b = a the product never leaves S, so only (S,+) matters."""
    return _report(StructureClass.SEMINEAR_RING, [lambda b: closure_add(b, s)])


def near_ring_report(s: LatticeSet) -> AxiomReport:
    return _report(StructureClass.NEAR_RING, [
        lambda b: closure_add(b, s),
        lambda b: additive_identity(b, s),
        lambda b: additive_inverses(b, s),
    ])