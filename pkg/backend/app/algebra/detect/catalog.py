"""
Witness catalog for the infinite structures.

Each entry rebuilds its certificate from scratch: the witness set is fixed,
and both axiom reports are recomputed by the symbolic-set rules every time.
A missing entry means the catalog is silent, never that no witness exists.
"""
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import structlog
from sympy import Matrix

from app.algebra.constructors import CoefficientRing, Quaternion, group_ring, integral_inverse, symmetric_group
from app.algebra.detect.certificate import Certificate, Mode
from app.algebra.detect.properties import Property
from app.algebra.detect.rules import (
    additive_group_report,
    additive_semigroup_report,
    field_report,
    multiplicative_group_report,
    multiplicative_semigroup_report,
    near_ring_report,
    ring_report,
    semifield_report,
    seminear_ring_report,
    semiring_report,
)
from app.algebra.finite import AxiomReport, FiniteMagma, ReportBuilder, StructureClass, check_group
from app.algebra.ideals import s_special_definite_ideal, sample_members
from app.algebra.symbolic import (
    Q,
    Q_NONNEG,
    Z,
    Z_NONNEG,
    Z_NONZERO,
    Z_POS,
    LatticeSet,
    Sign,
    format_set,
    lattice,
)

logger = structlog.get_logger()

SC = StructureClass

# Largest n for which nZ is checked in the "every subring" entries of Z.
SUBRING_CHECK_LIMIT = 20


class SymbolicStructure(str, Enum):
    Z_ADD = "Z_add"
    Z_MUL = "Z_mul"
    Q_NONZERO_MUL = "Q_nonzero_mul"
    Z_RING = "Z_ring"
    Q_FIELD = "Q_field"
    H_Q = "H_Q"
    Z_NEAR_RING = "Z_near_ring"
    Q_NEAR_RING = "Q_near_ring"
    QS3 = "QS3"
    GL2_Q = "GL2_Q"

    @property
    def classes(self) -> FrozenSet[StructureClass]:
        return _CLASSES[self]

    @property
    def display(self) -> str:
        return _DISPLAY[self]


_GROUP_LIKE = frozenset({SC.GROUP, SC.MONOID, SC.SEMIGROUP})

_CLASSES: Dict[SymbolicStructure, FrozenSet[StructureClass]] = {
    SymbolicStructure.Z_ADD: _GROUP_LIKE | {SC.ABELIAN_GROUP},
    SymbolicStructure.Z_MUL: frozenset({SC.MONOID, SC.SEMIGROUP}),
    SymbolicStructure.Q_NONZERO_MUL: _GROUP_LIKE | {SC.ABELIAN_GROUP},
    SymbolicStructure.Z_RING: frozenset({SC.RING, SC.SEMIRING}),
    SymbolicStructure.Q_FIELD: frozenset({SC.FIELD, SC.DIVISION_RING, SC.RING, SC.SEMIRING}),
    SymbolicStructure.H_Q: frozenset({SC.DIVISION_RING, SC.RING, SC.SEMIRING}),
    SymbolicStructure.Z_NEAR_RING: frozenset({SC.NEAR_RING, SC.SEMINEAR_RING}),
    SymbolicStructure.Q_NEAR_RING: frozenset({SC.NEAR_RING, SC.SEMINEAR_RING}),
    SymbolicStructure.QS3: frozenset({SC.RING}),
    SymbolicStructure.GL2_Q: _GROUP_LIKE,
}

_DISPLAY: Dict[SymbolicStructure, str] = {
    SymbolicStructure.Z_ADD: "(Z,+)",
    SymbolicStructure.Z_MUL: "(Z,*)",
    SymbolicStructure.Q_NONZERO_MUL: "(Q\\{0},*)",
    SymbolicStructure.Z_RING: "(Z,+,*)",
    SymbolicStructure.Q_FIELD: "(Q,+,*)",
    SymbolicStructure.H_Q: "H(Q)",
    SymbolicStructure.Z_NEAR_RING: "(Z,+,a*b=a)",
    SymbolicStructure.Q_NEAR_RING: "(Q,+,a*b=a)",
    SymbolicStructure.QS3: "QS_3",
    SymbolicStructure.GL2_Q: "GL_2(Q)",
}


def _certificate(structure: SymbolicStructure, prop: Property, witness: str, weak: AxiomReport,
                 strong: Optional[AxiomReport], notes: Sequence[str] = (),
                 parts: Sequence[Certificate] = ()) -> Certificate:
    return Certificate(
        property=prop,
        structure=structure.display,
        mode=Mode.CATALOG,
        witness=witness,
        witness_labels=(witness,),
        weak_axioms=weak,
        strong_failure=strong,
        parts=tuple(parts),
        notes=tuple(notes),
        source=structure,
    )


def _lattice_certificate(structure: SymbolicStructure, prop: Property, witness: LatticeSet,
                         weak: Callable[[LatticeSet], AxiomReport],
                         strong: Optional[Callable[[LatticeSet], AxiomReport]],
                         notes: Sequence[str] = ()) -> Certificate:
    return _certificate(structure, prop, format_set(witness), weak(witness),
                        strong(witness) if strong else None, notes)


def _with_embedding(report: AxiomReport, s: LatticeSet,
                    agrees: Callable[[Fraction, Fraction], bool], count: int = 6) -> AxiomReport:
    """Add "embedding" violations where the host product disagrees with Q's."""
    builder = ReportBuilder(report.claimed_class)
    builder.merge(report)
    integers = [x for x in sample_members(s) if x.denominator == 1][:count]
    for x in integers:
        for y in integers:
            if not agrees(x, y):
                builder.add("embedding", x, y)
    return builder.build()


# (Z,*) and the groups

def _z_mul_s_semigroup() -> Certificate:
    units = FiniteMagma.from_operation([1, -1], lambda a, b: a * b, name="{-1,1}")
    return _certificate(
        SymbolicStructure.Z_MUL, Property.S_SEMIGROUP, "{1,-1}",
        check_group(units), multiplicative_group_report(Z),
    )


def _z_add(prop: Property) -> Callable[[], Certificate]:
    notes = ("commutativity inherited from (Q,+)",) if prop is Property.COMMUTATIVE_SSDG else ()
    return lambda: _lattice_certificate(
        SymbolicStructure.Z_ADD, prop, Z_POS, additive_semigroup_report, additive_group_report, notes
    )


def _q_nonzero(prop: Property, witness: LatticeSet) -> Callable[[], Certificate]:
    notes = ("commutativity inherited from (Q\\{0},*)",) if prop is Property.COMMUTATIVE_SSDG else ()
    return lambda: _lattice_certificate(
        SymbolicStructure.Q_NONZERO_MUL, prop, witness,
        multiplicative_semigroup_report, multiplicative_group_report, notes,
    )


def _abelian_strongly_commutative(structure: SymbolicStructure,
                                  part: Callable[[], Certificate]) -> Callable[[], Certificate]:
    def build() -> Certificate:
        inner = part()
        return _certificate(
            structure, Property.STRONGLY_COMMUTATIVE_SSDG, inner.witness, inner.weak_axioms,
            inner.strong_failure, notes=("every subset commutes: the operation is commutative",),
            parts=(inner,),
        )

    return build


def matrix_label(m: Matrix) -> str:
    rows = [",".join(str(m[i, j]) for j in range(m.cols)) for i in range(m.rows)]
    return "[" + ";".join(rows) + "]"


def _integral(m: Matrix) -> bool:
    return all(Fraction(str(v)).denominator == 1 for v in m)


_INTEGER_SAMPLES = [
    Matrix([[1, 1], [0, 1]]),
    Matrix([[1, 0], [1, 1]]),
    Matrix([[2, 0], [0, 1]]),
    Matrix([[0, 1], [1, 0]]),
    Matrix([[1, -2], [-2, 1]]),
]
GL2_GENERATOR = Matrix([[1, -2], [-2, 1]])


def _integer_matrices_semigroup() -> Certificate:
    weak = ReportBuilder(SC.SEMIGROUP)
    for a in _INTEGER_SAMPLES:
        for b in _INTEGER_SAMPLES:
            product = a * b
            if not _integral(product) or product.det() == 0:
                weak.add("closure", matrix_label(a), matrix_label(b))
    strong = ReportBuilder(SC.GROUP)
    for a in _INTEGER_SAMPLES:
        if not _integral(a.inv()):
            strong.add("inverse", matrix_label(a))
            break
    return _certificate(
        SymbolicStructure.GL2_Q, Property.S_SPECIAL_DEFINITE_GROUP, "P2x2",
        weak.build(), strong.build(),
        notes=("P2x2 = integer matrices with nonzero determinant",),
    )


def _generated_semigroup(powers: int = 5) -> Certificate:
    label = "<" + matrix_label(GL2_GENERATOR) + ">"
    weak = ReportBuilder(SC.SEMIGROUP)
    members = [GL2_GENERATOR ** k for k in range(1, powers + 1)]
    for i, a in enumerate(members, start=1):
        for j, b in enumerate(members, start=1):
            if a * b != GL2_GENERATOR ** (i + j):
                weak.add("closure", f"g^{i}", f"g^{j}")
            if a * b != b * a:
                weak.add("commutativity", f"g^{i}", f"g^{j}")
    strong = ReportBuilder(SC.GROUP)
    if not _integral(GL2_GENERATOR.inv()):
        strong.add("inverse", matrix_label(GL2_GENERATOR))
    return _certificate(
        SymbolicStructure.GL2_Q, Property.COMMUTATIVE_SSDG, label, weak.build(), strong.build(),
        notes=("powers of one matrix commute; its inverse has non-integer entries",),
    )


# Rings and fields

def _z_definite_special_ring() -> Certificate:
    return _lattice_certificate(
        SymbolicStructure.Z_RING, Property.S_DEFINITE_SPECIAL_RING,
        lattice(2, Sign.POS, with_zero=True), semiring_report, ring_report,
    )


def _nz_part(n: int) -> Optional[Certificate]:
    """nZ+ u {0} inside the subring nZ, when nZ is a subring."""
    if not ring_report(lattice(n, Sign.ALL)).ok:
        return None
    v = lattice(n, Sign.POS, with_zero=True)
    return Certificate(
        property=Property.S_DEFINITE_SPECIAL_RING,
        structure=f"{n}Z" if n > 1 else "Z",
        mode=Mode.CATALOG,
        witness=format_set(v),
        witness_labels=(format_set(v),),
        weak_axioms=semiring_report(v),
        strong_failure=ring_report(v),
        source=SymbolicStructure.Z_RING,
    )


def _z_strong_special_definite() -> Certificate:
    parts = [p for p in (_nz_part(n) for n in range(1, SUBRING_CHECK_LIMIT + 1)) if p]
    return _certificate(
        SymbolicStructure.Z_RING, Property.S_STRONG_SPECIAL_DEFINITE_RING, "nZ+,0 in nZ",
        parts[0].weak_axioms, parts[0].strong_failure,
        notes=(f"every subring nZ holds nZ+ u {{0}}; checked for n <= {SUBRING_CHECK_LIMIT}",),
        parts=parts,
    )


def _z_ideally_strong() -> Certificate:
    parts = [p for p in (_nz_part(n) for n in range(1, SUBRING_CHECK_LIMIT + 1)) if p]
    notes = [f"nZ is an ideal of Z; checked for n <= {SUBRING_CHECK_LIMIT}"]
    for n in range(2, SUBRING_CHECK_LIMIT + 1):
        if not s_special_definite_ideal(n).holds:
            notes.append(f"{n}Z fails the special definite ideal check")
    return _certificate(
        SymbolicStructure.Z_RING, Property.S_IDEALLY_STRONG, "nZ",
        parts[0].weak_axioms, parts[0].strong_failure, notes=notes, parts=parts,
    )


def _q_field(prop: Property) -> Callable[[], Certificate]:
    if prop is Property.S_DEFINITE_SPECIAL_FIELD:
        return lambda: _lattice_certificate(
            SymbolicStructure.Q_FIELD, prop, Z_NONNEG, semifield_report, field_report
        )
    if prop is Property.S_SPECIAL_DEFINITE_DIVISION_RING:
        return lambda: _lattice_certificate(
            SymbolicStructure.Q_FIELD, prop, Z, ring_report,
            lambda s: field_report(s, cls=SC.DIVISION_RING),
        )
    return lambda: _lattice_certificate(SymbolicStructure.Q_FIELD, prop, Z, ring_report, field_report)


def _q_prime_field() -> Certificate:
    inner = _q_field(Property.S_SPECIAL_DEFINITE_FIELD)()
    return _certificate(
        SymbolicStructure.Q_FIELD, Property.S_SPECIAL_DEFINITE_PRIME_FIELD, inner.witness,
        inner.weak_axioms, inner.strong_failure,
        notes=("Q has no proper subfield",), parts=(inner,),
    )


def _scalar_product_agrees(x: Fraction, y: Fraction) -> bool:
    return Quaternion.scalar(x) * Quaternion.scalar(y) == Quaternion.scalar(x * y)


def _quaternion_division_ring() -> Certificate:
    weak = _with_embedding(ring_report(Z), Z, _scalar_product_agrees)
    strong = field_report(
        Z, invertible=lambda x: integral_inverse(Quaternion.scalar(x)) is not None,
        cls=SC.DIVISION_RING,
    )
    return _certificate(
        SymbolicStructure.H_Q, Property.S_SPECIAL_DEFINITE_DIVISION_RING, "Z", weak, strong,
        notes=(
            "rational quaternions stand in for the real ones",
            "the integer quaternions are a second, non-commutative, ring witness",
        ),
    )


def _near_ring(structure: SymbolicStructure, witness: LatticeSet) -> Callable[[], Certificate]:
    return lambda: _lattice_certificate(
        structure, Property.S_DEFINITE_SPECIAL_NEAR_RING, witness,
        seminear_ring_report, near_ring_report,
    )


def _qs3_embedding() -> Callable[[Fraction, Fraction], bool]:
    s3 = symmetric_group(3)
    ring = group_ring(CoefficientRing(), s3)
    e = ring.identity.support[0]

    def agrees(x: Fraction, y: Fraction) -> bool:
        product = ring.mul(ring.basis(e, int(x)), ring.basis(e, int(y)))
        return product == ring.basis(e, int(x * y))

    return agrees


def _qs3_s_ring() -> Certificate:
    weak = _with_embedding(field_report(Q), Q, _qs3_embedding())
    return _certificate(SymbolicStructure.QS3, Property.S_RING, "Q*e", weak, None,
                        notes=("e is the identity of S_3; Q*e is a copy of Q",))


def _qs3_definite_special() -> Certificate:
    weak = _with_embedding(semiring_report(Z_NONNEG), Z_NONNEG, _qs3_embedding())
    return _certificate(SymbolicStructure.QS3, Property.S_DEFINITE_SPECIAL_RING, "Z0*e", weak,
                        ring_report(Z_NONNEG))


def _qs3_doubly_strong() -> Certificate:
    parts = (_qs3_s_ring(), _qs3_definite_special())
    return _certificate(
        SymbolicStructure.QS3, Property.S_DOUBLY_STRONG, "Q*e, Z0*e", None, None, parts=parts,
    )


CATALOG: Dict[Tuple[SymbolicStructure, Property], Callable[[], Certificate]] = {
    (SymbolicStructure.Z_MUL, Property.S_SEMIGROUP): _z_mul_s_semigroup,
    (SymbolicStructure.Z_ADD, Property.S_SPECIAL_DEFINITE_GROUP): _z_add(Property.S_SPECIAL_DEFINITE_GROUP),
    (SymbolicStructure.Z_ADD, Property.COMMUTATIVE_SSDG): _z_add(Property.COMMUTATIVE_SSDG),
    (SymbolicStructure.Z_ADD, Property.STRONGLY_COMMUTATIVE_SSDG): _abelian_strongly_commutative(
        SymbolicStructure.Z_ADD, _z_add(Property.S_SPECIAL_DEFINITE_GROUP)
    ),
    (SymbolicStructure.Q_NONZERO_MUL, Property.S_SPECIAL_DEFINITE_GROUP): _q_nonzero(
        Property.S_SPECIAL_DEFINITE_GROUP, Z_NONZERO
    ),
    (SymbolicStructure.Q_NONZERO_MUL, Property.COMMUTATIVE_SSDG): _q_nonzero(
        Property.COMMUTATIVE_SSDG, Z_POS
    ),
    (SymbolicStructure.Q_NONZERO_MUL, Property.STRONGLY_COMMUTATIVE_SSDG): _abelian_strongly_commutative(
        SymbolicStructure.Q_NONZERO_MUL, _q_nonzero(Property.S_SPECIAL_DEFINITE_GROUP, Z_NONZERO)
    ),
    (SymbolicStructure.GL2_Q, Property.S_SPECIAL_DEFINITE_GROUP): _integer_matrices_semigroup,
    (SymbolicStructure.GL2_Q, Property.COMMUTATIVE_SSDG): _generated_semigroup,
    (SymbolicStructure.Z_RING, Property.S_DEFINITE_SPECIAL_RING): _z_definite_special_ring,
    (SymbolicStructure.Z_RING, Property.S_STRONG_SPECIAL_DEFINITE_RING): _z_strong_special_definite,
    (SymbolicStructure.Z_RING, Property.S_IDEALLY_STRONG): _z_ideally_strong,
    (SymbolicStructure.Q_FIELD, Property.S_SPECIAL_DEFINITE_FIELD): _q_field(Property.S_SPECIAL_DEFINITE_FIELD),
    (SymbolicStructure.Q_FIELD, Property.S_DEFINITE_SPECIAL_FIELD): _q_field(Property.S_DEFINITE_SPECIAL_FIELD),
    (SymbolicStructure.Q_FIELD, Property.S_SPECIAL_DEFINITE_DIVISION_RING): _q_field(
        Property.S_SPECIAL_DEFINITE_DIVISION_RING
    ),
    (SymbolicStructure.Q_FIELD, Property.S_SPECIAL_DEFINITE_PRIME_FIELD): _q_prime_field,
    (SymbolicStructure.H_Q, Property.S_SPECIAL_DEFINITE_DIVISION_RING): _quaternion_division_ring,
    (SymbolicStructure.Z_NEAR_RING, Property.S_DEFINITE_SPECIAL_NEAR_RING): _near_ring(
        SymbolicStructure.Z_NEAR_RING, Z_NONNEG
    ),
    (SymbolicStructure.Q_NEAR_RING, Property.S_DEFINITE_SPECIAL_NEAR_RING): _near_ring(
        SymbolicStructure.Q_NEAR_RING, Q_NONNEG
    ),
    (SymbolicStructure.QS3, Property.S_RING): _qs3_s_ring,
    (SymbolicStructure.QS3, Property.S_DEFINITE_SPECIAL_RING): _qs3_definite_special,
    (SymbolicStructure.QS3, Property.S_DOUBLY_STRONG): _qs3_doubly_strong,
}


def lookup(structure: SymbolicStructure, prop: Property) -> Optional[Certificate]:
    """Rebuild the catalog certificate, or None when the catalog is silent."""
    build = CATALOG.get((SymbolicStructure(structure), Property(prop)))
    if build is None:
        return None
    certificate = build()
    logger.debug("catalog_lookup", structure=structure.value, property=prop.value,
                 witness=str(certificate.witness))
    return certificate


def catalog_entries() -> List[Tuple[SymbolicStructure, Property]]:
    return sorted(CATALOG, key=lambda key: (key[0].value, key[1].value))
