"""
Exhaustive detection on finite structures.

Candidates are the proper closed subsets of the structure (under the
multiplication only for single-operation properties), tried largest first
and then lexicographically. Singletons are skipped unless ``allow_trivial``
is set.
"""
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import structlog

from app.algebra.detect.certificate import Certificate, Detection, Mode, NotFound
from app.algebra.detect.properties import Property, PropertyBinding, binding
from app.algebra.errors import ClassMismatch
from app.algebra.finite import (
    RING_CHECKERS,
    AxiomReport,
    FiniteMagma,
    FiniteRingTable,
    ReportBuilder,
    check_class,
    check_field,
    check_group,
    check_ring,
    check_semiring,
    enumerate_closed_subsets,
    is_normal,
    restrict,
)

logger = structlog.get_logger()

Structure = Union[FiniteMagma, FiniteRingTable]
Subset = Tuple[int, ...]


def structure_name(structure: Structure) -> str:
    return structure.name or f"order-{structure.order} table"


def search_view(structure: Structure, b: PropertyBinding) -> Structure:
    """The table(s) a witness must be closed under."""
    if b.operations == 1 and isinstance(structure, FiniteRingTable):
        return structure.multiplicative_magma()
    return structure


def require_parent(structure: Structure, prop: Property) -> None:
    """
    Raises:
        ClassMismatch: if ``structure`` is not in the property's parent class.
    """
    b = binding(prop)
    if b.parent in RING_CHECKERS and not isinstance(structure, FiniteRingTable):
        raise ClassMismatch(f"{prop.value} needs a two-operation structure")
    report = check_class(structure, b.parent, cap=1)
    if not report.ok:
        raise ClassMismatch(
            f"{structure_name(structure)} is not a {b.parent.value}: "
            f"{report.first().axiom} fails at {list(report.first().witness)}"
        )


def witness_report(view: Structure, b: PropertyBinding, subset: Sequence[int]) -> AxiomReport:
    """Report of ``subset`` against the witness class and any extra classes."""
    report = check_class(view, b.witness, subset)
    if not b.extra:
        return report
    builder = ReportBuilder(b.witness)
    builder.merge(report)
    for cls in b.extra:
        builder.merge(check_class(view, cls, subset))
    return builder.build()


def exclusion_report(view: Structure, b: PropertyBinding, subset: Optional[Sequence[int]]) -> Optional[AxiomReport]:
    """Report that must fail: the excluded class on the witness, or on the parent."""
    if b.excluded is None:
        return None
    target = subset if b.excluded_on == "witness" else None
    return check_class(view, b.excluded, target)


def candidates(view: Structure, allow_trivial: bool = False,
               subsets: Optional[List[Subset]] = None) -> List[Subset]:
    if subsets is None:
        subsets = enumerate_closed_subsets(view, check=False)
    smallest = 1 if allow_trivial else 2
    chosen = [s for s in subsets if smallest <= len(s) < view.order]
    return sorted(chosen, key=lambda s: (-len(s), s))


def _labels(view: Structure, subset: Sequence[int]) -> Tuple[str, ...]:
    return tuple(view.labels[e] for e in subset)


def format_witness(view: Structure, subset: Sequence[int]) -> str:
    return "{" + ",".join(_labels(view, subset)) + "}"


def certificate_for(structure: Structure, prop: Property, subset: Subset, weak: AxiomReport,
                    strong: Optional[AxiomReport], mode: Mode = Mode.EXHAUSTIVE) -> Certificate:
    view = search_view(structure, binding(prop))
    return Certificate(
        property=prop,
        structure=structure_name(structure),
        mode=mode,
        witness=tuple(subset),
        witness_labels=_labels(view, subset),
        weak_axioms=weak,
        strong_failure=strong,
        source=structure,
    )


def exhaustive_search(structure: Structure, prop: Property, allow_trivial: bool = False,
                      subsets: Optional[List[Subset]] = None) -> Detection:
    """
    First witness of a single-witness property in candidate order.

    Args:
        structure: finite magma or ring table already known to be in the parent class
        prop: a non-compound property
        allow_trivial: also try singletons
        subsets: closed subsets of the search view, when the caller has them

    Returns:
        A Certificate, or NotFound(exhaustive=True) after every candidate.
    """
    b = binding(prop)
    view = search_view(structure, b)
    name = structure_name(structure)

    parent_failure = None
    if b.excluded_on == "parent":
        parent_failure = exclusion_report(view, b, None)
        if parent_failure.ok:
            return NotFound(prop, name, exhaustive=True,
                            reason=f"{name} is itself a {b.excluded.value}")

    examined = 0
    for subset in candidates(view, allow_trivial, subsets):
        examined += 1
        weak = witness_report(view, b, subset)
        if not weak.ok:
            continue
        strong = parent_failure if b.excluded_on == "parent" else exclusion_report(view, b, subset)
        if strong is not None and strong.ok:
            continue
        logger.debug("witness_found", property=prop.value, structure=name,
                     witness=format_witness(view, subset), examined=examined)
        return certificate_for(structure, prop, subset, weak, strong)

    logger.debug("witness_not_found", property=prop.value, structure=name, examined=examined)
    reason = f"none of {examined} proper closed subsets is a {b.witness.value}"
    if b.excluded is not None and b.excluded_on == "witness":
        reason += f" that fails {b.excluded.value}"
    return NotFound(prop, name, exhaustive=True, examined=examined, reason=reason)


def compound_certificate(structure: Structure, prop: Property, parts: Sequence[Certificate],
                         notes: Sequence[str] = (), mode: Mode = Mode.EXHAUSTIVE) -> Certificate:
    return Certificate(
        property=prop,
        structure=structure_name(structure),
        mode=mode,
        witness=tuple(p.witness for p in parts),
        witness_labels=tuple("{" + ",".join(p.witness_labels) + "}" for p in parts),
        parts=tuple(parts),
        notes=tuple(notes),
        source=structure,
    )


def _missing(prop: Property, structure: Structure, results: Sequence[Detection]) -> NotFound:
    examined = sum(r.examined for r in results if isinstance(r, NotFound))
    reason = "; ".join(f"{r.property.value}: {r.reason}" for r in results if isinstance(r, NotFound))
    return NotFound(prop, structure_name(structure), exhaustive=True, examined=examined, reason=reason)


def doubly_strong(ring: FiniteRingTable, allow_trivial: bool = False) -> Detection:
    """S-ring and S-definite special ring at once."""
    subsets = enumerate_closed_subsets(ring, check=False)
    results = [
        exhaustive_search(ring, Property.S_RING, allow_trivial, subsets),
        exhaustive_search(ring, Property.S_DEFINITE_SPECIAL_RING, allow_trivial, subsets),
    ]
    if any(isinstance(r, NotFound) for r in results):
        return _missing(Property.S_DOUBLY_STRONG, ring, results)
    return compound_certificate(ring, Property.S_DOUBLY_STRONG, results)


def proper_subfields(ring: FiniteRingTable, subsets: Optional[List[Subset]] = None) -> List[Subset]:
    if subsets is None:
        subsets = enumerate_closed_subsets(ring, check=False)
    return [s for s in subsets if 2 <= len(s) < ring.order and check_field(ring, s, cap=1).ok]


def prime_field(ring: FiniteRingTable, allow_trivial: bool = False) -> Detection:
    """An S-special definite or S-definite special field with no proper subfield."""
    subsets = enumerate_closed_subsets(ring, check=False)
    results = []
    for part in binding(Property.S_SPECIAL_DEFINITE_PRIME_FIELD).parts:
        result = exhaustive_search(ring, part, allow_trivial, subsets)
        if isinstance(result, Certificate):
            break
        results.append(result)
    else:
        return _missing(Property.S_SPECIAL_DEFINITE_PRIME_FIELD, ring, results)
    subfields = proper_subfields(ring, subsets)
    if subfields:
        return NotFound(Property.S_SPECIAL_DEFINITE_PRIME_FIELD, structure_name(ring), exhaustive=True,
                        reason=f"{format_witness(ring, subfields[-1])} is a proper subfield")
    return compound_certificate(ring, Property.S_SPECIAL_DEFINITE_PRIME_FIELD, [result],
                                notes=["no proper subfield"])


def _subrings(ring: FiniteRingTable, subsets: List[Subset]) -> List[Subset]:
    return [s for s in subsets if len(s) >= 2 and check_ring(ring, s, cap=1).ok]


def semiring_inside(ring: FiniteRingTable, subring: Subset, subsets: List[Subset],
                    allow_trivial: bool = False) -> Optional[Certificate]:
    """A proper subset of ``subring`` that is a semiring but not a ring."""
    inside = set(subring)
    smallest = 1 if allow_trivial else 2
    chosen = sorted((s for s in subsets if set(s) < inside and len(s) >= smallest),
                    key=lambda s: (-len(s), s))
    for s in chosen:
        weak = check_semiring(ring, s)
        if not weak.ok:
            continue
        strong = check_ring(ring, s)
        if strong.ok:
            continue
        return certificate_for(ring, Property.S_DEFINITE_SPECIAL_RING, s, weak, strong)
    return None


def is_ideal(ring: FiniteRingTable, subset: Sequence[int]) -> bool:
    """Two-sided absorption r*s, s*r in S (closure under + is the caller's concern)."""
    keep = np.zeros(ring.order, dtype=bool)
    keep[list(subset)] = True
    M = ring.mul_array
    return bool(keep[M[:, list(subset)]].all() and keep[M[list(subset), :]].all())


def strong_special_definite(ring: FiniteRingTable, allow_trivial: bool = False) -> Detection:
    """Every subring with two or more elements holds a semiring that is not a ring."""
    prop = Property.S_STRONG_SPECIAL_DEFINITE_RING
    subsets = enumerate_closed_subsets(ring, check=False)
    parts = []
    for v in _subrings(ring, subsets):
        found = semiring_inside(ring, v, subsets, allow_trivial)
        if found is None:
            return NotFound(prop, structure_name(ring), exhaustive=True, examined=len(parts) + 1,
                            reason=f"subring {format_witness(ring, v)} holds no semiring that is not a ring")
        parts.append(found)
    return compound_certificate(ring, prop, parts)


def ideally_strong(ring: FiniteRingTable, allow_trivial: bool = False) -> Detection:
    """Every S-definite special subring is an ideal; at least one must exist."""
    prop = Property.S_IDEALLY_STRONG
    subsets = enumerate_closed_subsets(ring, check=False)
    subrings = _subrings(ring, subsets)
    parts = []
    for v in subrings:
        found = semiring_inside(ring, v, subsets, allow_trivial)
        if found is None:
            continue
        if not is_ideal(ring, v):
            return NotFound(prop, structure_name(ring), exhaustive=True, examined=len(subrings),
                            reason=f"S-definite special subring {format_witness(ring, v)} is not an ideal")
        parts.append(found)
    if not parts:
        return NotFound(prop, structure_name(ring), exhaustive=True, examined=len(subrings),
                        reason="no S-definite special subrings")
    return compound_certificate(ring, prop, parts)


def definite_special_subgroups(group: FiniteMagma) -> List[Subset]:
    """Proper subgroups that are S-special definite groups in their own right."""
    require_parent(group, Property.S_SPECIAL_DEFINITE_GROUP)
    subgroups = [
        s for s in enumerate_closed_subsets(group, check=False)
        if len(s) < group.order and check_group(group, s, cap=1).ok
    ]
    found = []
    for h in subgroups:
        result = exhaustive_search(restrict(group, h), Property.S_SPECIAL_DEFINITE_GROUP)
        if isinstance(result, Certificate):
            found.append(h)
    return found


def is_definite_special_simple(group: FiniteMagma) -> bool:
    """An S-special definite group none of whose normal subgroups is one."""
    require_parent(group, Property.S_SPECIAL_DEFINITE_GROUP)
    if isinstance(exhaustive_search(group, Property.S_SPECIAL_DEFINITE_GROUP), NotFound):
        return False
    return not any(is_normal(group, h) for h in definite_special_subgroups(group))
