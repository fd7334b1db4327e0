"""
Entry points for property detection and certificate re-verification.
"""
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import structlog

from app.algebra.detect.catalog import SymbolicStructure, lookup
from app.algebra.detect.certificate import Certificate, Detection, Mode, NotFound
from app.algebra.detect.commutativity import Verdict, detect_strongly_commutative
from app.algebra.detect.exhaustive import (
    certificate_for,
    compound_certificate,
    doubly_strong,
    exclusion_report,
    exhaustive_search,
    ideally_strong,
    prime_field,
    require_parent,
    search_view,
    strong_special_definite,
    structure_name,
    witness_report,
)
from app.algebra.detect.properties import Property, binding
from app.algebra.errors import AxiomFailure, ClassMismatch
from app.algebra.finite import FiniteMagma, FiniteRingTable
from app.utils.metrics import detector_runs_total

logger = structlog.get_logger()

Structure = Union[FiniteMagma, FiniteRingTable, SymbolicStructure]

_COMPOUND_SEARCH = {
    Property.S_DOUBLY_STRONG: doubly_strong,
    Property.S_SPECIAL_DEFINITE_PRIME_FIELD: prime_field,
    Property.S_STRONG_SPECIAL_DEFINITE_RING: strong_special_definite,
    Property.S_IDEALLY_STRONG: ideally_strong,
}


class DetectMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    CATALOG = "catalog"


def _record(prop: Property, mode: DetectMode, result: Detection) -> Detection:
    outcome = "found" if result.found else ("not_found" if result.exhaustive else "silent")
    detector_runs_total.labels(property=prop.value, mode=mode.value, outcome=outcome).inc()
    logger.info("detect", property=prop.value, mode=mode.value, structure=result.structure,
                outcome=outcome)
    return result


def _catalog(structure: SymbolicStructure, prop: Property) -> Detection:
    if binding(prop).parent not in structure.classes:
        raise ClassMismatch(f"{structure.display} is not a {binding(prop).parent.value}")
    certificate = lookup(structure, prop)
    if certificate is None:
        return NotFound(prop, structure.display, exhaustive=False,
                        reason="the catalog holds no witness for this structure")
    return certificate


def _strongly_commutative(structure: Union[FiniteMagma, FiniteRingTable]) -> Detection:
    verdict = detect_strongly_commutative(structure)
    if verdict.verdict is not Verdict.TRUE:
        return NotFound(Property.STRONGLY_COMMUTATIVE_SSDG, verdict.structure, exhaustive=True,
                        examined=verdict.examined, reason=verdict.verdict.value)
    part = exhaustive_search(structure, Property.S_SPECIAL_DEFINITE_GROUP)
    return compound_certificate(structure, Property.STRONGLY_COMMUTATIVE_SSDG, [part],
                                notes=["every semigroup witness commutes"])


def detect(structure: Structure, prop: Union[Property, str],
           mode: Union[DetectMode, str] = DetectMode.EXHAUSTIVE,
           allow_trivial: bool = False) -> Detection:
    """
    Look for a witness of ``prop`` in ``structure``.

    Args:
        structure: finite magma, finite ring table or catalogued symbolic structure
        prop: the property to detect
        mode: ``exhaustive`` searches every closed subset of a finite structure;
            ``catalog`` rebuilds and verifies a stored witness of a symbolic one
        allow_trivial: let singletons count as witnesses

    Returns:
        A Certificate, NotFound(exhaustive=True) after a complete search, or
        NotFound(exhaustive=False) when the catalog is silent.

    Raises:
        ClassMismatch: if the structure is not in the property's parent class,
            or exhaustive mode is asked of a symbolic structure.
    """
    prop = Property(prop)
    mode = DetectMode(mode)
    if isinstance(structure, SymbolicStructure):
        if mode is DetectMode.EXHAUSTIVE:
            raise ClassMismatch("exhaustive mode needs a finite structure")
        return _record(prop, mode, _catalog(structure, prop))
    if mode is DetectMode.CATALOG:
        return _record(prop, mode, NotFound(prop, structure_name(structure), exhaustive=False,
                                            reason="the catalog holds symbolic structures only"))

    require_parent(structure, prop)
    if prop is Property.STRONGLY_COMMUTATIVE_SSDG:
        result = _strongly_commutative(structure)
    elif prop in _COMPOUND_SEARCH:
        result = _COMPOUND_SEARCH[prop](structure, allow_trivial)
    else:
        result = exhaustive_search(structure, prop, allow_trivial)
    return _record(prop, mode, result)


def _subset_ids(structure: Union[FiniteMagma, FiniteRingTable], witness: Iterable) -> tuple:
    ids = set()
    for w in witness:
        ids.add(structure.index_of(w) if isinstance(w, str) else int(w))
    return tuple(sorted(ids))


def certify(structure: Union[FiniteMagma, FiniteRingTable], prop: Union[Property, str],
            witness: Sequence) -> Certificate:
    """
    Certificate for an explicit witness (element ids or labels).

    Raises:
        ClassMismatch: if the structure is not in the property's parent class.
        AxiomFailure: if the witness fails its class, is not proper, or is not
            excluded from the parent's class as the property requires.
    """
    prop = Property(prop)
    b = binding(prop)
    if b.compound:
        raise ClassMismatch(f"{prop.value} is certified through its parts")
    require_parent(structure, prop)
    view = search_view(structure, b)
    subset = _subset_ids(view, witness)
    if not subset or len(subset) >= view.order:
        raise AxiomFailure(f"witness must be a nonempty proper subset of {structure_name(structure)}")
    weak = witness_report(view, b, subset)
    if not weak.ok:
        raise AxiomFailure(f"witness is not a {b.witness.value}", weak)
    strong = exclusion_report(view, b, subset)
    if strong is not None and strong.ok:
        where = "witness" if b.excluded_on == "witness" else "parent"
        raise AxiomFailure(f"the {where} is a {b.excluded.value}, which the property excludes", strong)
    return certificate_for(structure, prop, subset, weak, strong, Mode.GIVEN)


def _verify_finite(c: Certificate) -> bool:
    structure = c.source
    b = binding(c.property)
    try:
        require_parent(structure, c.property)
    except ClassMismatch:
        return False
    view = search_view(structure, b)
    subset = tuple(c.witness)
    if not subset or len(subset) >= view.order or tuple(sorted(set(subset))) != subset:
        return False
    if any(not 0 <= e < view.order for e in subset):
        return False
    weak = witness_report(view, b, subset)
    if not weak.ok or weak != c.weak_axioms:
        return False
    strong = exclusion_report(view, b, subset)
    if strong is None:
        return c.strong_failure is None
    return not strong.ok and strong == c.strong_failure


def _verify_compound(c: Certificate) -> bool:
    """Every part re-verifies and a fresh search yields the same parts."""
    if not c.parts or not all(verify_certificate(p) for p in c.parts):
        return False
    if c.property is Property.STRONGLY_COMMUTATIVE_SSDG:
        recomputed = _strongly_commutative(c.source)
    else:
        allow_trivial = any(len(p.witness) == 1 for p in c.parts)
        recomputed = _COMPOUND_SEARCH[c.property](c.source, allow_trivial)
    return isinstance(recomputed, Certificate) and recomputed.parts == c.parts


def verify_certificate(c: Optional[Union[Certificate, NotFound]]) -> bool:
    """
    Re-check a certificate independently of the search that produced it.

    Catalog certificates are rebuilt from the catalog and compared; finite
    certificates have both axiom reports recomputed on the stored witness.
    NotFound and tampered certificates are rejected.
    """
    if not isinstance(c, Certificate):
        return False
    if isinstance(c.source, SymbolicStructure):
        expected = lookup(c.source, c.property)
        ok = expected is not None and expected == c
    elif not isinstance(c.source, (FiniteMagma, FiniteRingTable)):
        ok = False
    elif binding(c.property).compound:
        ok = _verify_compound(c)
    else:
        ok = _verify_finite(c)
    logger.debug("certificate_verified", property=c.property.value, structure=c.structure, ok=ok)
    return ok
