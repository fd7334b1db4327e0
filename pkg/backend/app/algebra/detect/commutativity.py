"""
Strong commutativity: every witness semigroup (or seminear ring) commutes.

Decided by exhaustion on finite structures. Infinite structures can only be
refuted by a stored non-commuting pair, or confirmed when the ambient
operation itself is commutative; anything else is UNKNOWN.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

import structlog
from sympy import Matrix

from app.algebra.detect.catalog import GL2_GENERATOR, SymbolicStructure, matrix_label
from app.algebra.detect.exhaustive import (
    candidates,
    exclusion_report,
    format_witness,
    require_parent,
    search_view,
    structure_name,
    witness_report,
)
from app.algebra.detect.properties import Property, binding
from app.algebra.finite import FiniteMagma, FiniteRingTable, check_commutative, jsonable

logger = structlog.get_logger()


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    NO_SEMIGROUP_SUBSETS = "no_semigroup_subsets"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CommutativityVerdict:
    """Outcome with the non-commuting witness subset and pair when refuted."""

    structure: str
    verdict: Verdict
    witness: Any = None
    pair: Optional[Tuple[Any, Any]] = None
    examined: int = 0
    note: str = ""

    def __bool__(self) -> bool:
        return self.verdict is Verdict.TRUE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "structure": self.structure,
            "verdict": self.verdict.value,
            "witness": jsonable(self.witness),
            "pair": jsonable(self.pair),
            "examined": self.examined,
            "note": self.note,
        }


# Stored refutations and confirmations for the infinite structures.
_GL2_PAIR = ("[1,1;0,1]", "[1,0;1,1]")

_SYMBOLIC_GROUPS: Dict[SymbolicStructure, CommutativityVerdict] = {
    SymbolicStructure.GL2_Q: CommutativityVerdict(
        "GL_2(Q)", Verdict.FALSE, witness="P2x2", pair=_GL2_PAIR,
        note=f"only commutative: <{matrix_label(GL2_GENERATOR)}> is a commuting witness",
    ),
    SymbolicStructure.Z_ADD: CommutativityVerdict(
        "(Z,+)", Verdict.TRUE, witness="Z+", note="the group operation is commutative",
    ),
    SymbolicStructure.Q_NONZERO_MUL: CommutativityVerdict(
        "(Q\\{0},*)", Verdict.TRUE, witness="Z!0", note="the group operation is commutative",
    ),
}

_SYMBOLIC_NEAR_RINGS: Dict[SymbolicStructure, CommutativityVerdict] = {
    SymbolicStructure.Z_NEAR_RING: CommutativityVerdict(
        "(Z,+,a*b=a)", Verdict.FALSE, witness="Z0", pair=(0, 1),
        note="0*1 = 0 but 1*0 = 1; every seminear ring with two elements fails",
    ),
    SymbolicStructure.Q_NEAR_RING: CommutativityVerdict(
        "(Q,+,a*b=a)", Verdict.FALSE, witness="Q0", pair=(0, 1),
        note="0*1 = 0 but 1*0 = 1; every seminear ring with two elements fails",
    ),
}


def _gl2_pair_differs() -> bool:
    a = Matrix([[1, 1], [0, 1]])
    b = Matrix([[1, 0], [1, 1]])
    return a * b != b * a


def _exhaustive(structure: Union[FiniteMagma, FiniteRingTable],
                prop: Property) -> Tuple[CommutativityVerdict, bool]:
    """Verdict over all witnesses, and whether at least one witness commutes."""
    require_parent(structure, prop)
    b = binding(prop)
    view = search_view(structure, b)
    name = structure_name(structure)
    witnesses = []
    examined = 0
    for subset in candidates(view):
        examined += 1
        if not witness_report(view, b, subset).ok:
            continue
        if exclusion_report(view, b, subset).ok:
            continue
        witnesses.append(subset)
    if not witnesses:
        return CommutativityVerdict(name, Verdict.NO_SEMIGROUP_SUBSETS, examined=examined), False
    # commutativity of the product, which is the magma operation or the ring's multiplication
    magma = view.multiplicative_magma() if isinstance(view, FiniteRingTable) else view
    reports = [(subset, check_commutative(magma, subset, cap=1)) for subset in witnesses]
    some_commute = any(report.ok for _, report in reports)
    for subset, report in reports:
        if not report.ok:
            x, y = report.first().witness
            return CommutativityVerdict(
                name, Verdict.FALSE, witness=format_witness(view, subset),
                pair=(view.labels[x], view.labels[y]), examined=examined,
            ), some_commute
    return CommutativityVerdict(name, Verdict.TRUE, witness=format_witness(view, witnesses[0]),
                                examined=examined), some_commute


def detect_strongly_commutative(
    structure: Union[FiniteMagma, FiniteRingTable, SymbolicStructure]
) -> CommutativityVerdict:
    """
    Whether every semigroup witness of an S-special definite group is commutative.

    Raises:
        ClassMismatch: if a finite structure is not a group.
    """
    if isinstance(structure, SymbolicStructure):
        verdict = _SYMBOLIC_GROUPS.get(structure)
        if verdict is None:
            return CommutativityVerdict(structure.display, Verdict.UNKNOWN,
                                        note="no stored witness for this structure")
        if structure is SymbolicStructure.GL2_Q and not _gl2_pair_differs():
            return CommutativityVerdict(structure.display, Verdict.UNKNOWN,
                                        note="stored pair commutes")
        return verdict
    result, _ = _exhaustive(structure, Property.S_SPECIAL_DEFINITE_GROUP)
    logger.info("strong_commutativity", structure=result.structure, verdict=result.verdict.value)
    return result


@dataclass(frozen=True)
class NearRingCommutativity:
    """
    ``commutative``: some seminear ring witness commutes under the product.
    ``strongly``: every seminear ring witness does.
    """

    commutative: Optional[bool]
    strongly: CommutativityVerdict

    def to_dict(self) -> Dict[str, Any]:
        return {"commutative": self.commutative, "strongly": self.strongly.to_dict()}


def near_ring_commutativity(
    structure: Union[FiniteRingTable, SymbolicStructure]
) -> NearRingCommutativity:
    """
    S-definite special commutative and strongly commutative near rings.

    Raises:
        ClassMismatch: if a finite structure is not a near ring.
    """
    if isinstance(structure, SymbolicStructure):
        verdict = _SYMBOLIC_NEAR_RINGS.get(structure)
        if verdict is None:
            return NearRingCommutativity(None, CommutativityVerdict(structure.display, Verdict.UNKNOWN))
        return NearRingCommutativity(False, verdict)
    verdict, some_commute = _exhaustive(structure, Property.S_DEFINITE_SPECIAL_NEAR_RING)
    return NearRingCommutativity(some_commute, verdict)
