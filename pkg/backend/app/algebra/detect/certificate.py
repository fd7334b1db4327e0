"""
Detection outcomes: a Certificate when a witness was found and verified,
NotFound otherwise.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from app.algebra.detect.properties import Property
from app.algebra.finite import AxiomReport, jsonable


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    CATALOG = "catalog"
    GIVEN = "given"


@dataclass(frozen=True)
class Certificate:
    """
    A witness for ``property`` inside a structure, with both axiom transcripts.

    ``weak_axioms`` is the (passing) report of the witness against the
    witness class. ``strong_failure`` is the (failing) report that keeps the
    witness honest: the witness is not a sub-instance of the parent's class,
    or for an S-semigroup the parent is not a group. It is None when the
    property excludes nothing. Compound properties hold their evidence in
    ``parts``.
    """

    property: Property
    structure: str
    mode: Mode
    witness: Any
    witness_labels: Tuple[str, ...] = ()
    weak_axioms: Optional[AxiomReport] = None
    strong_failure: Optional[AxiomReport] = None
    parts: Tuple["Certificate", ...] = ()
    notes: Tuple[str, ...] = ()
    source: Any = field(default=None, compare=False, repr=False)

    @property
    def found(self) -> bool:
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property.value,
            "structure": self.structure,
            "mode": self.mode.value,
            "witness": jsonable(self.witness),
            "witness_labels": list(self.witness_labels),
            "weak_axioms": self.weak_axioms.to_dict() if self.weak_axioms else None,
            "strong_failure": self.strong_failure.to_dict() if self.strong_failure else None,
            "parts": [p.to_dict() for p in self.parts],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class NotFound:
    """
    No witness. ``exhaustive`` is True only when every candidate was checked,
    which makes this a nonexistence result rather than catalog silence.
    """

    property: Property
    structure: str
    exhaustive: bool
    examined: int = 0
    reason: str = ""

    @property
    def found(self) -> bool:
        return False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property.value,
            "structure": self.structure,
            "found": False,
            "exhaustive": self.exhaustive,
            "examined": self.examined,
            "reason": self.reason,
        }


Detection = Union[Certificate, NotFound]
