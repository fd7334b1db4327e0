"""
Axiom reports shared by every checker in the library.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

from app.config import get_settings


class StructureClass(str, Enum):
    """Structure-class tags an AxiomReport can claim."""

    SEMIGROUP = "semigroup"
    MONOID = "monoid"
    GROUP = "group"
    ABELIAN_GROUP = "abelian_group"
    COMMUTATIVE = "commutative"
    RING = "ring"
    SEMIRING = "semiring"
    SEMIFIELD = "semifield"
    FIELD = "field"
    DIVISION_RING = "division_ring"
    NEAR_RING = "near_ring"
    SEMINEAR_RING = "seminear_ring"
    LEFT_DISTRIBUTIVE = "left_distributive"
    N_GROUP = "n_group"
    HOMOMORPHISM = "homomorphism"
    SEMIVECTOR_SPACE = "semivector_space"
    RESTRICTED_MAP = "restricted_map"
    CONVERGING_MAP = "converging_map"
    DIVERGING_MAP = "diverging_map"
    INNER_PRODUCT = "inner_product"
    SEMILINEAR_ALGEBRA = "semilinear_algebra"


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance: the axiom name and the offending elements."""

    axiom: str
    witness: Tuple[Any, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"axiom": self.axiom, "witness": [jsonable(w) for w in self.witness]}


@dataclass(frozen=True)
class AxiomReport:
    """
    Result of checking one structure class.

    ``violations`` is empty exactly when no counterexample exists; at most
    ``violation_cap`` entries are kept and ``truncated`` records whether more
    were found.
    """

    claimed_class: StructureClass
    violations: Tuple[Violation, ...] = ()
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_failed(self) -> List[str]:
        seen: List[str] = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def first(self, axiom: Optional[str] = None) -> Optional[Violation]:
        for v in self.violations:
            if axiom is None or v.axiom == axiom:
                return v
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claimed_class": self.claimed_class.value,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "truncated": self.truncated,
        }


@dataclass
class ReportBuilder:
    """Accumulates violations up to the configured cap."""

    claimed_class: StructureClass
    cap: Optional[int] = None
    violations: List[Violation] = field(default_factory=list)
    truncated: bool = False

    def __post_init__(self):
        if self.cap is None:
            self.cap = get_settings().violation_cap

    @property
    def full(self) -> bool:
        return len(self.violations) >= self.cap

    @property
    def failed(self) -> bool:
        return bool(self.violations)

    def add(self, axiom: str, *witness: Any) -> None:
        if self.full:
            self.truncated = True
            return
        self.violations.append(Violation(axiom, tuple(_plain(w) for w in witness)))

    def extend(self, axiom: str, witnesses: Iterable[Tuple[Any, ...]]) -> None:
        for witness in witnesses:
            if self.full:
                self.truncated = True
                return
            self.add(axiom, *witness)

    def merge(self, report: AxiomReport, prefix: str = "") -> None:
        for v in report.violations:
            self.add(f"{prefix}{v.axiom}", *v.witness)
        if report.truncated:
            self.truncated = True

    def build(self) -> AxiomReport:
        return AxiomReport(
            claimed_class=self.claimed_class,
            violations=tuple(self.violations),
            truncated=self.truncated,
        )


def _plain(value: Any) -> Any:
    """Convert numpy scalars to builtins so reports compare and serialise cleanly."""
    if hasattr(value, "item") and not isinstance(value, (tuple, list)):
        try:
            return value.item()
        except (TypeError, ValueError):
            return value
    if isinstance(value, tuple):
        return tuple(_plain(v) for v in value)
    return value


def jsonable(value: Any) -> Any:
    """Witness value as JSON data; rationals and symbolic sets become strings."""
    value = _plain(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (tuple, list, frozenset, set)):
        items = sorted(value) if isinstance(value, (frozenset, set)) else value
        return [jsonable(v) for v in items]
    return str(value)
