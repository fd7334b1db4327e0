"""
Smarandache properties and the structure classes each one relates.

Classical properties put a stronger structure inside a weaker one (a group
inside a semigroup); the special definite properties put a weaker structure
inside a stronger one (a semigroup inside a group). For the latter the
witness must *fail* the parent's class: a subgroup never counts as a
semigroup witness of a group.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from app.algebra.finite import StructureClass


class Property(str, Enum):
    S_SEMIGROUP = "s-semigroup"
    S_SPECIAL_DEFINITE_GROUP = "s-special-definite-group"
    COMMUTATIVE_SSDG = "commutative-ssdg"
    STRONGLY_COMMUTATIVE_SSDG = "strongly-commutative-ssdg"
    S_RING = "s-ring"
    S_DEFINITE_SPECIAL_RING = "s-definite-special-ring"
    S_SPECIAL_DEFINITE_FIELD = "s-special-definite-field"
    S_DEFINITE_SPECIAL_FIELD = "s-definite-special-field"
    S_SPECIAL_DEFINITE_PRIME_FIELD = "s-special-definite-prime-field"
    S_DOUBLY_STRONG = "s-doubly-strong"
    S_STRONG_SPECIAL_DEFINITE_RING = "s-strong-special-definite-ring"
    S_IDEALLY_STRONG = "s-ideally-strong"
    S_SPECIAL_DEFINITE_DIVISION_RING = "s-special-definite-division-ring"
    S_DEFINITE_SPECIAL_NEAR_RING = "s-definite-special-near-ring"


class Direction(str, Enum):
    STRONG_IN_WEAK = "strong-in-weak"
    WEAK_IN_STRONG = "weak-in-strong"
    COMPOUND = "compound"


@dataclass(frozen=True)
class PropertyBinding:
    """
    What a property asks of the parent and of its witness.

    Attributes:
        parent: class the structure under test must belong to
        witness: class the witness subset must belong to (None for compound properties)
        direction: strong-in-weak, weak-in-strong or compound
        excluded: class that must fail, on the witness or on the parent
        excluded_on: ``"witness"`` or ``"parent"``
        extra: further classes the witness must pass
        operations: 1 when only the multiplication is searched, 2 for both tables
        parts: sub-properties of a compound property
    """

    parent: StructureClass
    witness: Optional[StructureClass]
    direction: Direction
    excluded: Optional[StructureClass] = None
    excluded_on: str = "witness"
    extra: Tuple[StructureClass, ...] = ()
    operations: int = 2
    parts: Tuple[Property, ...] = ()

    @property
    def compound(self) -> bool:
        return self.direction is Direction.COMPOUND


SC = StructureClass

BINDINGS: Dict[Property, PropertyBinding] = {
    Property.S_SEMIGROUP: PropertyBinding(
        SC.SEMIGROUP, SC.GROUP, Direction.STRONG_IN_WEAK,
        excluded=SC.GROUP, excluded_on="parent", operations=1,
    ),
    Property.S_SPECIAL_DEFINITE_GROUP: PropertyBinding(
        SC.GROUP, SC.SEMIGROUP, Direction.WEAK_IN_STRONG, excluded=SC.GROUP, operations=1,
    ),
    Property.COMMUTATIVE_SSDG: PropertyBinding(
        SC.GROUP, SC.SEMIGROUP, Direction.WEAK_IN_STRONG,
        excluded=SC.GROUP, extra=(SC.COMMUTATIVE,), operations=1,
    ),
    Property.STRONGLY_COMMUTATIVE_SSDG: PropertyBinding(
        SC.GROUP, None, Direction.COMPOUND, operations=1,
        parts=(Property.S_SPECIAL_DEFINITE_GROUP,),
    ),
    Property.S_RING: PropertyBinding(SC.RING, SC.FIELD, Direction.STRONG_IN_WEAK),
    Property.S_DEFINITE_SPECIAL_RING: PropertyBinding(
        SC.RING, SC.SEMIRING, Direction.WEAK_IN_STRONG, excluded=SC.RING,
    ),
    Property.S_SPECIAL_DEFINITE_FIELD: PropertyBinding(
        SC.FIELD, SC.RING, Direction.WEAK_IN_STRONG, excluded=SC.FIELD,
    ),
    Property.S_DEFINITE_SPECIAL_FIELD: PropertyBinding(
        SC.FIELD, SC.SEMIFIELD, Direction.WEAK_IN_STRONG, excluded=SC.FIELD,
    ),
    Property.S_SPECIAL_DEFINITE_PRIME_FIELD: PropertyBinding(
        SC.FIELD, None, Direction.COMPOUND,
        parts=(Property.S_SPECIAL_DEFINITE_FIELD, Property.S_DEFINITE_SPECIAL_FIELD),
    ),
    Property.S_DOUBLY_STRONG: PropertyBinding(
        SC.RING, None, Direction.COMPOUND,
        parts=(Property.S_RING, Property.S_DEFINITE_SPECIAL_RING),
    ),
    Property.S_STRONG_SPECIAL_DEFINITE_RING: PropertyBinding(
        SC.RING, None, Direction.COMPOUND, parts=(Property.S_DEFINITE_SPECIAL_RING,),
    ),
    Property.S_IDEALLY_STRONG: PropertyBinding(
        SC.RING, None, Direction.COMPOUND, parts=(Property.S_DEFINITE_SPECIAL_RING,),
    ),
    Property.S_SPECIAL_DEFINITE_DIVISION_RING: PropertyBinding(
        SC.DIVISION_RING, SC.RING, Direction.WEAK_IN_STRONG, excluded=SC.DIVISION_RING,
    ),
    Property.S_DEFINITE_SPECIAL_NEAR_RING: PropertyBinding(
        SC.NEAR_RING, SC.SEMINEAR_RING, Direction.WEAK_IN_STRONG, excluded=SC.NEAR_RING,
    ),
}


def binding(prop: Property) -> PropertyBinding:
    return BINDINGS[Property(prop)]
