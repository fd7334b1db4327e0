"""
Smarandache property detectors, certificates and conjecture sweeps.
"""

from .catalog import CATALOG, SymbolicStructure, catalog_entries, lookup
from .certificate import Certificate, Detection, Mode, NotFound
from .commutativity import (
    CommutativityVerdict,
    NearRingCommutativity,
    Verdict,
    detect_strongly_commutative,
    near_ring_commutativity,
)
from .detector import DetectMode, certify, detect, verify_certificate
from .exhaustive import (
    candidates,
    definite_special_subgroups,
    exhaustive_search,
    is_definite_special_simple,
    is_ideal,
    proper_subfields,
)
from .homomorphism import LatticeMap, SymbolicOperand, verify_s_homomorphism
from .properties import BINDINGS, Direction, Property, PropertyBinding, binding
from .sweep import Conjecture, Family, MemberResult, SweepReport, family_members, sweep, sweep_member

__all__ = [
    "CATALOG",
    "SymbolicStructure",
    "catalog_entries",
    "lookup",
    "Certificate",
    "Detection",
    "Mode",
    "NotFound",
    "CommutativityVerdict",
    "NearRingCommutativity",
    "Verdict",
    "detect_strongly_commutative",
    "near_ring_commutativity",
    "DetectMode",
    "certify",
    "detect",
    "verify_certificate",
    "candidates",
    "definite_special_subgroups",
    "exhaustive_search",
    "is_definite_special_simple",
    "is_ideal",
    "proper_subfields",
    "LatticeMap",
    "SymbolicOperand",
    "verify_s_homomorphism",
    "BINDINGS",
    "Direction",
    "Property",
    "PropertyBinding",
    "binding",
    "Conjecture",
    "Family",
    "MemberResult",
    "SweepReport",
    "family_members",
    "sweep",
    "sweep_member",
]
