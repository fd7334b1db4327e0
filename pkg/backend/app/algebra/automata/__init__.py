"""
Near rings of the a*b = a family, N-groups, freeness of alphabets and the
semiautomata and automata built over S-definite special near rings.
"""

from .automaton import (
    Automaton,
    NearDefiniteAutomaton,
    SemiAutomaton,
    add_mod_semiautomaton,
    build_automaton,
    build_near_definite_automaton,
    build_semiautomaton,
    input_projection,
    tuple_alphabet_automaton,
)
from .freeness import FreenessVerdict, freeness_check, is_collision, normalise_alphabet
from .near_ring import NearRingZn, build_near_ring_zn, check_n_group

__all__ = [
    "Automaton",
    "NearDefiniteAutomaton",
    "SemiAutomaton",
    "add_mod_semiautomaton",
    "build_automaton",
    "build_near_definite_automaton",
    "build_semiautomaton",
    "input_projection",
    "tuple_alphabet_automaton",
    "FreenessVerdict",
    "freeness_check",
    "is_collision",
    "normalise_alphabet",
    "NearRingZn",
    "build_near_ring_zn",
    "check_n_group",
]
