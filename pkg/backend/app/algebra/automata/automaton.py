"""
Semiautomata and automata over near-ring alphabets.

A semiautomaton has a transition table mu: states x letters -> states and
runs words letter by letter from the left. An automaton adds an output table
lambda: states x letters -> outputs.

The near definite special construction is only offered over a near ring
that is an S-definite special near ring; finite (Z_n, +, a*b=a) never is.
"""
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple, Union

import numpy as np
import structlog

from app.algebra.automata.freeness import FreenessVerdict, freeness_check
from app.algebra.automata.near_ring import NearRingZn
from app.algebra.detect import Certificate, DetectMode, Property, SymbolicStructure, detect
from app.algebra.errors import ConstructionGate, MalformedTable, SizeGuard, TableShape, UnknownLetter, Unsupported
from app.algebra.finite import FiniteRingTable, jsonable
from app.config import get_settings

logger = structlog.get_logger()

State = Hashable
Letter = Hashable


def _table(rows: Sequence[Sequence[int]], height: int, width: int, limit: int, what: str) -> np.ndarray:
    if len(rows) != height:
        raise TableShape(f"{what} has {len(rows)} rows, expected {height}")
    for i, row in enumerate(rows):
        if len(row) != width:
            raise TableShape(f"{what} row {i} has {len(row)} entries, expected {width}")
    arr = np.array(rows, dtype=np.int64).reshape(height, width)
    if arr.size and (arr.min() < 0 or arr.max() >= limit):
        raise MalformedTable(f"{what} entries must lie in 0..{limit - 1}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SemiAutomaton:
    """States, alphabet and a total transition table of state ids."""

    states: Tuple[State, ...]
    alphabet: Tuple[Letter, ...]
    transition: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "transition", _table(
            np.asarray(self.transition).tolist(), len(self.states), len(self.alphabet),
            len(self.states), "transition"))

    def letter_index(self, letter: Letter) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise UnknownLetter(f"{letter!r} is not in the alphabet") from None

    def state_index(self, state: State) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownLetter(f"{state!r} is not a state") from None

    def step(self, state: State, letter: Letter) -> State:
        return self.states[self.transition[self.state_index(state), self.letter_index(letter)]]

    def run(self, word: Sequence[Letter], start: Optional[State] = None) -> List[State]:
        """
        The state trace: ``start`` followed by one state per letter.

        Raises:
            UnknownLetter: for a letter outside the alphabet.
        """
        z = 0 if start is None else self.state_index(start)
        letters = [self.letter_index(p) for p in word]
        trace = [self.states[z]]
        for p in letters:
            z = int(self.transition[z, p])
            trace.append(self.states[z])
        return trace

    def letters_at(self, indices: Sequence[int]) -> List[Letter]:
        """Letters for a word given by alphabet positions."""
        out = []
        for i in indices:
            if not 0 <= i < len(self.alphabet):
                raise UnknownLetter(f"letter index {i} outside 0..{len(self.alphabet) - 1}")
            out.append(self.alphabet[i])
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "states": jsonable(list(self.states)),
            "alphabet": jsonable(list(self.alphabet)),
            "transition": self.transition.tolist(),
        }


@dataclass(frozen=True, eq=False)
class Automaton:
    """A semiautomaton with an output table of output-alphabet ids."""

    semi: SemiAutomaton
    outputs: Tuple[Any, ...]
    output: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "output", _table(
            np.asarray(self.output).tolist(), len(self.semi.states), len(self.semi.alphabet),
            len(self.outputs), "output"))

    def run_io(self, word: Sequence[Letter], start: Optional[State] = None) -> Tuple[List[State], List[Any]]:
        """
        State trace and output word; the output has one symbol per letter.

        Raises:
            UnknownLetter: for a letter outside the alphabet.
        """
        trace = self.semi.run(word, start)
        out = []
        for state, letter in zip(trace, word):
            z, p = self.semi.state_index(state), self.semi.letter_index(letter)
            out.append(self.outputs[self.output[z, p]])
        return trace, out

    def to_dict(self) -> Dict[str, Any]:
        data = self.semi.to_dict()
        data.update(outputs=jsonable(list(self.outputs)), output=self.output.tolist())
        return data


def _as_tuple(x: Union[int, Sequence[int]]) -> Tuple[int, ...]:
    return (int(x),) if isinstance(x, (int, np.integer)) else tuple(int(v) for v in x)


def add_mod_semiautomaton(modulus: int, alphabet: Sequence[Union[int, Sequence[int]]],
                          width: Optional[int] = None) -> SemiAutomaton:
    """
    States Z_m (integer letters) or Z_m^k (k-tuple letters); a letter moves
    the state by adding it componentwise mod m.

    Raises:
        SizeGuard: if m^k exceeds max_table_order.
        Unsupported: for letters of mixed widths.
    """
    letters = [_as_tuple(p) for p in alphabet]
    k = width or (len(letters[0]) if letters else 1)
    if any(len(p) != k for p in letters):
        raise Unsupported(f"every letter must have {k} components")
    if modulus < 1:
        raise SizeGuard("the modulus must be positive")
    count = modulus ** k
    if count > get_settings().max_table_order:
        raise SizeGuard(f"Z_{modulus}^{k} has {count} states, above max_table_order")
    states = list(product(range(modulus), repeat=k))
    index = {s: i for i, s in enumerate(states)}
    table = [[index[tuple((a + b) % modulus for a, b in zip(s, p))] for p in letters] for s in states]
    scalar = k == 1 and all(isinstance(p, (int, np.integer)) for p in alphabet)
    if scalar:
        return SemiAutomaton(tuple(s[0] for s in states), tuple(int(p) for p in alphabet), table)
    return SemiAutomaton(tuple(states), tuple(letters), table)


def build_semiautomaton(states: Sequence[State], alphabet: Sequence[Letter], rule: str = "table",
                        transition: Optional[Sequence[Sequence[int]]] = None,
                        modulus: Optional[int] = None) -> SemiAutomaton:
    """
    ``rule="table"`` takes an explicit transition table of state ids;
    ``rule="add-mod"`` builds the additive rule over Z_modulus (``states``
    is then ignored).

    Raises:
        Unsupported: for an unknown rule or a missing table.
    """
    if rule == "add-mod":
        if modulus is None:
            raise Unsupported("add-mod needs a modulus")
        return add_mod_semiautomaton(modulus, alphabet)
    if rule != "table":
        raise Unsupported(f"unknown rule {rule!r}")
    if transition is None:
        raise Unsupported("the table rule needs a transition table")
    return SemiAutomaton(tuple(states), tuple(alphabet), transition)


def build_automaton(semi: SemiAutomaton, outputs: Sequence[Any],
                    output: Sequence[Sequence[int]]) -> Automaton:
    return Automaton(semi, tuple(outputs), output)


def input_projection(semi: SemiAutomaton) -> Automaton:
    """The automaton whose output symbol is the letter just read."""
    n, k = len(semi.states), len(semi.alphabet)
    return Automaton(semi, semi.alphabet, [[p for p in range(k)] for _ in range(n)])


@dataclass(frozen=True, eq=False)
class NearDefiniteAutomaton:
    """An automaton together with the evidence that allowed its construction."""

    automaton: Automaton
    certificate: Certificate
    input_freeness: FreenessVerdict
    output_freeness: Optional[FreenessVerdict] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "automaton": self.automaton.to_dict(),
            "certificate": self.certificate.to_dict(),
            "input_freeness": self.input_freeness.to_dict(),
            "output_freeness": None if self.output_freeness is None else self.output_freeness.to_dict(),
        }


def _gate(near_ring: Union[NearRingZn, FiniteRingTable, SymbolicStructure]) -> Certificate:
    if isinstance(near_ring, SymbolicStructure):
        result = detect(near_ring, Property.S_DEFINITE_SPECIAL_NEAR_RING, mode=DetectMode.CATALOG)
    else:
        table = near_ring.table if isinstance(near_ring, NearRingZn) else near_ring
        result = detect(table, Property.S_DEFINITE_SPECIAL_NEAR_RING)
    if not isinstance(result, Certificate):
        raise ConstructionGate(
            f"{result.structure} is not an S-definite special near ring; no near definite automaton exists"
        )
    return result


def build_near_definite_automaton(near_ring: Union[NearRingZn, FiniteRingTable, SymbolicStructure],
                                  automaton: Automaton,
                                  output_alphabet: Optional[Sequence[Union[int, Sequence[int]]]] = None,
                                  bound: Optional[int] = None) -> NearDefiniteAutomaton:
    """
    Attach ``automaton`` to ``near_ring`` as an S-near definite special
    automaton, with freeness reports for its alphabets.

    Raises:
        ConstructionGate: if the near ring is not an S-definite special near ring.
        InvalidAlphabet: if an alphabet cannot generate a free semigroup.
    """
    certificate = _gate(near_ring)
    inputs = freeness_check([_as_tuple(p) for p in automaton.semi.alphabet], bound)
    outputs = None if output_alphabet is None else freeness_check(output_alphabet, bound)
    logger.info("near_definite_automaton_built", near_ring=certificate.structure,
                input_free=inputs.free, output_free=None if outputs is None else outputs.free)
    return NearDefiniteAutomaton(automaton, certificate, inputs, outputs)


def tuple_alphabet_automaton(inputs: Sequence[Sequence[int]] = ((4, 7, 5), (1, 1, 1)),
                             outputs: Sequence[Sequence[int]] = ((1, 2, 3),),
                             modulus: int = 2) -> NearDefiniteAutomaton:
    """
    Automaton over (Z, +, a*b=a)^3 with tuple letters acting on Z_m^3 by
    addition mod m; every transition emits the first output letter.
    """
    semi = add_mod_semiautomaton(modulus, inputs)
    automaton = Automaton(semi, tuple(_as_tuple(s) for s in outputs),
                          [[0] * len(semi.alphabet) for _ in semi.states])
    return build_near_definite_automaton(SymbolicStructure.Z_NEAR_RING, automaton, outputs)
