"""
Bounded check that a finite alphabet generates a free commutative semigroup
under addition: no two different multisets of letters have the same sum.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import structlog

from app.algebra.errors import InvalidAlphabet
from app.config import get_settings

logger = structlog.get_logger()

Letter = Tuple[int, ...]


@dataclass(frozen=True)
class FreenessVerdict:
    """
    ``free`` is a bounded verdict: no collision among multisets of at most
    ``bound`` letters. A collision is two multisets ``left`` and ``right``
    (letter counts) with the same ``total``.
    """

    alphabet: Tuple[Letter, ...]
    free: bool
    bound: int
    left: Optional[Tuple[int, ...]] = None
    right: Optional[Tuple[int, ...]] = None
    total: Optional[Letter] = None

    def describe(self) -> str:
        if self.free:
            return f"no collision among sums of at most {self.bound} letters"
        return f"{_sum_text(self.alphabet, self.left)} = {_sum_text(self.alphabet, self.right)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alphabet": [_letter_text(a) for a in self.alphabet],
            "free": self.free,
            "bounded": True,
            "bound": self.bound,
            "witness": None if self.free else self.describe(),
            "total": None if self.total is None else _letter_text(self.total),
        }


def _letter_text(letter: Letter) -> str:
    return str(letter[0]) if len(letter) == 1 else "(" + ",".join(str(x) for x in letter) + ")"


def _sum_text(alphabet: Sequence[Letter], counts: Tuple[int, ...]) -> str:
    terms = []
    for letter, count in zip(alphabet, counts):
        if count:
            text = _letter_text(letter)
            terms.append(text if count == 1 else f"{count}*{text}")
    return " + ".join(terms)


def normalise_alphabet(alphabet: Sequence[Union[int, Sequence[int]]]) -> Tuple[Letter, ...]:
    """
    Letters as integer tuples of one common length.

    Raises:
        InvalidAlphabet: for an empty alphabet, mixed lengths, negative
            components or the zero letter.
    """
    letters = tuple((int(a),) if isinstance(a, int) else tuple(int(x) for x in a) for a in alphabet)
    if not letters:
        raise InvalidAlphabet("the alphabet is empty")
    if len({len(a) for a in letters}) != 1:
        raise InvalidAlphabet("letters have different lengths")
    for a in letters:
        if any(x < 0 for x in a):
            raise InvalidAlphabet(f"letter {_letter_text(a)} has a negative component")
        if not any(a):
            raise InvalidAlphabet("the zero letter generates no free semigroup")
    if len(set(letters)) != len(letters):
        raise InvalidAlphabet("letters repeat")
    return letters


def freeness_check(alphabet: Sequence[Union[int, Sequence[int]]],
                   bound: Optional[int] = None) -> FreenessVerdict:
    """
    Search multisets of 1..bound letters, smallest first, for two with the
    same sum.

    Args:
        alphabet: positive integers or nonnegative integer tuples
        bound: largest multiset size (default ``freeness_bound``)
    """
    letters = normalise_alphabet(alphabet)
    bound = get_settings().freeness_bound if bound is None else bound
    k = len(letters)
    seen: Dict[Letter, Tuple[int, ...]] = {}
    for size in range(1, bound + 1):
        for picks in combinations_with_replacement(range(k), size):
            counts = tuple(picks.count(i) for i in range(k))
            total = tuple(sum(letters[i][c] for i in picks) for c in range(len(letters[0])))
            earlier = seen.get(total)
            if earlier is not None and earlier != counts:
                verdict = FreenessVerdict(letters, False, bound, earlier, counts, total)
                logger.debug("freeness_collision", alphabet=verdict.to_dict()["alphabet"],
                             witness=verdict.describe())
                return verdict
            seen.setdefault(total, counts)
    return FreenessVerdict(letters, True, bound)


def is_collision(alphabet: Sequence[Union[int, Sequence[int]]], left: Sequence[int],
                 right: Sequence[int]) -> bool:
    """Whether two different letter-count vectors have the same sum."""
    letters = normalise_alphabet(alphabet)
    if tuple(left) == tuple(right):
        return False
    width = len(letters[0])

    def total(counts):
        return tuple(sum(n * a[c] for n, a in zip(counts, letters)) for c in range(width))

    return total(left) == total(right)
