"""
Band generators of the 3-strand braid group:
a1 = s1, a2 = s2, a3 = s2 s1 s2^-1, with alpha = a1 a3 = a2 a1 = a3 a2.

Text form: one signed digit per letter, "-2 1 1 2 2 3" is a2^-1 a1^2 a2^2 a3.
"""
from typing import Iterable, List, Tuple

from .braid_word import BraidWord, Letter
from .exceptions import BandWordError

BandLetter = Tuple[int, int]

_ARTIN = {
    (1, 1): ((1, 1),),
    (1, -1): ((1, -1),),
    (2, 1): ((2, 1),),
    (2, -1): ((2, -1),),
    (3, 1): ((2, 1), (1, 1), (2, -1)),
    (3, -1): ((2, 1), (1, -1), (2, -1)),
}


class BandWord:
    """An immutable word in a1, a2, a3 and their inverses."""
    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[BandLetter] = ()):
        """
        Args:
            letters: Sequence of (band index in {1, 2, 3}, sign +1/-1).

        Raises:
            BandWordError: On an invalid index or sign.
        """
        checked = []
        for i, e in letters:
            if i not in (1, 2, 3) or e not in (1, -1):
                raise BandWordError(f"invalid band letter {(i, e)!r}")
            checked.append((i, e))
        self.letters: Tuple[BandLetter, ...] = tuple(checked)

    @classmethod
    def parse(cls, text: str) -> 'BandWord':
        letters = []
        for token in text.replace(",", " ").split():
            try:
                value = int(token)
            except ValueError:
                raise BandWordError(f"invalid band token {token!r}") from None
            letters.append((abs(value), 1 if value > 0 else -1))
        return cls(letters)

    @classmethod
    def runs(cls, *runs: Tuple[int, int]) -> 'BandWord':
        """Builds a word from (signed band index, repeat count) runs."""
        letters: List[BandLetter] = []
        for signed, count in runs:
            letters.extend([(abs(signed), 1 if signed > 0 else -1)] * count)
        return cls(letters)

    def to_text(self) -> str:
        return " ".join(str(i * e) for i, e in self.letters)

    def rotate_subscripts(self, k: int) -> 'BandWord':
        """Applies i -> i + k mod 3 to every subscript (conjugation by the half twist)."""
        return BandWord(((i - 1 + k) % 3 + 1, e) for i, e in self.letters)

    def inverse(self) -> 'BandWord':
        return BandWord((i, -e) for i, e in reversed(self.letters))

    def signed_length(self) -> int:
        return sum(e for _, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BandWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return self.to_text() or "<empty>"

    def __repr__(self) -> str:
        return f"BandWord({self.to_text()!r})"


def band_to_artin(bw: BandWord) -> BraidWord:
    """Substitutes each band letter by its Artin spelling on 3 strands."""
    letters: List[Letter] = []
    for letter in bw.letters:
        letters.extend(_ARTIN[letter])
    return BraidWord(3, letters)
