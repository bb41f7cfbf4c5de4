"""
Braid words in Artin generators and their Markov-move mechanics.

Text form: letter 'a' is sigma_1, 'b' is sigma_2, ... up to 'y' (sigma_25);
an uppercase letter is the inverse generator. Words with larger generators use
the integer-list form, where sigma_i^e is written as e*i.
"""
from enum import Enum
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .exceptions import BraidWordError

Letter = Tuple[int, int]

MAX_TEXT_GENERATOR = 25


def _letter_to_char(letter: Letter) -> str:
    i, e = letter
    if i > MAX_TEXT_GENERATOR:
        raise BraidWordError(f"generator {i} has no letter; use the integer-list form")
    ch = chr(ord('a') + i - 1)
    return ch if e > 0 else ch.upper()


def _letter_key(letter: Letter) -> Tuple[int, int]:
    # orders a < A < b < B < ...
    return letter[0], -letter[1]


class BraidWord:
    """
    An immutable word in the Artin generators of the braid group on a fixed
    number of strands.
    """
    __slots__ = ("strands", "letters", "_hash")

    def __init__(self, strands: int, letters: Iterable[Letter] = ()):
        """
        Initializes a BraidWord.

        Args:
            strands: Number of strands n (at least 1).
            letters: Sequence of (i, e) with 1 <= i <= n-1 and e in {+1, -1}.

        Raises:
            BraidWordError: If the strand count or a letter is invalid.
        """
        if not isinstance(strands, int) or strands < 1:
            raise BraidWordError(f"strand count must be a positive integer, got {strands!r}")
        checked = []
        for i, e in letters:
            if e not in (1, -1):
                raise BraidWordError(f"letter sign must be +1 or -1, got {e!r}")
            if not 1 <= i <= strands - 1:
                raise BraidWordError(f"generator index {i} out of range for {strands} strands")
            checked.append((int(i), int(e)))
        self.strands: int = strands
        self.letters: Tuple[Letter, ...] = tuple(checked)
        self._hash = None

    # --- construction and printing ---

    @classmethod
    def parse(cls, text: str, strands: Optional[int] = None) -> 'BraidWord':
        """
        Parses the letter form, e.g. "aaacBAAcB".

        Args:
            text: ASCII letters only.
            strands: Strand count; defaults to 1 + the largest generator index.

        Raises:
            BraidWordError: On a non-letter character or an index that does not fit.
        """
        letters: List[Letter] = []
        for ch in text.strip():
            if not ('a' <= ch.lower() <= 'y') or not ch.isascii():
                raise BraidWordError(f"invalid braid letter {ch!r} in {text!r}")
            letters.append((ord(ch.lower()) - ord('a') + 1, 1 if ch.islower() else -1))
        if strands is None:
            strands = 1 + max((i for i, _ in letters), default=0)
        return cls(strands, letters)

    @classmethod
    def from_int_list(cls, values: Sequence[int], strands: Optional[int] = None) -> 'BraidWord':
        """Builds a word from signed generator indices, e.g. [1, -2] for "aB"."""
        if any(v == 0 for v in values):
            raise BraidWordError("0 is not a generator")
        letters = [(abs(v), 1 if v > 0 else -1) for v in values]
        if strands is None:
            strands = 1 + max((i for i, _ in letters), default=0)
        return cls(strands, letters)

    def to_text(self) -> str:
        """Inverse of parse() for words that fit the 25-letter alphabet."""
        return "".join(_letter_to_char(l) for l in self.letters)

    def to_int_list(self) -> List[int]:
        return [i * e for i, e in self.letters]

    def __str__(self) -> str:
        try:
            body = self.to_text()
        except BraidWordError:
            body = " ".join(str(v) for v in self.to_int_list())
        return f"{body or '<empty>'} ({self.strands} strands)"

    def __repr__(self) -> str:
        return f"BraidWord(strands={self.strands}, letters={list(self.letters)!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self.letters == other.letters

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.strands, self.letters))
        return self._hash

    def __add__(self, other: 'BraidWord') -> 'BraidWord':
        """Concatenation on the larger of the two strand counts."""
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def with_letters(self, letters: Iterable[Letter]) -> 'BraidWord':
        return BraidWord(self.strands, letters)

    def shifted(self, offset: int, strands: int) -> 'BraidWord':
        """Moves every generator up by offset and embeds into a braid on `strands` strands."""
        return BraidWord(strands, [(i + offset, e) for i, e in self.letters])

    # --- combinatorics ---

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def closure_permutation(self) -> 'ClosurePermutation':
        return ClosurePermutation.of(self)

    def component_count(self) -> int:
        return len(self.closure_permutation().cycles)

    def generator_count(self, i: int) -> int:
        return sum(1 for j, _ in self.letters if j == i)


class ClosurePermutation:
    """
    Permutation of strand positions read bottom to top; position k at the
    bottom ends at image[k] at the top (0-based).
    """
    __slots__ = ("image", "cycles")

    def __init__(self, image: Sequence[int]):
        self.image: Tuple[int, ...] = tuple(image)
        seen = [False] * len(self.image)
        cycles = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = self.image[k]
            cycles.append(tuple(cycle))
        self.cycles: Tuple[Tuple[int, ...], ...] = tuple(cycles)

    @classmethod
    def of(cls, word: BraidWord) -> 'ClosurePermutation':
        # occupant[p] = which bottom position is currently at position p
        occupant = list(range(word.strands))
        for i, _ in word.letters:
            occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
        image = [0] * word.strands
        for top_pos, bottom_pos in enumerate(occupant):
            image[bottom_pos] = top_pos
        return cls(image)

    def component_of(self) -> List[int]:
        """Maps each strand position to the index of its cycle."""
        owner = [0] * len(self.image)
        for idx, cycle in enumerate(self.cycles):
            for k in cycle:
                owner[k] = idx
        return owner

    def __repr__(self) -> str:
        return f"ClosurePermutation({list(self.image)!r})"


class MoveKind(str, Enum):
    CONJUGATE = "conjugate"
    CYCLIC_SHIFT = "cyclic-shift"
    FREE_REDUCE = "free-reduce"
    BRAID_RELATION = "braid-relation"
    STABILIZE = "stabilize"
    DESTABILIZE = "destabilize"


# (delta c, delta b) per move; sign-dependent rows are keyed by (kind, sign)
_MOVE_EFFECTS = {
    (MoveKind.STABILIZE, 1): (1, 1),
    (MoveKind.DESTABILIZE, 1): (-1, -1),
    (MoveKind.STABILIZE, -1): (-1, 1),
    (MoveKind.DESTABILIZE, -1): (1, -1),
}


class MoveRecord:
    """
    One step of a Markov-move path: the move applied and the word it produced.
    Exchange moves are not represented.
    """
    __slots__ = ("kind", "params", "before", "word")

    def __init__(self, kind: MoveKind, params: Tuple, before: BraidWord, word: BraidWord):
        self.kind = kind
        self.params = params
        self.before = before
        self.word = word

    @property
    def sign(self) -> int:
        if self.kind in (MoveKind.STABILIZE, MoveKind.DESTABILIZE):
            return self.params[0]
        return 0

    def expected_delta(self) -> Tuple[int, int]:
        """(delta c, delta b) required by the move table."""
        return _MOVE_EFFECTS.get((self.kind, self.sign), (0, 0))

    def observed_delta(self) -> Tuple[int, int]:
        return (self.word.exponent_sum() - self.before.exponent_sum(),
                self.word.strands - self.before.strands)

    def is_consistent(self) -> bool:
        return self.expected_delta() == self.observed_delta()

    def __repr__(self) -> str:
        return f"MoveRecord({self.kind.value}, {self.params}, -> {self.word})"


# --- free functions mirroring the operation list ---

def parse_word(text: str, strands: Optional[int] = None) -> BraidWord:
    return BraidWord.parse(text, strands)


def exponent_sum(w: BraidWord) -> int:
    return w.exponent_sum()


def component_count(w: BraidWord) -> int:
    return w.component_count()


def conjugate(w: BraidWord, i: int, e: int) -> BraidWord:
    """Returns g w g^-1 with g = sigma_i^e."""
    if not 1 <= i <= w.strands - 1:
        raise BraidWordError(f"generator index {i} out of range for {w.strands} strands")
    return w.with_letters(((i, e),) + w.letters + ((i, -e),))


def cyclic_shift(w: BraidWord, k: int) -> BraidWord:
    """Rotates the word left by k letters."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return w.with_letters(w.letters[k:] + w.letters[:k])


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancels adjacent inverse pairs until none remain."""
    stack: List[Letter] = []
    for i, e in w.letters:
        if stack and stack[-1] == (i, -e):
            stack.pop()
        else:
            stack.append((i, e))
    return w.with_letters(stack)


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Free reduction followed by cancelling inverse pairs across the ends."""
    letters = list(free_reduce(w).letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == (letters[hi - 1][0], -letters[hi - 1][1]):
        lo += 1
        hi -= 1
    return w.with_letters(letters[lo:hi])


def mirror(w: BraidWord) -> BraidWord:
    return w.with_letters((i, -e) for i, e in w.letters)


def reverse(w: BraidWord) -> BraidWord:
    return w.with_letters(reversed(w.letters))


def canonical_key(w: BraidWord) -> Tuple[int, Tuple[Letter, ...]]:
    """
    Lexicographically least rotation of the cyclically reduced word, together
    with the strand count. Conjugate words that differ by rotation share a key.
    """
    letters = cyclic_reduce(w).letters
    if not letters:
        return w.strands, ()
    keyed = [_letter_key(l) for l in letters]
    n = len(keyed)
    best = 0
    for r in range(1, n):
        if keyed[r:] + keyed[:r] < keyed[best:] + keyed[:best]:
            best = r
    return w.strands, letters[best:] + letters[:best]


def canonical_form(w: BraidWord) -> BraidWord:
    strands, letters = canonical_key(w)
    return BraidWord(strands, letters)


def stabilize(w: BraidWord, e: int) -> BraidWord:
    """Adds a strand and appends sigma_n^e."""
    return BraidWord(w.strands + 1, w.letters + ((w.strands, e),))


def destabilize_syntactic(w: BraidWord, e: int) -> Optional[BraidWord]:
    """
    Removes the top strand when the cyclically reduced word contains the top
    generator exactly once, with sign e.

    Returns:
        The (n-1)-strand word, or None when the move does not apply.
    """
    if w.strands < 2:
        return None
    reduced = cyclic_reduce(w)
    top = w.strands - 1
    positions = [k for k, (i, _) in enumerate(reduced.letters) if i == top]
    if len(positions) != 1 or reduced.letters[positions[0]][1] != e:
        return None
    k = positions[0]
    rest = reduced.letters[k + 1:] + reduced.letters[:k]
    return BraidWord(w.strands - 1, rest)


def skein_triple(w: BraidWord, position: int) -> Tuple[BraidWord, BraidWord, BraidWord]:
    """
    Plus, minus and zero resolutions at a letter.

    Raises:
        BraidWordError: If position does not index a letter.
    """
    if not 0 <= position < len(w.letters):
        raise BraidWordError(f"position {position} out of range for a word of length {len(w.letters)}")
    i, _ = w.letters[position]
    before, after = w.letters[:position], w.letters[position + 1:]
    return (w.with_letters(before + ((i, 1),) + after),
            w.with_letters(before + ((i, -1),) + after),
            w.with_letters(before + after))


def linking_matrix(w: BraidWord) -> List[List[int]]:
    """
    Pairwise linking numbers of the closure components (diagonal entries are 0).
    Each crossing between two different components contributes half its sign.
    """
    perm = w.closure_permutation()
    owner = perm.component_of()
    m = len(perm.cycles)
    twice = [[0] * m for _ in range(m)]
    occupant = list(range(w.strands))
    for i, e in w.letters:
        a, b = owner[occupant[i - 1]], owner[occupant[i]]
        if a != b:
            twice[a][b] += e
            twice[b][a] += e
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    return [[v // 2 for v in row] for row in twice]


def cable_component_count(p: int, k: int) -> int:
    """Components of a (p, q)-cable of a knot with twist parameter k."""
    return gcd(p, k) if k else p
