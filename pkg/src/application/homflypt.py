"""
HOMFLYPT polynomial of braid closures, normalized by

    v^-1 P(L+) - v P(L-) = z P(L0),    P(unknot) = 1.

Two engines share this module's Markov simplification and the memo cache:
the skein-recursion reference engine below and the Hecke-algebra trace
engine in hecke.py.
"""
import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from src.domain.braid_word import BraidWord, canonical_key, cyclic_reduce, destabilize_syntactic
from src.domain.exceptions import MFWViolation, SizeLimitExceeded
from src.domain.laurent import LaurentPoly2, v_degrees

logger = logging.getLogger(__name__)

REFERENCE_ENGINE_VERSION = "skein-1"

# (v^-1 - v) / z, the factor contributed by a split unknotted component
DELTA = LaurentPoly2({(-1, -1): 1, (1, -1): -1})


def delta_power(k: int) -> LaurentPoly2:
    return DELTA ** k


class NodeStatus(str, Enum):
    PENDING = "pending"
    RESOLVED = "resolved"


class SkeinNode:
    """A memo entry: canonical key, resolution status and polynomial once known."""
    __slots__ = ("key", "status", "polynomial")

    def __init__(self, key: tuple):
        self.key = key
        self.status = NodeStatus.PENDING
        self.polynomial: Optional[LaurentPoly2] = None

    def resolve(self, polynomial: LaurentPoly2) -> None:
        if self.status is NodeStatus.RESOLVED and self.polynomial != polynomial:
            raise MFWViolation(f"memo entry {self.key} resolved twice with different polynomials")
        self.status = NodeStatus.RESOLVED
        self.polynomial = polynomial


def split_simplify(word: BraidWord) -> Tuple[int, List[BraidWord]]:
    """
    Applies the polynomial-preserving simplifications: cyclic reduction,
    destabilization of either sign, and splitting at an unused generator.

    Returns:
        (k, pieces) with P(word) = delta^k * product of P(piece). Every piece
        uses all of its generators and has at least two strands, or is the
        1-strand empty word.
    """
    delta_exp = 0
    pending = [word]
    done: List[BraidWord] = []
    while pending:
        w = cyclic_reduce(pending.pop())
        if w.strands == 1:
            continue
        destab = destabilize_syntactic(w, 1) or destabilize_syntactic(w, -1)
        if destab is not None:
            pending.append(destab)
            continue
        used = {i for i, _ in w.letters}
        missing = next((i for i in range(1, w.strands) if i not in used), None)
        if missing is None:
            done.append(w)
            continue
        # sigma_missing absent: split union of the strands below and above it
        lower = BraidWord(missing, [l for l in w.letters if l[0] < missing])
        upper = BraidWord(w.strands - missing, [(i - missing, e) for i, e in w.letters if i > missing])
        delta_exp += 1
        pending.extend([lower, upper])
    return delta_exp, done


def check_size(word: BraidWord, max_strands: int, max_letters: int) -> None:
    if word.strands > max_strands:
        raise SizeLimitExceeded("strands", word.strands, max_strands)
    if len(word.letters) > max_letters:
        raise SizeLimitExceeded("letters", len(word.letters), max_letters)


def check_mfw(word: BraidWord, p: LaurentPoly2) -> None:
    """
    Asserts c - b + 1 <= d_- <= d_+ <= c + b - 1 for the word's own c and b.

    Raises:
        MFWViolation: If the polynomial breaks the inequality.
    """
    c, b = word.exponent_sum(), word.strands
    d_minus, d_plus = v_degrees(p)
    if not (c - b + 1 <= d_minus <= d_plus <= c + b - 1):
        raise MFWViolation(
            f"MFW inequality violated for {word}: c={c}, b={b}, d-={d_minus}, d+={d_plus}")


def first_ascending_letter(word: BraidWord) -> Optional[int]:
    """
    Walks the closure component by component, each from its lowest bottom
    position, and returns the index of the first letter met as an
    under-crossing before it was met as an over-crossing. None means the
    diagram is descending, hence an unlink.
    """
    perm = word.closure_permutation()
    met = [False] * len(word.letters)
    for cycle in perm.cycles:
        start = min(cycle)
        pos = start
        while True:
            for idx, (i, e) in enumerate(word.letters):
                if pos == i - 1:
                    over = e > 0
                    pos = i
                elif pos == i:
                    over = e < 0
                    pos = i - 1
                else:
                    continue
                if not met[idx]:
                    if not over:
                        return idx
                    met[idx] = True
            if pos == start:
                break
    return None


class ReferenceEngine:
    """
    Memoized skein recursion. At each step the first letter that spoils the
    descending property is switched (same traversal, one fewer bad letter) and
    smoothed (one fewer letter), so the recursion terminates on descending
    diagrams, whose closure is an unlink. Simplification never reorders the
    letters of a word it keeps at full length, so the traversal survives it.
    """
    version = REFERENCE_ENGINE_VERSION

    def __init__(self, memo: Dict[tuple, SkeinNode] = None):
        self.memo: Dict[tuple, SkeinNode] = memo if memo is not None else {}

    def polynomial(self, word: BraidWord) -> LaurentPoly2:
        k, pieces = split_simplify(word)
        result = delta_power(k)
        for piece in pieces:
            result = result * self._irreducible(piece)
        return result

    def _irreducible(self, word: BraidWord) -> LaurentPoly2:
        key = canonical_key(word)
        node = self.memo.get(key)
        if node is not None:
            if node.status is NodeStatus.PENDING:
                # a rotation of a word still on the stack; resolving it directly keeps
                # (letters, ascending letters) decreasing on every call
                return self._resolve(word)
            return node.polynomial
        node = SkeinNode(key)
        self.memo[key] = node
        node.resolve(self._resolve(word))
        return node.polynomial

    def _resolve(self, word: BraidWord) -> LaurentPoly2:
        idx = first_ascending_letter(word)
        if idx is None:
            return delta_power(word.component_count() - 1)
        i, e = word.letters[idx]
        switched = word.with_letters(word.letters[:idx] + ((i, -e),) + word.letters[idx + 1:])
        smoothed = word.with_letters(word.letters[:idx] + word.letters[idx + 1:])
        if e > 0:
            # P+ = v^2 P- + v z P0
            return self.polynomial(switched).shift(2, 0) + self.polynomial(smoothed).shift(1, 1)
        # P- = v^-2 P+ - v^-1 z P0
        return self.polynomial(switched).shift(-2, 0) - self.polynomial(smoothed).shift(-1, 1)
