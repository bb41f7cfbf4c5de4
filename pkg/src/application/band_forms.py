"""
Shortest band-word representatives of closed 3-braids and recognition of the
four families

    A_x         = a3^-1 a2^-1 a1^x                (x >= 2 even)
    B_{x,y}     = a3^-1 a3^-1 a1^x a2^y           (x, y >= 3 odd)
    C_{x,y,z}   = a2^-1 a1^x a2^y a3^z            (x + z odd, y even, all >= 1)
    D_{x,y,z,w} = a2^-1 a1^x a2^y a3^z a1^w       (x, y >= 2, z, w >= 1)

Words are compared up to cyclic permutation and the subscript rotation
i -> i + 1 mod 3.
"""
import logging
from collections import deque
from enum import Enum
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from src.domain.band_word import BandLetter, BandWord
from src.domain.exceptions import BandWordError

logger = logging.getLogger(__name__)

Window = Tuple[BandLetter, BandLetter]

_ALPHA_SPELLINGS: Tuple[Tuple[int, int], ...] = ((1, 3), (2, 1), (3, 2))


def _relation_classes() -> Dict[Window, Set[Window]]:
    """Two-letter windows grouped by the group element they spell."""
    equations: List[Tuple[Window, Window]] = []
    for (x, y), (z, w) in permutations(_ALPHA_SPELLINGS, 2):
        equations.append((((x, 1), (y, 1)), ((z, 1), (w, 1))))
        equations.append((((y, -1), (x, -1)), ((w, -1), (z, -1))))
        # XY = ZW gives Z^-1 X = W Y^-1 and Y W^-1 = X^-1 Z
        equations.append((((z, -1), (x, 1)), ((w, 1), (y, -1))))
        equations.append((((y, 1), (w, -1)), ((x, -1), (z, 1))))
    classes: Dict[Window, Set[Window]] = {}
    for left, right in equations:
        merged = classes.get(left, {left}) | classes.get(right, {right})
        for win in merged:
            classes[win] = merged
    return classes


_CLASSES = _relation_classes()


class BandForm(str, Enum):
    ALPHA_POWER_P = "alpha^k P"
    N_ALPHA_BAR_POWER = "N alphabar^k"
    N_P = "N P"


class ShortestForm:
    """Result of shortest_band_form."""

    def __init__(self, length: int, representative: BandWord, form: Optional[BandForm], k: int,
                 complete: bool, states_explored: int):
        self.length = length
        self.representative = representative
        self.form = form
        self.k = k
        self.complete = complete
        self.states_explored = states_explored

    def __repr__(self) -> str:
        form = self.form.value if self.form else None
        return (f"ShortestForm(length={self.length}, representative={self.representative.to_text()!r}, "
                f"form={form!r}, k={self.k}, complete={self.complete})")


def _cyclic_key(letters: Tuple[BandLetter, ...]) -> Tuple[BandLetter, ...]:
    if not letters:
        return letters
    return min(letters[r:] + letters[:r] for r in range(len(letters)))


def _cancel(letters: Tuple[BandLetter, ...]) -> Tuple[BandLetter, ...]:
    """Free and cyclic cancellation of inverse pairs."""
    stack: List[BandLetter] = []
    for i, e in letters:
        if stack and stack[-1] == (i, -e):
            stack.pop()
        else:
            stack.append((i, e))
    while len(stack) >= 2 and stack[0] == (stack[-1][0], -stack[-1][1]):
        stack = stack[1:-1]
    return tuple(stack)


def _neighbours(letters: Tuple[BandLetter, ...]):
    n = len(letters)
    if n < 2:
        return
    for r in range(n):
        rotated = letters[r:] + letters[:r]
        window = (rotated[0], rotated[1])
        for other in _CLASSES.get(window, ()):
            if other != window:
                yield _cancel(other + rotated[2:])


def _alpha_prefix(letters: Sequence[BandLetter], sign: int) -> int:
    """Largest k such that the word starts with k spellings of alpha (or ends with alphabar^k)."""
    if sign > 0:
        k = 0
        while 2 * k + 1 < len(letters) and \
                (letters[2 * k][0], letters[2 * k + 1][0]) in _ALPHA_SPELLINGS and \
                letters[2 * k][1] == letters[2 * k + 1][1] == 1:
            k += 1
        return k
    reversed_inverse = [(i, -e) for i, e in reversed(letters)]
    # alphabar^k at the end reads, inverted and reversed, as alpha^k at the front
    return _alpha_prefix(reversed_inverse, 1)


def _non_decreasing(subscripts: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(subscripts, subscripts[1:]))


def _classify_linear(letters: Tuple[BandLetter, ...]) -> Optional[Tuple[BandForm, int]]:
    signs = {e for _, e in letters}
    if signs <= {1}:
        for k in range(_alpha_prefix(letters, 1), -1, -1):
            if _non_decreasing([i for i, _ in letters[2 * k:]]):
                return BandForm.ALPHA_POWER_P, k
        return None
    if signs == {-1}:
        for k in range(_alpha_prefix(letters, -1), -1, -1):
            head = letters[:len(letters) - 2 * k]
            if _non_decreasing([i for i, _ in reversed(head)]):
                return BandForm.N_ALPHA_BAR_POWER, k
        return None
    split = next(k for k, (_, e) in enumerate(letters) if e > 0)
    head, tail = letters[:split], letters[split:]
    if any(e < 0 for _, e in tail):
        return None
    if _non_decreasing([i for i, _ in reversed(head)]) and _non_decreasing([i for i, _ in tail]):
        return BandForm.N_P, 0
    return None


_FORM_RANK = {BandForm.ALPHA_POWER_P: 0, BandForm.N_ALPHA_BAR_POWER: 1, BandForm.N_P: 2}


def shortest_band_form(bw: BandWord, budget: int = 20_000) -> ShortestForm:
    """
    Breadth-first search over the conjugacy class using the band relations,
    cyclic permutation and cancellation. Each time a shorter word appears the
    search restarts from it; the final sweep covers the minimal length.

    Args:
        bw: Input word.
        budget: Total number of states the search may visit.

    Returns:
        A ShortestForm; `complete` is False when the budget ran out.
    """
    current = _cyclic_key(_cancel(bw.letters))
    explored = 0
    complete = True
    while True:
        visited = {current}
        frontier = deque([current])
        shorter = None
        while frontier and shorter is None:
            state = frontier.popleft()
            for nxt in _neighbours(state):
                key = _cyclic_key(nxt)
                if len(key) < len(current):
                    shorter = key
                    break
                if key in visited:
                    continue
                if explored + len(visited) >= budget:
                    complete = False
                    continue
                visited.add(key)
                frontier.append(key)
        explored += len(visited)
        if shorter is None:
            break
        current = shorter

    best: Optional[Tuple[int, int, str, BandWord, BandForm]] = None
    for state in visited:
        for r in range(max(len(state), 1)):
            rotated = state[r:] + state[:r]
            found = _classify_linear(rotated)
            if found is None:
                continue
            form, k = found
            word = BandWord(rotated)
            candidate = (_FORM_RANK[form], -k, word.to_text(), word, form)
            if best is None or candidate[:3] < best[:3]:
                best = candidate
    if best is None:
        logger.info("no normal form found among %d minimal states", len(visited))
        return ShortestForm(len(current), BandWord(current), None, 0, False, explored)
    return ShortestForm(len(current), best[3], best[4], -best[1], complete, explored)


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


_PATTERNS = {
    Family.A: ((3, -1), (2, -1), (1, 1)),
    Family.B: ((3, -1), (1, 1), (2, 1)),
    Family.C: ((2, -1), (1, 1), (2, 1), (3, 1)),
    Family.D: ((2, -1), (1, 1), (2, 1), (3, 1), (1, 1)),
}


def _family_valid(family: Family, params: Tuple[int, ...]) -> bool:
    if family is Family.A:
        (x,) = params
        return x >= 2 and x % 2 == 0
    if family is Family.B:
        x, y = params
        return x >= 3 and y >= 3 and x % 2 == 1 and y % 2 == 1
    if family is Family.C:
        x, y, z = params
        return min(x, y, z) >= 1 and (x + z) % 2 == 1 and y % 2 == 0
    x, y, z, w = params
    return x >= 2 and y >= 2 and z >= 1 and w >= 1


def _runs(letters: Sequence[BandLetter]) -> List[Tuple[BandLetter, int]]:
    runs: List[Tuple[BandLetter, int]] = []
    for letter in letters:
        if runs and runs[-1][0] == letter:
            runs[-1] = (letter, runs[-1][1] + 1)
        else:
            runs.append((letter, 1))
    return runs


def _match(family: Family, letters: Sequence[BandLetter]) -> Optional[Tuple[int, ...]]:
    runs = _runs(letters)
    pattern = _PATTERNS[family]
    if family is Family.B:
        # the leading a3^-1 a3^-1 is a run of exactly two
        if len(runs) != 3 or runs[0] != ((3, -1), 2):
            return None
        if (runs[1][0], runs[2][0]) != pattern[1:]:
            return None
        return runs[1][1], runs[2][1]
    if len(runs) != len(pattern) or tuple(r[0] for r in runs) != pattern:
        return None
    if family is Family.A and (runs[0][1], runs[1][1]) != (1, 1):
        return None
    if family in (Family.C, Family.D) and runs[0][1] != 1:
        return None
    return tuple(count for _, count in runs[(2 if family is Family.A else 1):])


def classify_ABCD(bw: BandWord) -> Optional[Tuple[Family, Tuple[int, ...]]]:
    """
    Matches bw, up to cyclic shift and subscript rotation, against the four
    families with their parameter constraints.
    """
    for family in Family:
        for k in range(3):
            letters = bw.rotate_subscripts(k).letters
            for r in range(max(len(letters), 1)):
                params = _match(family, letters[r:] + letters[:r])
                if params is not None and _family_valid(family, params):
                    return family, params
    return None


def family_word(family: Family, *params: int) -> BandWord:
    """
    The literal band word of a family member.

    Raises:
        BandWordError: On a wrong parameter count or a constraint violation.
    """
    family = Family(family)
    arity = {Family.A: 1, Family.B: 2, Family.C: 3, Family.D: 4}[family]
    if len(params) != arity:
        raise BandWordError(f"family {family.value} takes {arity} parameters, got {len(params)}")
    if not _family_valid(family, tuple(params)):
        raise BandWordError(f"parameters {params} violate the constraints of family {family.value}")
    if family is Family.A:
        return BandWord.runs((-3, 1), (-2, 1), (1, params[0]))
    if family is Family.B:
        return BandWord.runs((-3, 2), (1, params[0]), (2, params[1]))
    if family is Family.C:
        return BandWord.runs((-2, 1), (1, params[0]), (2, params[1]), (3, params[2]))
    return BandWord.runs((-2, 1), (1, params[0]), (2, params[1]), (3, params[2]), (1, params[3]))
