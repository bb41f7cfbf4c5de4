"""
Bounded breadth-first search for successive destabilizations.

States are cyclically reduced words deduplicated by their cyclic canonical
form, so cyclic shifts, free reductions and conjugation by a single generator
cost nothing. Braid-relation rewrites (far commutation and the length-3
relations, including the mixed-sign ones) are charged against the depth.
Destabilizations of either sign are free; only those with the requested sign
are counted.
"""
import logging
from collections import deque
from typing import Deque, Dict, Iterator, List, Optional, Set, Tuple

from src.domain.braid_word import (
    BraidWord, Letter, MoveKind, MoveRecord, canonical_key, cyclic_reduce,
    cyclic_shift, destabilize_syntactic,
)

logger = logging.getLogger(__name__)


class SearchBudget:
    """Limits for destabilization_search."""

    def __init__(self, max_depth: int = 6, max_states: int = 100_000):
        """
        Args:
            max_depth: Largest number of braid-relation rewrites along a path.
            max_states: Largest number of distinct states visited.
        """
        if max_depth < 0 or max_states < 1:
            raise ValueError("search budget must have max_depth >= 0 and max_states >= 1")
        self.max_depth = max_depth
        self.max_states = max_states

    def __repr__(self) -> str:
        return f"SearchBudget(max_depth={self.max_depth}, max_states={self.max_states})"


class DestabilizationResult:
    """Outcome of a search: the best count, a replayable witness and budget status."""

    def __init__(self, sign: int, count: int, witness: List[MoveRecord], start: BraidWord,
                 final_word: BraidWord, states_explored: int, exhausted: bool):
        self.sign = sign
        self.count = count
        self.witness = witness
        self.start = start
        self.final_word = final_word
        self.states_explored = states_explored
        self.exhausted = exhausted

    def replay(self) -> bool:
        """
        Checks that the witness is a chain of valid moves starting at the input
        word, that each move obeys the (c, b) table and that it performs
        `count` destabilizations of the searched sign.
        """
        current = self.start
        destabs = 0
        for record in self.witness:
            if record.before != current or not record.is_consistent():
                return False
            if not _move_is_valid(record):
                return False
            if record.kind is MoveKind.DESTABILIZE and record.sign == self.sign:
                destabs += 1
            current = record.word
        return destabs == self.count and current == self.final_word

    def __repr__(self) -> str:
        return (f"DestabilizationResult(sign={self.sign:+d}, count={self.count}, "
                f"moves={len(self.witness)}, explored={self.states_explored}, exhausted={self.exhausted})")


def _move_is_valid(record: MoveRecord) -> bool:
    before, after = record.before, record.word
    if record.kind is MoveKind.CYCLIC_SHIFT:
        return cyclic_shift(before, record.params[0]) == after
    if record.kind is MoveKind.FREE_REDUCE:
        return cyclic_reduce(before) == after
    if record.kind is MoveKind.DESTABILIZE:
        return destabilize_syntactic(before, record.params[0]) == after
    if record.kind is MoveKind.BRAID_RELATION:
        return any(rewritten == after.letters for rewritten, _ in _prefix_rewrites(before.letters))
    return False


def _prefix_rewrites(letters: Tuple[Letter, ...]) -> Iterator[Tuple[Tuple[Letter, ...], str]]:
    """Yields every single-relation rewrite of the word's prefix."""
    if len(letters) >= 2:
        (i, a), (j, b) = letters[0], letters[1]
        if abs(i - j) >= 2:
            yield ((j, b), (i, a)) + letters[2:], "far-commutation"
    if len(letters) >= 3:
        (i, a), (j, b), (k, c) = letters[:3]
        if i == k and abs(i - j) == 1:
            if a == b == c:
                yield ((j, a), (i, a), (j, a)) + letters[3:], "braid"
            elif a == -c:
                yield ((j, -a), (i, b), (j, a)) + letters[3:], "mixed-braid"


def _successors(word: BraidWord) -> Iterator[Tuple[BraidWord, List[MoveRecord], int]]:
    """Yields (next state, records, depth cost)."""
    for e in (1, -1):
        destab = destabilize_syntactic(word, e)
        if destab is not None:
            records = [MoveRecord(MoveKind.DESTABILIZE, (e,), word, destab)]
            reduced = cyclic_reduce(destab)
            if reduced != destab:
                records.append(MoveRecord(MoveKind.FREE_REDUCE, (), destab, reduced))
            yield reduced, records, 0
    for r in range(len(word.letters)):
        rotated = cyclic_shift(word, r)
        for rewritten_letters, rule in _prefix_rewrites(rotated.letters):
            rewritten = word.with_letters(rewritten_letters)
            records = []
            if r:
                records.append(MoveRecord(MoveKind.CYCLIC_SHIFT, (r,), word, rotated))
            records.append(MoveRecord(MoveKind.BRAID_RELATION, (rule,), rotated, rewritten))
            reduced = cyclic_reduce(rewritten)
            if reduced != rewritten:
                records.append(MoveRecord(MoveKind.FREE_REDUCE, (), rewritten, reduced))
            yield reduced, records, 1


def destabilization_search(w: BraidWord, sign: int, budget: SearchBudget = None) -> DestabilizationResult:
    """
    Finds the largest number of successive `sign`-destabilizations reachable
    from w within the budget. Sound but not complete.

    Args:
        w: Starting word.
        sign: +1 or -1.
        budget: Depth and state limits.

    Returns:
        A DestabilizationResult whose witness replays from w.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    budget = budget or SearchBudget()
    n0, c0 = w.strands, w.exponent_sum()

    def count_of(word: BraidWord) -> int:
        # the state alone determines how many destabilizations of each sign led to it
        return ((n0 - word.strands) + sign * (c0 - word.exponent_sum())) // 2

    start_records: List[MoveRecord] = []
    start = cyclic_reduce(w)
    if start != w:
        start_records.append(MoveRecord(MoveKind.FREE_REDUCE, (), w, start))

    # key -> (parent key, records from parent, depth used, word)
    visited: Dict[tuple, Tuple[Optional[tuple], List[MoveRecord], int, BraidWord]] = {}
    start_key = canonical_key(start)
    visited[start_key] = (None, start_records, 0, start)
    frontier: Deque[tuple] = deque([start_key])
    best_key = start_key
    exhausted = False
    expanded: Set[tuple] = set()

    while frontier:
        key = frontier.popleft()
        if key in expanded:
            continue
        expanded.add(key)
        _, _, depth, word = visited[key]
        if count_of(word) > count_of(visited[best_key][3]):
            best_key = key
        if word.strands == 1:
            continue
        for nxt, records, cost in _successors(word):
            nkey = canonical_key(nxt)
            ndepth = depth + cost
            if ndepth > budget.max_depth:
                continue
            seen = visited.get(nkey)
            # expanded entries are referenced by their children and must stay fixed
            if nkey in expanded or (seen is not None and seen[2] <= ndepth):
                continue
            if seen is None and len(visited) >= budget.max_states:
                exhausted = True
                continue
            visited[nkey] = (key, records, ndepth, nxt)
            # 0-1 BFS: free moves go to the front
            if cost == 0:
                frontier.appendleft(nkey)
            else:
                frontier.append(nkey)

    witness: List[MoveRecord] = []
    key = best_key
    chain = []
    while key is not None:
        parent, records, _, _ = visited[key]
        chain.append(records)
        key = parent
    for records in reversed(chain):
        witness.extend(records)

    final_word = visited[best_key][3]
    logger.debug("destabilization search sign=%+d explored %d states (exhausted=%s)",
                 sign, len(visited), exhausted)
    return DestabilizationResult(sign, count_of(final_word), witness, w, final_word,
                                 len(visited), exhausted)
