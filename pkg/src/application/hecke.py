"""
Performance engine: the braid word is multiplied out in the Hecke algebra
H_n (basis T_w over the permutations of n letters, g^2 = z g + 1) and the
Ocneanu-type trace is applied,

    Tr(1) = 1,  Tr(x) = delta Tr(x) for x in H_{n-1},  Tr(x g_{n-1} y) = v^-1 Tr(x y),

so that P(closure of b) = v^{exponent sum} Tr(b).

Coefficients of the running product are polynomials in z with nonnegative
exponents, kept as rows of a numpy object array (Python ints, exact).
"""
import logging
from itertools import permutations
from typing import Dict, List, Tuple

import numpy as np
from tqdm import tqdm

from src.domain.braid_word import BraidWord
from src.domain.laurent import LaurentPoly2
from .homflypt import DELTA, delta_power, split_simplify

logger = logging.getLogger(__name__)

HECKE_ENGINE_VERSION = "hecke-1"

Perm = Tuple[int, ...]

_V_INV = LaurentPoly2.monomial(1, -1, 0)


def _right_multiply(element: Dict[Perm, LaurentPoly2], s: int) -> Dict[Perm, LaurentPoly2]:
    """Multiplies a sparse Hecke element by g_s on the right (s is 1-based)."""
    out: Dict[Perm, LaurentPoly2] = {}
    for w, coef in element.items():
        ws = list(w)
        ws[s - 1], ws[s] = ws[s], ws[s - 1]
        ws = tuple(ws)
        out[ws] = out.get(ws, LaurentPoly2.zero()) + coef
        if w[s - 1] > w[s]:
            out[w] = out.get(w, LaurentPoly2.zero()) + coef.shift(0, 1)
    return {w: c for w, c in out.items() if not c.is_zero()}


class TraceTable:
    """
    Memoized trace of basis elements, Tr_n(T_w), shared across strand counts.
    """

    def __init__(self):
        self._memo: Dict[Perm, LaurentPoly2] = {(0,): LaurentPoly2.one()}

    def trace(self, w: Perm) -> LaurentPoly2:
        cached = self._memo.get(w)
        if cached is not None:
            return cached
        n = len(w)
        top = n - 1
        p = w.index(top)
        u = w[:p] + w[p + 1:]
        if p == top:
            value = DELTA * self.trace(u)
        else:
            # T_w = T_u g_{n-1} g_{n-2} ... g_{p+1}; push the tail into H_{n-1}
            element: Dict[Perm, LaurentPoly2] = {u: LaurentPoly2.one()}
            for s in range(n - 2, p, -1):
                element = _right_multiply(element, s)
            value = LaurentPoly2.zero()
            for x, coef in element.items():
                value = value + coef * self.trace(x)
            value = _V_INV * value
        self._memo[w] = value
        return value

    def __len__(self) -> int:
        return len(self._memo)


class PermutationIndex:
    """Dense indexing of the permutations of n letters with g_s lookup tables."""

    def __init__(self, n: int):
        self.n = n
        self.perms: List[Perm] = list(permutations(range(n)))
        index = {w: k for k, w in enumerate(self.perms)}
        self.identity = index[tuple(range(n))]
        self.swap: Dict[int, np.ndarray] = {}
        self.descent: Dict[int, np.ndarray] = {}
        for s in range(1, n):
            targets = np.empty(len(self.perms), dtype=np.int64)
            desc = np.zeros(len(self.perms), dtype=bool)
            for k, w in enumerate(self.perms):
                ws = list(w)
                ws[s - 1], ws[s] = ws[s], ws[s - 1]
                targets[k] = index[tuple(ws)]
                desc[k] = w[s - 1] > w[s]
            self.swap[s] = targets
            self.descent[s] = desc


class HeckeEngine:
    """
    Trace engine. Exact, and polynomial in n! per letter rather than
    exponential in the number of crossings.
    """
    version = HECKE_ENGINE_VERSION

    def __init__(self, progress: bool = False):
        self.progress = progress
        self.traces = TraceTable()
        self._indices: Dict[int, PermutationIndex] = {}

    def _index(self, n: int) -> PermutationIndex:
        if n not in self._indices:
            logger.info("building permutation tables for %d strands", n)
            self._indices[n] = PermutationIndex(n)
        return self._indices[n]

    def polynomial(self, word: BraidWord) -> LaurentPoly2:
        k, pieces = split_simplify(word)
        result = delta_power(k)
        for piece in pieces:
            result = result * self._trace_polynomial(piece)
        return result

    def hecke_coefficients(self, word: BraidWord) -> np.ndarray:
        """
        Coordinates of the word in the T_w basis: row k holds the z-coefficients
        of T_{perms[k]}.
        """
        idx = self._index(word.strands)
        length = len(word.letters)
        coeffs = np.zeros((len(idx.perms), length + 1), dtype=object)
        coeffs[idx.identity, 0] = 1
        for s, e in word.letters:
            nxt = coeffs[idx.swap[s]]
            if e > 0:
                # descent: T_w g = z T_w + T_ws
                mask = idx.descent[s]
                nxt[mask, 1:] += coeffs[mask, :-1]
            else:
                # ascent: T_w g^-1 = T_ws - z T_w
                mask = ~idx.descent[s]
                nxt[mask, 1:] -= coeffs[mask, :-1]
            coeffs = nxt
        return coeffs

    def _trace_polynomial(self, word: BraidWord) -> LaurentPoly2:
        idx = self._index(word.strands)
        coeffs = self.hecke_coefficients(word)
        nonzero = [k for k in range(len(idx.perms)) if any(coeffs[k])]
        acc: Dict[Tuple[int, int], int] = {}
        rows = tqdm(nonzero, desc=f"trace on {word.strands} strands", disable=not self.progress,
                    leave=False)
        for k in rows:
            row = [(d, int(c)) for d, c in enumerate(coeffs[k]) if c != 0]
            for (ev, ez), tc in self.traces.trace(idx.perms[k]).terms():
                for d, c in row:
                    key = (ev, ez + d)
                    acc[key] = acc.get(key, 0) + c * tc
        return LaurentPoly2(acc).shift(word.exponent_sum(), 0)
