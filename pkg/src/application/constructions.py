"""
Derived links as explicit braid words: (p, q)-cables, connected sums, the
axis-linked unions A^n, and the four-parameter Birman-Menasco family.
"""
import logging
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from src.domain.braid_word import BraidWord, Letter, free_reduce
from src.domain.exceptions import ConstructionError
from src.domain.laurent import LaurentPoly1, LaurentPoly2
from .alexander import burau_alexander
from .engine_manager import homfly

logger = logging.getLogger(__name__)


def bundle_crossing(i: int, width: int, sign: int) -> List[Letter]:
    """
    Letters that carry bundle i (strands (i-1)*width+1 .. i*width) across
    bundle i+1, every crossing with the given sign. width^2 letters.
    """
    base = (i - 1) * width
    letters: List[Letter] = []
    for r in range(width):
        for j in range(base + width + r, base + r, -1):
            letters.append((j, sign))
    return letters


def twist_letters(width: int, k: int, first_strand: int = 1) -> List[Letter]:
    """(s_f s_{f+1} ... s_{f+width-2})^k on the bundle starting at strand f."""
    cycle = [(first_strand + j, 1) for j in range(width - 1)]
    if k < 0:
        cycle = [(i, -1) for i, _ in reversed(cycle)]
    return cycle * abs(k)


class CableSpec:
    """(p, q) with derived twist k = q - p*c for a companion of exponent sum c."""

    def __init__(self, p: int, q: int, companion_c: int):
        if p < 1:
            raise ConstructionError(f"cable needs p >= 1, got {p}")
        self.p = p
        self.q = q
        self.k = q - p * companion_c

    def expected_exponent_sum(self, companion_c: int) -> int:
        return self.p * self.p * companion_c + self.k * (self.p - 1)

    def __repr__(self) -> str:
        return f"CableSpec(p={self.p}, q={self.q}, k={self.k})"


def _satellite_letters(w: BraidWord, p: int) -> List[Letter]:
    letters: List[Letter] = []
    for i, e in w.letters:
        letters.extend(bundle_crossing(i, p, e))
    return letters


def cable(w: BraidWord, p: int, q: int) -> BraidWord:
    """
    (p, q)-cable of the closure of w on p*n strands: every letter becomes a
    bundle crossing and the first bundle receives k = q - p*c twists.

    Raises:
        ConstructionError: If p < 1.
    """
    spec = CableSpec(p, q, w.exponent_sum())
    letters = _satellite_letters(w, p) + twist_letters(p, spec.k)
    result = BraidWord(p * w.strands, letters)
    assert result.exponent_sum() == spec.expected_exponent_sum(w.exponent_sum())
    assert result.exponent_sum() == (p - 1) * q + p * w.exponent_sum()
    return result


def cable_link(w: BraidWord, p: int, k_list: Sequence[int]) -> BraidWord:
    """
    Componentwise cable of a closed braid: each component j receives k_list[j]
    twists on the bundle at its lowest strand position.

    Raises:
        ConstructionError: If p < 1 or k_list does not match the component count.
    """
    if p < 1:
        raise ConstructionError(f"cable needs p >= 1, got {p}")
    cycles = w.closure_permutation().cycles
    if len(k_list) != len(cycles):
        raise ConstructionError(f"{len(cycles)} components need {len(cycles)} twist counts, got {len(k_list)}")
    letters = _satellite_letters(w, p)
    for cycle, k in zip(cycles, k_list):
        letters.extend(twist_letters(p, k, first_strand=min(cycle) * p + 1))
    return BraidWord(p * w.strands, letters)


def cable_crossing_count_link(c_L: int, p: int, k_list: Iterable[int]) -> int:
    """p^2 c_L + (p - 1)(k_1 + ... + k_l)."""
    return p * p * c_L + (p - 1) * sum(k_list)


def connect_sum(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """
    The composite braid on n1 + n2 - 1 strands: w1 followed by w2 shifted up
    by n1 - 1.

    Raises:
        ConstructionError: If either closure is not a knot.
    """
    for label, w in (("first", w1), ("second", w2)):
        if w.component_count() != 1:
            raise ConstructionError(f"{label} summand has {w.component_count()} components; need a knot")
    strands = w1.strands + w2.strands - 1
    return BraidWord(strands, w1.letters + w2.shifted(w1.strands - 1, strands).letters)


def seam_twist(seam: int, full_twists: int) -> List[Letter]:
    """sigma_seam^(2 * full_twists): the two strands at the seam twisted around each other."""
    sign = 1 if full_twists > 0 else -1
    return [(seam, sign)] * (2 * abs(full_twists))


def axis_linked_union(w: BraidWord, n: int, full_twists: int = 2) -> BraidWord:
    """
    n copies of w side by side; each adjacent pair of copies is linked by
    `full_twists` full twists of the two strands where their blocks meet
    (generator j*b for copies j and j+1). Adjacent copies of a knot then link
    `full_twists` times, and n = 1 returns w unchanged.

    Raises:
        ConstructionError: If n < 1 or full_twists == 0.
    """
    if n < 1:
        raise ConstructionError(f"axis_linked_union needs n >= 1, got {n}")
    if full_twists == 0:
        raise ConstructionError("axis_linked_union needs a non-zero number of full twists")
    if n == 1:
        return w
    b = w.strands
    strands = n * b
    letters: List[Letter] = []
    for j in range(n):
        letters.extend(w.shifted(j * b, strands).letters)
    for j in range(1, n):
        letters.extend(seam_twist(j * b, full_twists))
    return BraidWord(strands, letters)


class BMParams:
    """Signed half-twist counts for the four twist regions X, Y, Z, W."""

    def __init__(self, x: int, y: int, z: int, w: int):
        self.x, self.y, self.z, self.w = int(x), int(y), int(z), int(w)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.x, self.y, self.z, self.w

    def __repr__(self) -> str:
        return f"BMParams{self.as_tuple()}"


# Frozen 4-strand template: X = (s2^-1 s1 s2)^x, fixed s2 s2 s3, Y = s2^y,
# Z = s1^z, fixed s1, W = (s3^-1 s2 s3)^w. The fixed letters have exponent sum 4.
BM_X_BAND: Tuple[Letter, ...] = ((2, -1), (1, 1), (2, 1))
BM_W_BAND: Tuple[Letter, ...] = ((3, -1), (2, 1), (3, 1))
BM_FIXED_AFTER_X: Tuple[Letter, ...] = ((2, 1), (2, 1), (3, 1))
BM_FIXED_AFTER_Z: Tuple[Letter, ...] = ((1, 1),)


def _band_power(band: Sequence[Letter], k: int) -> List[Letter]:
    unit = list(band) if k >= 0 else [(i, -e) for i, e in reversed(band)]
    return unit * abs(k)


def bm_word(params: BMParams) -> BraidWord:
    """
    4-strand word of the Birman-Menasco diagram BM_{x,y,z,w}. Exponent sum is
    x + y + z + w + 4.
    """
    x, y, z, w = params.as_tuple()
    letters = (_band_power(BM_X_BAND, x) + list(BM_FIXED_AFTER_X) + _band_power(((2, 1),), y)
               + _band_power(((1, 1),), z) + list(BM_FIXED_AFTER_Z) + _band_power(BM_W_BAND, w))
    return BraidWord(4, letters)


def kn_word(n: int) -> BraidWord:
    """K_n = BM_{-1,-2,n,2}."""
    return bm_word(BMParams(-1, -2, n, 2))


class Identification(str, Enum):
    MATCH = "match"
    MIRROR_MATCH = "mirror-match"
    NONE = "none"


def invariant_pair(w: BraidWord) -> Tuple[LaurentPoly2, LaurentPoly1]:
    """(HOMFLYPT, normalized Alexander), the identification fingerprint."""
    return homfly(w), burau_alexander(w)


def identify(w: BraidWord, reference: BraidWord) -> Identification:
    """
    Compares invariant pairs of two closures, also against the mirror of the
    reference. Equal pairs are strong evidence, not proof, of equal links.
    """
    p, alex = invariant_pair(free_reduce(w))
    ref_p, ref_alex = invariant_pair(free_reduce(reference))
    if alex != ref_alex:
        return Identification.NONE
    if p == ref_p:
        return Identification.MATCH
    if p == ref_p.substitute_mirror():
        return Identification.MIRROR_MATCH
    return Identification.NONE


def identify_in_table(w: BraidWord, table: Sequence[Tuple[str, BraidWord]]) -> Optional[Tuple[str, Identification]]:
    """First table entry whose invariant pair matches w, directly or up to mirror."""
    for name, reference in table:
        verdict = identify(w, reference)
        if verdict is not Identification.NONE:
            return name, verdict
    return None


__all__ = [
    "cable", "cable_link", "cable_crossing_count_link", "connect_sum", "axis_linked_union",
    "bm_word", "kn_word", "BMParams", "CableSpec", "identify", "identify_in_table",
    "Identification", "bundle_crossing", "seam_twist",
]
