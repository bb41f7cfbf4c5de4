"""
Morton-Franks-Williams bounds of a closed-braid representative: degrees,
deficits, the Bennequin-type numbers beta and gamma, destabilization
certificates for non-sharpness, and the (b, c) quadrant explorer.
"""
import logging
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from src.domain.braid_word import BraidWord, mirror, skein_triple, stabilize
from src.domain.exceptions import ConstructionError, MFWViolation
from src.domain.laurent import LaurentPoly2, v_degrees
from .constructions import cable
from .engine_manager import homfly
from .markov_search import DestabilizationResult, SearchBudget, destabilization_search

logger = logging.getLogger(__name__)


class MFWReport:
    """
    MFW data of one representative. `b` is the claimed braid index (the strand
    count unless one was given); the D values and beta/gamma refer to the
    representative itself.
    """

    def __init__(self, word: BraidWord, d_minus: int, d_plus: int, claimed_braid_index: Optional[int] = None):
        self.word = word
        self.c = word.exponent_sum()
        self.strands = word.strands
        self.b = claimed_braid_index if claimed_braid_index is not None else word.strands
        self.d_minus = d_minus
        self.d_plus = d_plus
        self.lower_bound_b = (d_plus - d_minus) // 2 + 1
        self.D_plus_rep = (self.c + self.strands - 1) - d_plus
        self.D_minus_rep = d_minus - (self.c - self.strands + 1)
        self.deficit_at_b = Fraction(2 * self.b - (d_plus - d_minus) - 2, 2)
        self.beta = self.c - self.strands
        self.gamma = self.c + self.strands
        # range of exponent sums MFW allows for b-strand representatives
        self.max_c_at_b = self.b + d_minus - 1
        self.min_c_at_b = -self.b + d_plus + 1

        if self.D_plus_rep < 0 or self.D_minus_rep < 0:
            raise MFWViolation(f"negative MFW slack for {word}: D+={self.D_plus_rep}, D-={self.D_minus_rep}")
        if self.b == self.strands and self.deficit_at_b != Fraction(self.D_plus_rep + self.D_minus_rep, 2):
            raise MFWViolation(f"deficit {self.deficit_at_b} is not the mean of D+ and D- for {word}")

    @property
    def is_sharp(self) -> bool:
        return self.deficit_at_b == 0

    def to_dict(self) -> Dict:
        return {
            "word": self.word.to_text() if self.word.strands <= 26 else self.word.to_int_list(),
            "strands": self.strands,
            "c": self.c,
            "b": self.b,
            "d_minus": self.d_minus,
            "d_plus": self.d_plus,
            "lower_bound_b": self.lower_bound_b,
            "D_plus_rep": self.D_plus_rep,
            "D_minus_rep": self.D_minus_rep,
            "deficit_at_b": str(self.deficit_at_b),
            "beta": self.beta,
            "gamma": self.gamma,
            "max_c_at_b": self.max_c_at_b,
            "min_c_at_b": self.min_c_at_b,
        }

    def __repr__(self) -> str:
        return (f"MFWReport(c={self.c}, b={self.b}, d=({self.d_minus}, {self.d_plus}), "
                f"deficit={self.deficit_at_b}, D+={self.D_plus_rep}, D-={self.D_minus_rep})")


def mfw_report(w: BraidWord, claimed_braid_index: Optional[int] = None) -> MFWReport:
    """
    Computes the MFW report of the closure of w.

    Args:
        w: The representative.
        claimed_braid_index: Braid index to measure the deficit against;
            defaults to the strand count of w.

    Raises:
        ValueError: If the claimed index is not positive.
        SizeLimitExceeded: If w is beyond the engine limits.
    """
    if claimed_braid_index is not None and claimed_braid_index < 1:
        raise ValueError(f"claimed braid index must be positive, got {claimed_braid_index}")
    d_minus, d_plus = v_degrees(homfly(w))
    return MFWReport(w, d_minus, d_plus, claimed_braid_index)


def sharp_consequences(report: MFWReport) -> Optional[Tuple[int, int]]:
    """
    When MFW is sharp, braid index and exponent sum are read off the degrees:
    b = (d+ - d-)/2 + 1 and c = (d+ + d-)/2.
    """
    if not report.is_sharp:
        return None
    return (report.d_plus - report.d_minus) // 2 + 1, (report.d_plus + report.d_minus) // 2


def skein_degree_inequalities(p_plus: LaurentPoly2, p_minus: LaurentPoly2, p_zero: LaurentPoly2) -> Dict[str, bool]:
    """
    The six degree bounds that follow from the skein relation, keyed by name.
    All values are True for any genuine skein triple.
    """
    (lo_p, hi_p), (lo_m, hi_m), (lo_0, hi_0) = v_degrees(p_plus), v_degrees(p_minus), v_degrees(p_zero)
    return {
        "d+(P+) <= max(d+(P-)+2, d+(P0)+1)": hi_p <= max(hi_m + 2, hi_0 + 1),
        "d-(P+) >= min(d-(P-)+2, d-(P0)+1)": lo_p >= min(lo_m + 2, lo_0 + 1),
        "d+(P-) <= max(d+(P+)-2, d+(P0)-1)": hi_m <= max(hi_p - 2, hi_0 - 1),
        "d-(P-) >= min(d-(P+)-2, d-(P0)-1)": lo_m >= min(lo_p - 2, lo_0 - 1),
        "d+(P0) <= max(d+(P+)-1, d+(P-)+1)": hi_0 <= max(hi_p - 1, hi_m + 1),
        "d-(P0) >= min(d-(P+)-1, d-(P-)+1)": lo_0 >= min(lo_p - 1, lo_m + 1),
    }


class ThmACertificate:
    """
    Non-sharpness evidence at one crossing: both skein partners of w admit p
    positive and n negative destabilizations, hence D+ >= 2p and D- >= 2n.
    """

    def __init__(self, word: BraidWord, position: int, role: str, searches: Dict[str, Dict[int, DestabilizationResult]]):
        self.word = word
        self.position = position
        self.role = role
        self.searches = searches
        self.p = min(found[1].count for found in searches.values())
        self.n = min(found[-1].count for found in searches.values())
        self.exhausted = any(r.exhausted for found in searches.values() for r in found.values())

    @property
    def D_plus_lower(self) -> int:
        return 2 * self.p

    @property
    def D_minus_lower(self) -> int:
        return 2 * self.n

    @property
    def proves_non_sharp(self) -> bool:
        return self.p + self.n > 0

    def replay(self) -> bool:
        """Re-checks every witness move by move."""
        return all(r.replay() for found in self.searches.values() for r in found.values())

    def witnesses(self) -> Dict[str, Dict[str, List[str]]]:
        return {
            role: {f"{sign:+d}": [repr(m) for m in r.witness] for sign, r in found.items()}
            for role, found in self.searches.items()
        }

    def __repr__(self) -> str:
        return (f"ThmACertificate(position={self.position}, role={self.role!r}, p={self.p}, n={self.n}, "
                f"exhausted={self.exhausted})")


def thmA_check(w: BraidWord, position: int, budget: Optional[SearchBudget] = None,
               braid_index: Optional[int] = None) -> ThmACertificate:
    """
    Builds the skein triple at `position` and searches the two partners of w
    for destabilizations of each sign.

    A certificate only says something about non-sharpness when w sits on the
    braid index of its closure. That is not checked here; passing the claimed
    `braid_index` at least rejects a word on a different strand count.

    Args:
        w: A representative on the claimed braid index.
        position: Index of the crossing to resolve.
        budget: Search limits shared by the four searches.
        braid_index: Claimed braid index of the closure, if known.

    Raises:
        BraidWordError: If position is out of range.
        ValueError: If braid_index is given and differs from the strand count.
    """
    if braid_index is not None and braid_index != w.strands:
        raise ValueError(f"certificate needs a representative on {braid_index} strands, got {w.strands}")
    w_plus, w_minus, w_zero = skein_triple(w, position)
    role = "+" if w.letters[position][1] > 0 else "-"
    partners = {"-": w_minus, "0": w_zero} if role == "+" else {"+": w_plus, "0": w_zero}
    searches = {
        name: {sign: destabilization_search(partner, sign, budget) for sign in (1, -1)}
        for name, partner in partners.items()
    }
    cert = ThmACertificate(w, position, role, searches)
    logger.debug("crossing %d of %s: %r", position, w, cert)
    return cert


def thmA_scan(w: BraidWord, budget: Optional[SearchBudget] = None, progress: bool = False,
              braid_index: Optional[int] = None) -> ThmACertificate:
    """Runs thmA_check at every crossing and keeps the certificate with the largest p + n."""
    if not w.letters:
        raise ValueError("thmA_scan needs at least one crossing")
    if braid_index is not None and braid_index != w.strands:
        raise ValueError(f"certificate needs a representative on {braid_index} strands, got {w.strands}")
    best: Optional[ThmACertificate] = None
    for position in tqdm(range(len(w.letters)), desc="crossings", disable=not progress):
        cert = thmA_check(w, position, budget, braid_index)
        if best is None or (cert.p + cert.n, cert.p) > (best.p + best.n, best.p):
            best = cert
    return best


def deficit_cable_bound(c1: int, c2: int, p: int) -> Fraction:
    """
    Lower bound p (c2 - c1) / 2 on the deficit of a (p, q)-cable of a knot
    with b-strand representatives of exponent sums c1 < c2.

    Raises:
        ConstructionError: If p < 1, c1 >= c2 or c2 - c1 is odd.
    """
    if p < 1:
        raise ConstructionError(f"p must be positive, got {p}")
    if c1 >= c2:
        raise ConstructionError(f"need c1 < c2, got {c1} and {c2}")
    if (c2 - c1) % 2:
        raise ConstructionError(f"c2 - c1 = {c2 - c1} must be even")
    return Fraction(p * (c2 - c1), 2)


class WritheVerdict(str, Enum):
    UNIQUE = "unique"
    INCONCLUSIVE = "inconclusive"


class WritheTest:
    """Deficit of the (p, p*c + 1)-cable and what it says about the exponent sum."""

    def __init__(self, companion: BraidWord, p: int, cable_word: BraidWord, report: MFWReport):
        self.companion = companion
        self.p = p
        self.cable_word = cable_word
        self.report = report
        # a second exponent sum would force deficit >= p
        self.verdict = WritheVerdict.UNIQUE if report.deficit_at_b < p else WritheVerdict.INCONCLUSIVE

    def __repr__(self) -> str:
        return f"WritheTest(p={self.p}, deficit={self.report.deficit_at_b}, verdict={self.verdict.value})"


def cable_writhe_test(w: BraidWord, braid_index: Optional[int] = None, p: int = 2) -> WritheTest:
    """
    Decides whether every minimal-strand representative of the knot has the
    exponent sum of w, using the deficit of its (p, pc + 1)-cable.

    Raises:
        ConstructionError: If the closure of w is not a knot.
    """
    if w.component_count() != 1:
        raise ConstructionError("the cable writhe test needs a knot")
    b = braid_index if braid_index is not None else w.strands
    cabled = cable(w, p, p * w.exponent_sum() + 1)
    return WritheTest(w, p, cabled, mfw_report(cabled, p * b))


class QuadrantPoint:
    __slots__ = ("b", "c", "in_quadrant", "in_mfw_region")

    def __init__(self, b: int, c: int, in_quadrant: bool, in_mfw_region: bool):
        self.b = b
        self.c = c
        self.in_quadrant = in_quadrant
        self.in_mfw_region = in_mfw_region

    def as_row(self) -> Tuple[int, int, bool, bool]:
        return self.b, self.c, self.in_quadrant, self.in_mfw_region

    def __repr__(self) -> str:
        return f"QuadrantPoint(b={self.b}, c={self.c})"


class QuadrantScan:
    """Every (b, c) reached by stabilizing the minimal representative up to a depth."""

    CSV_HEADER = ("b", "c", "in_quadrant", "in_mfw_region")

    def __init__(self, b_min: int, c_min: int, d_minus: int, d_plus: int, points: List[QuadrantPoint], sequences: int):
        self.b_min = b_min
        self.c_min = c_min
        self.d_minus = d_minus
        self.d_plus = d_plus
        self.points = points
        self.sequences = sequences

    @property
    def violations(self) -> List[QuadrantPoint]:
        return [p for p in self.points if not (p.in_quadrant and p.in_mfw_region)]

    def csv_rows(self) -> List[Tuple[int, int, bool, bool]]:
        return [p.as_row() for p in self.points]

    def __repr__(self) -> str:
        return f"QuadrantScan({len(self.points)} points, {len(self.violations)} violations)"


def _in_quadrant(b: int, c: int, b_min: int, c_min: int) -> bool:
    db, dc = b - b_min, c - c_min
    if (db + dc) % 2:
        return False
    return (db + dc) // 2 >= 0 and (db - dc) // 2 >= 0


def quadrant_scan(w_min: BraidWord, c_min: int, depth: int) -> QuadrantScan:
    """
    Stabilizes w_min along every sign sequence of length <= depth and checks
    each (b, c) against the quadrant spanned at (b_min, c_min) and against
    the MFW region -b + d+ + 1 <= c <= b + d- - 1. This explores the
    conjecture; it does not prove it.

    Raises:
        ValueError: If depth is negative or c_min is not the exponent sum of w_min.
    """
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    if c_min != w_min.exponent_sum():
        raise ValueError(f"c_min = {c_min} differs from the exponent sum {w_min.exponent_sum()} of {w_min}")
    d_minus, d_plus = v_degrees(homfly(w_min))
    b_min = w_min.strands
    seen: Dict[Tuple[int, int], QuadrantPoint] = {}
    sequences = 0
    for length in range(depth + 1):
        for signs in product((1, -1), repeat=length):
            word = w_min
            for e in signs:
                word = stabilize(word, e)
            sequences += 1
            key = (word.strands, word.exponent_sum())
            if key not in seen:
                b, c = key
                seen[key] = QuadrantPoint(b, c, _in_quadrant(b, c, b_min, c_min),
                                          -b + d_plus + 1 <= c <= b + d_minus - 1)
    points = sorted(seen.values(), key=lambda p: (p.b, -p.c))
    scan = QuadrantScan(b_min, c_min, d_minus, d_plus, points, sequences)
    if scan.violations:
        logger.warning("quadrant scan of %s found %d points outside the expected region", w_min, len(scan.violations))
    return scan


def mirror_reports_dual(report: MFWReport, mirrored: MFWReport) -> bool:
    """
    Whether `mirrored` carries the MFW data a mirror image of `report` must have
    at the same strand count: degrees negated and swapped, D+ and D- exchanged,
    the allowed exponent-sum range reflected, and gamma = -beta.
    """
    return (
        report.strands == mirrored.strands
        and (mirrored.d_minus, mirrored.d_plus) == (-report.d_plus, -report.d_minus)
        and (mirrored.D_plus_rep, mirrored.D_minus_rep) == (report.D_minus_rep, report.D_plus_rep)
        and report.max_c_at_b == -mirrored.min_c_at_b
        and report.gamma == -mirrored.beta
    )


def mirror_duality_holds(w: BraidWord) -> bool:
    """
    Computes P for w and for its mirror, checks that the mirror polynomial is
    P(-v^-1, z) and that the two MFW reports are dual.
    """
    p = homfly(w)
    mirrored_word = mirror(w)
    p_mirror = homfly(mirrored_word)
    if p_mirror != p.substitute_mirror():
        logger.warning("HOMFLYPT of the mirror of %s is not P(-v^-1, z)", w)
        return False
    return mirror_reports_dual(MFWReport(w, *v_degrees(p)), MFWReport(mirrored_word, *v_degrees(p_mirror)))
