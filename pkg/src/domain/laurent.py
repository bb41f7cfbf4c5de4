"""
Exact Laurent polynomials with integer coefficients.

LaurentPoly2 lives in Z[v, v^-1, z, z^-1] and carries HOMFLYPT polynomials.
LaurentPoly1 lives in Z[t, t^-1] and carries Alexander polynomials.
Both are immutable sparse maps from exponents to nonzero Python ints, so
coefficients never overflow.
"""
import re
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from .exceptions import PolynomialError

Exponent2 = Tuple[int, int]

_TERM2_RE = re.compile(r"^([+-]?\d+)(?:\*v\^(-?\d+))?(?:\*z\^(-?\d+))?$")
_TERM1_RE = re.compile(r"^([+-]?\d+)(?:\*t\^(-?\d+))?$")


def _clean(terms: Dict) -> Dict:
    return {k: c for k, c in terms.items() if c != 0}


def _split_terms(text: str) -> List[str]:
    """Splits "3*v^1 - 2*z^2" style text into signed term strings."""
    compact = text.replace(" ", "")
    if not compact:
        return []
    out: List[str] = []
    current = ""
    for i, ch in enumerate(compact):
        # a sign starts a new term unless it follows '^'
        if ch in "+-" and i > 0 and compact[i - 1] != "^":
            out.append(current)
            current = ch
        else:
            current += ch
    out.append(current)
    return [t for t in out if t not in ("", "+")]


class LaurentPoly2:
    """
    A Laurent polynomial in v and z with exact integer coefficients.
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Exponent2, int] = None):
        """
        Initializes a LaurentPoly2.

        Args:
            terms: Mapping (e_v, e_z) -> coefficient. Zero coefficients are dropped.
        """
        self._terms: Dict[Exponent2, int] = _clean(dict(terms or {}))
        self._hash = None

    # --- constructors ---

    @classmethod
    def constant(cls, c: int) -> 'LaurentPoly2':
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, e_v: int, e_z: int) -> 'LaurentPoly2':
        return cls({(e_v, e_z): c})

    @classmethod
    def zero(cls) -> 'LaurentPoly2':
        return cls()

    @classmethod
    def one(cls) -> 'LaurentPoly2':
        return cls.constant(1)

    # --- ring operations ---

    def __add__(self, other: 'LaurentPoly2') -> 'LaurentPoly2':
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly2':
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: 'LaurentPoly2') -> 'LaurentPoly2':
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> 'LaurentPoly2':
        return (-self) + other

    def __mul__(self, other: Union['LaurentPoly2', int]) -> 'LaurentPoly2':
        if isinstance(other, int):
            return self.scalar_mul(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out: Dict[Exponent2, int] = {}
        for (av, az), ac in self._terms.items():
            for (bv, bz), bc in other._terms.items():
                key = (av + bv, az + bz)
                out[key] = out.get(key, 0) + ac * bc
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LaurentPoly2':
        if exponent < 0:
            raise PolynomialError("negative powers are only defined for monomials; use shift()")
        result = LaurentPoly2.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scalar_mul(self, k: int) -> 'LaurentPoly2':
        """Multiplies every coefficient by the integer k."""
        return LaurentPoly2({e: c * k for e, c in self._terms.items()})

    def shift(self, d_v: int, d_z: int) -> 'LaurentPoly2':
        """Multiplies by the monomial v^d_v z^d_z."""
        return LaurentPoly2({(ev + d_v, ez + d_z): c for (ev, ez), c in self._terms.items()})

    def substitute_mirror(self) -> 'LaurentPoly2':
        """
        Applies v -> -v^-1, the effect of mirroring the link on P.

        Returns:
            The HOMFLYPT polynomial of the mirror image.
        """
        out = {}
        for (ev, ez), c in self._terms.items():
            out[(-ev, ez)] = c * (-1 if ev % 2 else 1)
        return LaurentPoly2(out)

    # --- inspection ---

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[Tuple[Exponent2, int]]:
        """Yields ((e_v, e_z), coefficient) pairs in lexicographic exponent order."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def coefficient(self, e_v: int, e_z: int) -> int:
        return self._terms.get((e_v, e_z), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- text form ---

    def to_text(self) -> str:
        """
        Serializes as a sum of "c*v^a*z^b" terms ordered lexicographically on (a, b).
        The zero polynomial is "0".
        """
        if not self._terms:
            return "0"
        parts = []
        for (ev, ez), c in self.terms():
            parts.append(f"{c}*v^{ev}*z^{ez}")
        return " + ".join(parts).replace("+ -", "- ")

    @classmethod
    def from_text(cls, text: str) -> 'LaurentPoly2':
        """
        Parses the output of to_text(). Exponent factors may be omitted when zero.

        Raises:
            PolynomialError: If a term does not match the text form.
        """
        if text.strip() == "0":
            return cls()
        out: Dict[Exponent2, int] = {}
        for raw in _split_terms(text):
            m = _TERM2_RE.match(raw)
            if not m:
                raise PolynomialError(f"malformed polynomial term {raw!r}")
            c, ev, ez = int(m.group(1)), int(m.group(2) or 0), int(m.group(3) or 0)
            out[(ev, ez)] = out.get((ev, ez), 0) + c
        return cls(out)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()!r})"


class LaurentPoly1:
    """
    A Laurent polynomial in t with exact integer coefficients.
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[int, int] = None):
        self._terms: Dict[int, int] = _clean(dict(terms or {}))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> 'LaurentPoly1':
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> 'LaurentPoly1':
        return cls({e: c})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], lowest: int = 0) -> 'LaurentPoly1':
        """Builds c0 t^lowest + c1 t^(lowest+1) + ... from a coefficient list."""
        return cls({lowest + i: c for i, c in enumerate(coeffs)})

    def __add__(self, other: 'LaurentPoly1') -> 'LaurentPoly1':
        if isinstance(other, int):
            other = LaurentPoly1.constant(other)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly1(out)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly1':
        return LaurentPoly1({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: 'LaurentPoly1') -> 'LaurentPoly1':
        if isinstance(other, int):
            other = LaurentPoly1.constant(other)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> 'LaurentPoly1':
        return (-self) + other

    def __mul__(self, other: Union['LaurentPoly1', int]) -> 'LaurentPoly1':
        if isinstance(other, int):
            return self.scalar_mul(other)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        out: Dict[int, int] = {}
        for a, ac in self._terms.items():
            for b, bc in other._terms.items():
                out[a + b] = out.get(a + b, 0) + ac * bc
        return LaurentPoly1(out)

    __rmul__ = __mul__

    def scalar_mul(self, k: int) -> 'LaurentPoly1':
        return LaurentPoly1({e: c * k for e, c in self._terms.items()})

    def shift(self, d: int) -> 'LaurentPoly1':
        """Multiplies by t^d."""
        return LaurentPoly1({e + d: c for e, c in self._terms.items()})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> Tuple[int, int]:
        """
        Returns:
            (lowest exponent, highest exponent).

        Raises:
            PolynomialError: For the zero polynomial.
        """
        if not self._terms:
            raise PolynomialError("degrees of the zero polynomial are undefined")
        return min(self._terms), max(self._terms)

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def coefficients(self) -> List[int]:
        """Dense coefficient list from the lowest to the highest exponent."""
        if not self._terms:
            return []
        lo, hi = self.degrees()
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def terms(self) -> Iterator[Tuple[int, int]]:
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly1.constant(other)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*t^{e}" for e, c in self.terms()]
        return " + ".join(parts).replace("+ -", "- ")

    @classmethod
    def from_text(cls, text: str) -> 'LaurentPoly1':
        if text.strip() == "0":
            return cls()
        out: Dict[int, int] = {}
        for raw in _split_terms(text):
            m = _TERM1_RE.match(raw)
            if not m:
                raise PolynomialError(f"malformed polynomial term {raw!r}")
            e = int(m.group(2) or 0)
            out[e] = out.get(e, 0) + int(m.group(1))
        return cls(out)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.to_text()!r})"


def v_degrees(p: LaurentPoly2) -> Tuple[int, int]:
    """
    Minimal and maximal exponent of v over the nonzero monomials of p.

    Raises:
        PolynomialError: If p is zero.
    """
    if p.is_zero():
        raise PolynomialError("v-degrees of the zero polynomial are undefined")
    exps = [ev for (ev, _), _ in p.terms()]
    return min(exps), max(exps)


def normalize_alexander(p: LaurentPoly1) -> LaurentPoly1:
    """
    Removes the unit ambiguity +-t^k so the lowest term is the constant +1.

    Raises:
        PolynomialError: If p is zero or its lowest coefficient is not +-1.
    """
    lo, _ = p.degrees()
    lowest = p.coefficient(lo)
    if lowest not in (1, -1):
        raise PolynomialError(f"lowest coefficient {lowest} is not a unit; not normalizing")
    return p.shift(-lo).scalar_mul(lowest)


def leading_terms(p: LaurentPoly1, k: int) -> List[int]:
    """
    First k coefficients of normalize_alexander(p), zero-padded.
    """
    coeffs = normalize_alexander(p).coefficients()
    return (coeffs + [0] * k)[:k]
