"""
Alexander polynomials, two ways:

* reduced Burau: Delta(t) = det(I - rho(b)) (1 - t) / (1 - t^n), for any braid word;
* Seifert form: Delta(t) = det(V^T - t V) for the explicit matrix V_{x,y,z}
  of the closed 3-braids C_{x,y,z}.
"""
import logging
from functools import lru_cache
from typing import List, Sequence

import sympy as sp

from src.domain.braid_word import BraidWord
from src.domain.exceptions import PolynomialError
from src.domain.laurent import LaurentPoly1, leading_terms, normalize_alexander

logger = logging.getLogger(__name__)

T = sp.Symbol("t")


def sympy_to_laurent(expr: sp.Expr) -> LaurentPoly1:
    """
    Converts a Laurent polynomial expression in t to a LaurentPoly1.

    Raises:
        PolynomialError: If expr is not a Laurent polynomial.
    """
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    den_poly = sp.Poly(den, T)
    if len(den_poly.terms()) != 1:
        raise PolynomialError(f"{expr} is not a Laurent polynomial in t")
    (den_exp,), den_coef = den_poly.terms()[0]
    terms = {}
    for (e,), c in sp.Poly(sp.expand(num), T).terms():
        q = sp.Rational(c, den_coef)
        if q.q != 1:
            raise PolynomialError(f"{expr} has non-integer coefficients")
        terms[e - den_exp] = int(q)
    return LaurentPoly1(terms)


def laurent_to_sympy(p: LaurentPoly1) -> sp.Expr:
    return sum((c * T ** e for e, c in p.terms()), sp.Integer(0))


@lru_cache(maxsize=None)
def _burau_generator(n: int, i: int, e: int) -> sp.Matrix:
    """Reduced Burau matrix of sigma_i^e on n strands (size n-1)."""
    m = n - 1
    mat = sp.eye(m)
    if n == 2:
        mat[0, 0] = -T if e > 0 else -1 / T
        return mat
    col = i - 1
    if e > 0:
        mat[col, col] = -T
        if col - 1 >= 0:
            mat[col - 1, col] = T
        if col + 1 < m:
            mat[col + 1, col] = 1
    else:
        mat[col, col] = -1 / T
        if col - 1 >= 0:
            mat[col - 1, col] = 1
        if col + 1 < m:
            mat[col + 1, col] = 1 / T
    return mat


def burau_matrix(w: BraidWord) -> sp.Matrix:
    """Product of reduced Burau matrices of the letters, left to right."""
    mat = sp.eye(w.strands - 1)
    for i, e in w.letters:
        mat = (mat * _burau_generator(w.strands, i, e)).applyfunc(sp.expand)
    return mat


def burau_alexander(w: BraidWord) -> LaurentPoly1:
    """
    Normalized Alexander polynomial of the closure of w.

    Returns:
        Delta shifted to t^0 with a positive lowest term. A split link
        returns the zero polynomial.
    """
    if w.strands == 1:
        return LaurentPoly1.constant(1)
    mat = sp.eye(w.strands - 1) - burau_matrix(w)
    det = sp.expand(mat.det(method="berkowitz"))
    return normalize_up_to_units(sympy_to_laurent(sp.cancel(det * (1 - T) / (1 - T ** w.strands))))


def normalize_up_to_units(p: LaurentPoly1) -> LaurentPoly1:
    """
    Shifts the lowest term to t^0 and makes it positive. Agrees with
    normalize_alexander whenever that applies; multi-component links may keep
    a non-unit lowest coefficient.
    """
    if p.is_zero():
        return p
    lo, _ = p.degrees()
    if p.coefficient(lo) in (1, -1):
        return normalize_alexander(p)
    return p.shift(-lo).scalar_mul(1 if p.coefficient(lo) > 0 else -1)


class SeifertMatrix:
    """A square integer matrix used as a Seifert form."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        """
        Args:
            rows: Row-major integer entries.

        Raises:
            ValueError: If the matrix is not square.
        """
        self.rows: List[List[int]] = [list(map(int, r)) for r in rows]
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("a Seifert matrix must be square")

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix(self.rows) if self.rows else sp.zeros(0, 0)

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"SeifertMatrix({self.rows!r})"


def seifert_C(x: int, y: int, z: int) -> SeifertMatrix:
    """
    Seifert matrix V_{x,y,z} of C_{x,y,z} = a2^-1 a1^x a2^y a3^z.

    Basis order: the two core classes, then blocks of sizes x-1, y-1, z-1.
    Each block has -1 on the diagonal and +1 on the superdiagonal; the
    couplings are V[0][1] = V[1][0] = 1, V[0][first y] = 1,
    V[1][first x] = -1 and V[1][first z] = 1.

    Raises:
        ValueError: If a parameter is not positive.
    """
    if min(x, y, z) < 1:
        raise ValueError(f"C-family parameters must be positive, got {(x, y, z)}")
    size = 2 + (x - 1) + (y - 1) + (z - 1)
    v = [[0] * size for _ in range(size)]
    v[0][1] = 1
    v[1][0] = 1
    x0, y0, z0 = 2, 2 + (x - 1), 2 + (x - 1) + (y - 1)
    for start, length in ((x0, x - 1), (y0, y - 1), (z0, z - 1)):
        for k in range(length):
            v[start + k][start + k] = -1
            if k + 1 < length:
                v[start + k][start + k + 1] = 1
    if x > 1:
        v[1][x0] = -1
    if y > 1:
        v[0][y0] = 1
    if z > 1:
        v[1][z0] = 1
    return SeifertMatrix(v)


def alexander_from_seifert(V: SeifertMatrix) -> LaurentPoly1:
    """det(V^T - t V), not normalized."""
    if V.dimension == 0:
        return LaurentPoly1.constant(1)
    m = V.to_sympy()
    return sympy_to_laurent(sp.expand((m.T - T * m).det(method="berkowitz")))


def c_family_recurrence(x: int, y: int, z: int) -> LaurentPoly1:
    """(-1 + t) Delta_{x-1,y,z} + t Delta_{x-2,y,z}, for x >= 3."""
    if x < 3:
        raise ValueError("the recurrence needs x >= 3")
    prev1 = alexander_from_seifert(seifert_C(x - 1, y, z))
    prev2 = alexander_from_seifert(seifert_C(x - 2, y, z))
    return LaurentPoly1({0: -1, 1: 1}) * prev1 + prev2.shift(1)


__all__ = [
    "burau_alexander", "burau_matrix", "normalize_up_to_units", "seifert_C", "alexander_from_seifert", "leading_terms",
    "SeifertMatrix", "c_family_recurrence", "sympy_to_laurent", "laurent_to_sympy",
]
