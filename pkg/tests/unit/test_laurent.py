import unittest

from src.domain.exceptions import PolynomialError
from src.domain.laurent import LaurentPoly1, LaurentPoly2, leading_terms, normalize_alexander, v_degrees


class TestLaurentPoly2(unittest.TestCase):
    """Test suite for the two-variable Laurent polynomial."""

    def setUp(self):
        """Trefoil polynomial 2v^2 - v^4 + v^2 z^2 and a few monomials."""
        self.trefoil = LaurentPoly2({(2, 0): 2, (4, 0): -1, (2, 2): 1})
        self.v = LaurentPoly2.monomial(1, 1, 0)
        self.z = LaurentPoly2.monomial(1, 0, 1)

    def test_zero_coefficients_are_dropped(self):
        """Test that explicit zero coefficients do not survive construction."""
        p = LaurentPoly2({(1, 0): 0, (0, 0): 3})
        self.assertEqual(len(p), 1)
        self.assertEqual(p, LaurentPoly2.constant(3))

    def test_ring_operations(self):
        """Test addition, subtraction, multiplication and integer mixing."""
        self.assertEqual(self.v + self.v, self.v * 2)
        self.assertEqual(2 * self.v, self.v.scalar_mul(2))
        self.assertTrue((self.v - self.v).is_zero())
        self.assertEqual((self.v + 1) * (self.v - 1), self.v * self.v - 1)
        self.assertEqual(1 - self.v, -(self.v - 1))
        self.assertEqual(self.z ** 3, LaurentPoly2.monomial(1, 0, 3))
        self.assertEqual(self.trefoil ** 0, LaurentPoly2.one())

    def test_negative_power_raises(self):
        """Test that negative powers are rejected."""
        with self.assertRaises(PolynomialError):
            _ = self.v ** -1

    def test_shift(self):
        """Test multiplication by a monomial through shift()."""
        self.assertEqual(self.trefoil.shift(-2, 0), LaurentPoly2({(0, 0): 2, (2, 0): -1, (0, 2): 1}))

    def test_mirror_substitution(self):
        """Test v -> -v^-1 on the trefoil gives the mirror trefoil."""
        mirrored = self.trefoil.substitute_mirror()
        self.assertEqual(mirrored, LaurentPoly2({(-2, 0): 2, (-4, 0): -1, (-2, 2): 1}))
        self.assertEqual(mirrored.substitute_mirror(), self.trefoil)
        odd = LaurentPoly2.monomial(3, 1, 0)
        self.assertEqual(odd.substitute_mirror(), LaurentPoly2.monomial(-3, -1, 0))

    def test_text_round_trip(self):
        """Test the documented text form and its parser."""
        text = self.trefoil.to_text()
        self.assertEqual(text, "2*v^2*z^0 + 1*v^2*z^2 - 1*v^4*z^0")
        self.assertEqual(LaurentPoly2.from_text(text), self.trefoil)
        self.assertEqual(LaurentPoly2.from_text("0"), LaurentPoly2.zero())
        self.assertEqual(LaurentPoly2.from_text("-1*v^-1*z^-1 + 3"), LaurentPoly2({(-1, -1): -1, (0, 0): 3}))

    def test_malformed_text(self):
        """Test that garbage terms are rejected."""
        with self.assertRaises(PolynomialError):
            LaurentPoly2.from_text("2*x^3")

    def test_v_degrees(self):
        """Test minimal and maximal v exponents."""
        self.assertEqual(v_degrees(self.trefoil), (2, 4))
        self.assertEqual(v_degrees(self.trefoil.substitute_mirror()), (-4, -2))
        with self.assertRaises(PolynomialError):
            v_degrees(LaurentPoly2.zero())

    def test_hash_consistent_with_equality(self):
        """Test that equal polynomials hash equally and work as dict keys."""
        a = LaurentPoly2({(1, 1): 2})
        b = LaurentPoly2.monomial(2, 1, 1)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual({a: "x"}[b], "x")


class TestLaurentPoly1(unittest.TestCase):
    """Test suite for the one-variable Laurent polynomial."""

    def test_degrees_and_coefficients(self):
        """Test dense coefficients between the lowest and highest exponents."""
        p = LaurentPoly1({-1: 1, 1: -3})
        self.assertEqual(p.degrees(), (-1, 1))
        self.assertEqual(p.coefficients(), [1, 0, -3])
        self.assertEqual(LaurentPoly1.from_coefficients([1, 0, -3], lowest=-1), p)

    def test_arithmetic(self):
        """Test the (1 - t)(1 + t) = 1 - t^2 identity."""
        t = LaurentPoly1.monomial(1, 1)
        self.assertEqual((1 - t) * (t + 1), 1 - t * t)

    def test_normalize_alexander(self):
        """Test removal of the unit ambiguity."""
        p = LaurentPoly1({3: -1, 4: 1, 5: -1})
        self.assertEqual(normalize_alexander(p), LaurentPoly1({0: 1, 1: -1, 2: 1}))

    def test_normalize_rejects_non_unit(self):
        """Test that a lowest coefficient other than +-1 is refused."""
        with self.assertRaises(PolynomialError):
            normalize_alexander(LaurentPoly1({0: 2, 1: 1}))

    def test_leading_terms_pads(self):
        """Test zero padding of leading terms."""
        self.assertEqual(leading_terms(LaurentPoly1({2: -1, 3: 1}), 4), [1, -1, 0, 0])

    def test_text_round_trip(self):
        """Test the text form of t-polynomials."""
        p = LaurentPoly1({0: 1, 1: -5, 2: 1})
        self.assertEqual(p.to_text(), "1*t^0 - 5*t^1 + 1*t^2")
        self.assertEqual(LaurentPoly1.from_text(p.to_text()), p)


if __name__ == '__main__':
    unittest.main()
