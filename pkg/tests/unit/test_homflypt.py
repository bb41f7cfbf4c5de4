import unittest

from hypothesis import given, settings, strategies as st

from src.application.engine_manager import EngineManager, homfly, homfly_degrees
from src.application.hecke import HeckeEngine
from src.application.homflypt import DELTA, ReferenceEngine, check_mfw, first_ascending_letter, split_simplify
from src.application.settings import EngineChoice, EngineSettings
from src.domain.braid_word import mirror, parse_word, skein_triple
from src.domain.exceptions import MFWViolation, SizeLimitExceeded
from src.domain.laurent import LaurentPoly2, v_degrees
from tests.strategies import braid_words, markov_moves, nonempty_braid_words

TREFOIL = LaurentPoly2({(2, 0): 2, (4, 0): -1, (2, 2): 1})
HOPF = LaurentPoly2({(1, -1): 1, (3, -1): -1, (1, 1): 1})
V = LaurentPoly2.monomial(1, 1, 0)
Z = LaurentPoly2.monomial(1, 0, 1)


class TestSplitSimplify(unittest.TestCase):
    """Test suite for the polynomial-preserving simplification."""

    def test_irreducible_word_is_kept(self):
        """Test that the trefoil word is already irreducible."""
        self.assertEqual(split_simplify(parse_word("aaa")), (0, [parse_word("aaa")]))

    def test_split_at_missing_generator(self):
        """Test that sigma_1 sigma_3 on four strands is a two-component unlink."""
        k, pieces = split_simplify(parse_word("ac", 4))
        self.assertEqual((k, pieces), (1, []))

    def test_descending_detection(self):
        """Test that an empty diagram is descending and the trefoil is not."""
        self.assertIsNone(first_ascending_letter(parse_word("", 3)))
        self.assertIsNotNone(first_ascending_letter(parse_word("aaa")))


class TestReferenceEngine(unittest.TestCase):
    """Test suite for the skein-recursion engine."""

    def setUp(self):
        self.engine = ReferenceEngine()

    def test_unknots_and_unlinks(self):
        """Test the normalization and the split-union factor."""
        self.assertEqual(self.engine.polynomial(parse_word("")), LaurentPoly2.one())
        self.assertEqual(self.engine.polynomial(parse_word("a")), LaurentPoly2.one())
        self.assertEqual(self.engine.polynomial(parse_word("", 2)), DELTA)
        self.assertEqual(self.engine.polynomial(parse_word("", 3)), DELTA * DELTA)

    def test_trefoil_and_hopf(self):
        """Test the positive trefoil and the positive Hopf link."""
        self.assertEqual(self.engine.polynomial(parse_word("aaa")), TREFOIL)
        self.assertEqual(self.engine.polynomial(parse_word("aa")), HOPF)
        self.assertEqual(v_degrees(self.engine.polynomial(parse_word("AAA"))), (-4, -2))

    def test_figure_eight_is_amphichiral(self):
        """Test that the figure-eight polynomial is fixed by the mirror substitution."""
        p = self.engine.polynomial(parse_word("aBaB"))
        self.assertEqual(p.substitute_mirror(), p)
        self.assertEqual(v_degrees(p), (-2, 2))


class TestEngineAgreement(unittest.TestCase):
    """Property tests shared by both engines."""

    def setUp(self):
        self.reference = ReferenceEngine()
        self.hecke = HeckeEngine()

    def test_known_values_on_hecke(self):
        """Test the Hecke engine on the trefoil and the Hopf link."""
        self.assertEqual(self.hecke.polynomial(parse_word("aaa")), TREFOIL)
        self.assertEqual(self.hecke.polynomial(parse_word("aa")), HOPF)

    @given(braid_words(max_letters=7))
    @settings(max_examples=60, deadline=None)
    def test_engines_agree(self, w):
        """Test that the two engines return identical polynomials."""
        self.assertEqual(self.reference.polynomial(w), self.hecke.polynomial(w))

    @given(nonempty_braid_words(max_letters=7), st.data())
    @settings(max_examples=200, deadline=None)
    def test_skein_relation(self, w, data):
        """Test v^-1 P+ - v P- = z P0 at a random crossing."""
        plus, minus, zero = skein_triple(w, data.draw(st.integers(0, len(w.letters) - 1)))
        p = self.reference.polynomial
        self.assertEqual(p(plus).shift(-1, 0) - p(minus).shift(1, 0), p(zero) * Z)

    @given(markov_moves())
    @settings(max_examples=200, deadline=None)
    def test_markov_invariance(self, pair):
        """Test invariance under one random conjugation or stabilization."""
        w, moved = pair
        self.assertEqual(self.reference.polynomial(moved), self.reference.polynomial(w))
        self.assertEqual(self.hecke.polynomial(moved), self.hecke.polynomial(w))

    @given(braid_words(max_letters=6))
    @settings(max_examples=40, deadline=None)
    def test_mirror(self, w):
        """Test that mirroring the word substitutes v -> -v^-1."""
        self.assertEqual(self.reference.polynomial(mirror(w)), self.reference.polynomial(w).substitute_mirror())

    @given(braid_words(max_letters=8))
    @settings(max_examples=100, deadline=None)
    def test_mfw_inequality(self, w):
        """Test c - b + 1 <= d- <= d+ <= c + b - 1 on random words."""
        check_mfw(w, self.reference.polynomial(w))


class TestEngineManager(unittest.TestCase):
    """Test suite for the shared engine service."""

    def setUp(self):
        self.manager = EngineManager()
        self.manager.configure(EngineSettings(progress=False))

    def tearDown(self):
        self.manager.configure(EngineSettings(progress=False))

    def test_singleton(self):
        """Test that every call returns the same instance."""
        self.assertIs(EngineManager(), self.manager)

    def test_homfly_and_degrees(self):
        """Test the module-level helpers and cache population."""
        self.assertEqual(homfly(parse_word("aaa")), TREFOIL)
        self.assertEqual(homfly_degrees(parse_word("aaa")), (2, 4))
        self.assertGreaterEqual(len(self.manager.cache), 1)
        self.assertEqual(homfly(parse_word("aaa"), EngineChoice.HECKE), TREFOIL)

    def test_cache_is_shared_between_rotations(self):
        """Test that a rotated word hits the cached polynomial."""
        homfly(parse_word("aBaB"))
        self.assertIsNotNone(self.manager.cache.get(parse_word("BaBa")))

    def test_size_limit(self):
        """Test that words beyond the limits are refused."""
        self.manager.configure(EngineSettings(progress=False, max_letters=5))
        with self.assertRaises(SizeLimitExceeded):
            homfly(parse_word("aaaaaaa"))
        self.manager.configure(EngineSettings(progress=False, max_strands=3))
        with self.assertRaises(SizeLimitExceeded):
            homfly(parse_word("abc"))

    def test_mfw_violation_is_raised(self):
        """Test that a polynomial outside the MFW window is reported."""
        with self.assertRaises(MFWViolation):
            check_mfw(parse_word("aaa"), LaurentPoly2.monomial(1, 10, 0))
        check_mfw(parse_word("aaa"), TREFOIL)

    def test_settings_from_env_overrides(self):
        """Test that explicit overrides win over defaults and None is ignored."""
        s = EngineSettings.from_env(max_letters=12, engine=None)
        self.assertEqual(s.max_letters, 12)
        self.assertIs(s.engine, EngineChoice.AUTO)


if __name__ == '__main__':
    unittest.main()
