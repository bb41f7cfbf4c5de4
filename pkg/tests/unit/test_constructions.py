import unittest
from math import gcd

from hypothesis import given, settings, strategies as st

from src.application.alexander import burau_alexander, normalize_up_to_units
from src.application.constructions import (
    BMParams, CableSpec, Identification, axis_linked_union, bm_word, bundle_crossing, cable, cable_crossing_count_link,
    cable_link, connect_sum, identify, identify_in_table, kn_word, seam_twist, twist_letters,
)
from src.application.engine_manager import EngineManager, homfly
from src.application.settings import EngineSettings
from src.domain.braid_word import linking_matrix, parse_word
from src.domain.exceptions import ConstructionError
from src.infrastructure.knot_table import load_bundled_table
from tests.strategies import braid_words, knot_words


class TestCables(unittest.TestCase):
    """Test suite for cable words."""

    def setUp(self):
        EngineManager().configure(EngineSettings(progress=False))

    def test_bundle_crossing(self):
        """Test that a width-2 bundle crossing has four letters of one sign."""
        self.assertEqual(bundle_crossing(1, 2, 1), [(2, 1), (1, 1), (3, 1), (2, 1)])
        self.assertEqual(bundle_crossing(2, 1, -1), [(2, -1)])

    def test_twist_letters(self):
        """Test positive and negative bundle twists."""
        self.assertEqual(twist_letters(3, 2), [(1, 1), (2, 1), (1, 1), (2, 1)])
        self.assertEqual(twist_letters(3, -1), [(2, -1), (1, -1)])
        self.assertEqual(twist_letters(2, 1, first_strand=3), [(3, 1)])

    def test_cable_spec(self):
        """Test k = q - p c and the exponent-sum formula."""
        spec = CableSpec(2, 7, 3)
        self.assertEqual(spec.k, 1)
        self.assertEqual(spec.expected_exponent_sum(3), 13)
        with self.assertRaises(ConstructionError):
            CableSpec(0, 1, 0)

    def test_trefoil_cable(self):
        """Test strand count, exponent sum and component count of the (2, 7)-cable."""
        cabled = cable(parse_word("aaa"), 2, 7)
        self.assertEqual(cabled.strands, 4)
        self.assertEqual(cabled.exponent_sum(), 13)
        self.assertEqual(cabled.component_count(), 1)
        self.assertEqual(cable(parse_word("aaa"), 2, 6).component_count(), 2)

    def test_one_cable_is_the_companion(self):
        """Test that the (1, c)-cable is the word itself."""
        w = parse_word("aBaB")
        self.assertEqual(cable(w, 1, w.exponent_sum()), w)
        self.assertEqual(homfly(cable(w, 1, 0)), homfly(w))

    def test_cable_link(self):
        """Test componentwise twists on the Hopf link."""
        hopf = parse_word("aa")
        cabled = cable_link(hopf, 2, [1, 1])
        self.assertEqual(cabled.strands, 4)
        self.assertEqual(cabled.exponent_sum(), cable_crossing_count_link(2, 2, [1, 1]))
        self.assertEqual(cabled.component_count(), 2)
        with self.assertRaises(ConstructionError):
            cable_link(hopf, 2, [1])

    def test_crossing_count_formula(self):
        """Test p^2 c + (p - 1) sum k."""
        self.assertEqual(cable_crossing_count_link(5, 3, [2]), 49)
        self.assertEqual(cable_crossing_count_link(0, 2, [1, 1]), 2)

    @given(braid_words(max_letters=8), st.integers(1, 3), st.integers(-12, 12))
    @settings(max_examples=100, deadline=None)
    def test_cable_word_counts(self, w, p, q):
        """Test strands p n, both exponent-sum formulas and gcd(p, q) components for knots."""
        cabled = cable(w, p, q)
        c = w.exponent_sum()
        self.assertEqual(cabled.strands, p * w.strands)
        self.assertEqual(cabled.exponent_sum(), cable_crossing_count_link(c, p, [q - p * c]))
        self.assertEqual(cabled.exponent_sum(), (p - 1) * q + p * c)
        if w.component_count() == 1:
            self.assertEqual(cabled.component_count(), gcd(p, q))


class TestConnectSumAndUnions(unittest.TestCase):
    """Test suite for connected sums and axis-linked unions."""

    def setUp(self):
        EngineManager().configure(EngineSettings(progress=False))

    def test_connect_sum(self):
        """Test the shifted concatenation and multiplicativity of HOMFLYPT."""
        trefoil = parse_word("aaa")
        total = connect_sum(trefoil, trefoil)
        self.assertEqual(total.to_text(), "aaabbb")
        self.assertEqual(total.strands, 3)
        self.assertEqual(total.exponent_sum(), 6)
        self.assertEqual(homfly(total), homfly(trefoil) * homfly(trefoil))

    def test_connect_sum_needs_knots(self):
        """Test that a link summand is refused."""
        with self.assertRaises(ConstructionError):
            connect_sum(parse_word("aaa"), parse_word("aa"))

    @given(knot_words(max_strands=3, max_letters=5), knot_words(max_strands=3, max_letters=5))
    @settings(max_examples=50, deadline=None)
    def test_connect_sum_invariants(self, w1, w2):
        """Test that HOMFLYPT and Alexander multiply and exponent sums add."""
        total = connect_sum(w1, w2)
        self.assertEqual(total.strands, w1.strands + w2.strands - 1)
        self.assertEqual(total.exponent_sum(), w1.exponent_sum() + w2.exponent_sum())
        self.assertEqual(total.component_count(), 1)
        self.assertEqual(homfly(total), homfly(w1) * homfly(w2))
        self.assertEqual(burau_alexander(total), normalize_up_to_units(burau_alexander(w1) * burau_alexander(w2)))

    def test_axis_union_of_one(self):
        """Test that n = 1 returns the word."""
        w = parse_word("aaa")
        self.assertIs(axis_linked_union(w, 1), w)
        with self.assertRaises(ConstructionError):
            axis_linked_union(w, 0)

    def test_axis_union_linking(self):
        """Test component count and that adjacent copies link full_twists times."""
        trefoil = parse_word("aaa")
        union = axis_linked_union(trefoil, 2)
        self.assertEqual(union.strands, 4)
        self.assertEqual(union.component_count(), 2)
        self.assertEqual(linking_matrix(union), [[0, 2], [2, 0]])
        self.assertEqual(union.exponent_sum(), 2 * 3 + 4)

        union = axis_linked_union(trefoil, 3)
        self.assertEqual(union.component_count(), 3)
        self.assertEqual(linking_matrix(union), [[0, 2, 0], [2, 0, 2], [0, 2, 0]])
        self.assertEqual(linking_matrix(axis_linked_union(trefoil, 2, full_twists=-1)), [[0, -1], [-1, 0]])

    def test_seam_twist(self):
        """Test the seam letters and refusal of zero twists."""
        self.assertEqual(seam_twist(2, 1), [(2, 1), (2, 1)])
        self.assertEqual(seam_twist(4, -2), [(4, -1)] * 4)
        with self.assertRaises(ConstructionError):
            axis_linked_union(parse_word("aaa"), 2, full_twists=0)

    def test_axis_union_of_9_42(self):
        """Test the 8-strand, 2-component word built from 9_42."""
        knot = parse_word("aaacBAAcB")
        union = axis_linked_union(knot, 2)
        self.assertEqual(union.strands, 8)
        self.assertEqual(union.component_count(), 2)
        self.assertEqual(union.exponent_sum(), 2 * knot.exponent_sum() + 4)
        self.assertEqual(list(union.letters[9:18]), [(i + 4, e) for i, e in knot.letters])


class TestBirmanMenascoFamily(unittest.TestCase):
    """Test suite for the frozen four-strand template."""

    def setUp(self):
        EngineManager().configure(EngineSettings(progress=False))
        self.table = {entry.name: entry.word() for entry in load_bundled_table()}

    def test_exponent_sum(self):
        """Test c = x + y + z + w + 4 and the strand count."""
        w = bm_word(BMParams(-1, 1, -2, -1))
        self.assertEqual(w.strands, 4)
        self.assertEqual(w.exponent_sum(), 1)
        self.assertEqual(bm_word(BMParams(0, 0, 0, 0)).exponent_sum(), 4)

    def test_identities(self):
        """Test a direct identity and the mirrored one."""
        self.assertIs(identify(bm_word(BMParams(-1, 1, -2, -1)), self.table["9_42"]), Identification.MATCH)
        self.assertIs(identify(bm_word(BMParams(-1, 1, 1, 2)), self.table["9_49"]), Identification.MATCH)
        self.assertIs(identify(bm_word(BMParams(-1, -2, -2, -2)), self.table["10_132"]), Identification.MIRROR_MATCH)

    def test_kn_family(self):
        """Test K_-2 = 9_42, K_2 = 10_150 and that even K_n are knots."""
        self.assertIs(identify(kn_word(-2), self.table["9_42"]), Identification.MATCH)
        self.assertIs(identify(kn_word(2), self.table["10_150"]), Identification.MATCH)
        for n in (-4, 0, 4, 6):
            self.assertEqual(kn_word(n).component_count(), 1)

    def test_identify_basics(self):
        """Test mirror detection and a mismatch on small knots."""
        self.assertIs(identify(parse_word("aaa"), parse_word("AAA")), Identification.MIRROR_MATCH)
        self.assertIs(identify(parse_word("aaa"), parse_word("aBaB")), Identification.NONE)
        table = [("4_1", parse_word("aBaB")), ("3_1", parse_word("aaa"))]
        self.assertEqual(identify_in_table(parse_word("aaab"), table), ("3_1", Identification.MATCH))
        self.assertIsNone(identify_in_table(parse_word("aaaaa"), table))


if __name__ == '__main__':
    unittest.main()
