import unittest

from hypothesis import given, settings

from src.domain.braid_word import (
    BraidWord, ClosurePermutation, MoveKind, MoveRecord, cable_component_count, canonical_form, canonical_key,
    component_count, conjugate, cyclic_reduce, cyclic_shift, destabilize_syntactic, exponent_sum, free_reduce,
    linking_matrix, mirror, parse_word, reverse, skein_triple, stabilize,
)
from src.domain.exceptions import BraidWordError
from tests.strategies import braid_words, nonempty_braid_words


class TestBraidWordParsing(unittest.TestCase):
    """Test suite for construction and the text forms."""

    def test_parse_infers_strands(self):
        """Test that the strand count defaults to the largest generator plus one."""
        w = parse_word("aaacBAAcB")
        self.assertEqual(w.strands, 4)
        self.assertEqual(len(w), 9)
        self.assertEqual(w.letters[3], (3, 1))
        self.assertEqual(w.letters[4], (2, -1))

    def test_parse_with_explicit_strands(self):
        """Test padding a word with idle strands and rejecting a too-small count."""
        self.assertEqual(parse_word("a", 3).strands, 3)
        with self.assertRaises(BraidWordError):
            parse_word("c", 3)

    def test_empty_word_is_one_strand(self):
        """Test that the empty word parses to the 1-strand unknot."""
        w = parse_word("")
        self.assertEqual(w.strands, 1)
        self.assertEqual(component_count(w), 1)

    def test_invalid_letters(self):
        """Test rejection of non-letters, 'z' and bad signs."""
        for text in ("a1", "ab c", "z", "é"):
            with self.assertRaises(BraidWordError):
                parse_word(text)
        with self.assertRaises(BraidWordError):
            BraidWord(3, [(1, 2)])
        with self.assertRaises(BraidWordError):
            BraidWord(0)

    def test_int_list_form(self):
        """Test the signed integer form used beyond the letter alphabet."""
        self.assertEqual(BraidWord.from_int_list([1, -2]), parse_word("aB"))
        self.assertEqual(parse_word("aB").to_int_list(), [1, -2])
        with self.assertRaises(BraidWordError):
            BraidWord.from_int_list([0])
        big = BraidWord(28, [(26, 1)])
        with self.assertRaises(BraidWordError):
            big.to_text()
        self.assertIn("26", str(big))

    def test_text_round_trip(self):
        """Test to_text is the inverse of parse."""
        self.assertEqual(parse_word("AbcaaaBBBcb").to_text(), "AbcaaaBBBcb")


class TestBraidWordCombinatorics(unittest.TestCase):
    """Test suite for exponent sums, closure permutations and word rewriting."""

    def test_exponent_sums_of_the_five_knots(self):
        """Test exponent sums of the tabulated minimal words."""
        words = ["aaacBAAcB", "aabbcbAbbcB", "AbcaaaBBBcb", "aabbcbABccB", "aaacBAAcbAb"]
        self.assertEqual([exponent_sum(parse_word(w)) for w in words], [1, 7, 3, 5, 3])
        self.assertTrue(all(component_count(parse_word(w)) == 1 for w in words))

    def test_component_counts(self):
        """Test knots, two-component links and split strands."""
        self.assertEqual(component_count(parse_word("aaa")), 1)
        self.assertEqual(component_count(parse_word("aa")), 2)
        self.assertEqual(component_count(parse_word("a", 3)), 2)
        self.assertEqual(component_count(parse_word("ab")), 1)

    def test_closure_permutation_cycles(self):
        """Test that cycles start at their smallest position."""
        perm = ClosurePermutation.of(parse_word("ab"))
        self.assertEqual(len(perm.cycles), 1)
        self.assertEqual(perm.cycles[0][0], 0)
        self.assertEqual(sorted(perm.cycles[0]), [0, 1, 2])
        self.assertEqual(perm.component_of(), [0, 0, 0])

    def test_free_and_cyclic_reduction(self):
        """Test cancellation inside the word and across its ends."""
        self.assertEqual(free_reduce(parse_word("aAb")).letters, ((2, 1),))
        self.assertEqual(cyclic_reduce(parse_word("baB")).letters, ((1, 1),))
        self.assertEqual(cyclic_reduce(parse_word("aA")).letters, ())

    def test_conjugate_and_shift(self):
        """Test g w g^-1 and cyclic rotation."""
        w = parse_word("ab")
        self.assertEqual(conjugate(w, 1, -1).to_text(), "Aaba")
        self.assertEqual(cyclic_shift(parse_word("abc"), 1).to_text(), "bca")
        self.assertEqual(cyclic_shift(parse_word("abc"), -1).to_text(), "cab")
        with self.assertRaises(BraidWordError):
            conjugate(w, 3, 1)

    def test_mirror_and_reverse(self):
        """Test letter-wise sign flip and order reversal."""
        self.assertEqual(mirror(parse_word("aB")).to_text(), "Ab")
        self.assertEqual(reverse(parse_word("aB")).to_text(), "Ba")

    def test_canonical_key(self):
        """Test that rotations and conjugations by cancellation share a key."""
        self.assertEqual(canonical_key(parse_word("Ba")), (3, ((1, 1), (2, -1))))
        self.assertEqual(canonical_key(parse_word("aB")), canonical_key(parse_word("Ba")))
        self.assertEqual(canonical_form(parse_word("cbaC")), canonical_form(parse_word("ba", 4)))

    def test_stabilize_destabilize(self):
        """Test that destabilization undoes stabilization of the same sign only."""
        w = parse_word("aaa")
        s = stabilize(w, 1)
        self.assertEqual(s.to_text(), "aaab")
        self.assertEqual(s.strands, 3)
        self.assertEqual(destabilize_syntactic(s, 1), w)
        self.assertIsNone(destabilize_syntactic(s, -1))
        self.assertEqual(destabilize_syntactic(stabilize(w, -1), -1), w)
        self.assertIsNone(destabilize_syntactic(parse_word("abab"), 1))

    def test_skein_triple(self):
        """Test plus, minus and zero resolutions."""
        plus, minus, zero = skein_triple(parse_word("aaa"), 1)
        self.assertEqual((plus.to_text(), minus.to_text(), zero.to_text()), ("aaa", "aAa", "aa"))
        with self.assertRaises(BraidWordError):
            skein_triple(parse_word("aaa"), 3)

    def test_linking_matrix(self):
        """Test the Hopf link, a two-full-twist link and a split link."""
        self.assertEqual(linking_matrix(parse_word("aa")), [[0, 1], [1, 0]])
        self.assertEqual(linking_matrix(parse_word("AAAA")), [[0, -2], [-2, 0]])
        self.assertEqual(linking_matrix(parse_word("", 2)), [[0, 0], [0, 0]])

    def test_cable_component_count(self):
        """Test gcd(p, k) with the k = 0 case."""
        self.assertEqual(cable_component_count(2, 1), 1)
        self.assertEqual(cable_component_count(2, 0), 2)
        self.assertEqual(cable_component_count(4, 6), 2)

    def test_move_records(self):
        """Test the (c, b) table of stabilization moves."""
        w = parse_word("aaa")
        plus = MoveRecord(MoveKind.STABILIZE, (1,), w, stabilize(w, 1))
        minus = MoveRecord(MoveKind.STABILIZE, (-1,), w, stabilize(w, -1))
        self.assertEqual(plus.expected_delta(), (1, 1))
        self.assertEqual(minus.expected_delta(), (-1, 1))
        self.assertTrue(plus.is_consistent())
        self.assertTrue(minus.is_consistent())
        bogus = MoveRecord(MoveKind.STABILIZE, (1,), w, stabilize(w, -1))
        self.assertFalse(bogus.is_consistent())
        shift = MoveRecord(MoveKind.CYCLIC_SHIFT, (1,), w, cyclic_shift(w, 1))
        self.assertTrue(shift.is_consistent())


class TestBraidWordProperties(unittest.TestCase):
    """Property tests for word operations."""

    @given(braid_words())
    @settings(max_examples=100, deadline=None)
    def test_reductions_preserve_invariants(self, w):
        """Test that reductions keep exponent sum and components."""
        for reduced in (free_reduce(w), cyclic_reduce(w), canonical_form(w)):
            self.assertEqual(reduced.exponent_sum(), w.exponent_sum())
            self.assertEqual(reduced.component_count(), w.component_count())

    @given(nonempty_braid_words())
    @settings(max_examples=100, deadline=None)
    def test_canonical_key_is_rotation_invariant(self, w):
        """Test that every rotation has the same canonical key."""
        for k in range(len(w)):
            self.assertEqual(canonical_key(cyclic_shift(w, k)), canonical_key(w))

    @given(braid_words())
    @settings(max_examples=50, deadline=None)
    def test_stabilization_bookkeeping(self, w):
        """Test the move table on random words and both signs."""
        for e in (1, -1):
            s = stabilize(w, e)
            self.assertEqual((s.exponent_sum() - w.exponent_sum(), s.strands - w.strands), (e, 1))
            self.assertEqual(s.component_count(), w.component_count())
            self.assertEqual(destabilize_syntactic(s, e), free_reduce(w))

    @given(braid_words())
    @settings(max_examples=50, deadline=None)
    def test_mirror_negates_exponent_sum(self, w):
        """Test c(mirror w) = -c(w)."""
        self.assertEqual(mirror(w).exponent_sum(), -w.exponent_sum())


if __name__ == '__main__':
    unittest.main()
