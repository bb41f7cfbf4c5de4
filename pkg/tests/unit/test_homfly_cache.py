import json
import tempfile
import unittest
from pathlib import Path

from src.domain.braid_word import parse_word
from src.domain.laurent import LaurentPoly2
from src.infrastructure.homfly_cache import CACHE_FILE_NAME, CACHE_FORMAT, HomflyCache, cache_key

TREFOIL = LaurentPoly2({(2, 0): 2, (4, 0): -1, (2, 2): 1})


class TestHomflyCache(unittest.TestCase):
    """Test suite for the persistent HOMFLYPT memo."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.directory = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_key_is_rotation_invariant(self):
        """Test that rotations share a key and strand counts do not."""
        self.assertEqual(cache_key(parse_word("aBaB")), cache_key(parse_word("BaBa")))
        self.assertEqual(cache_key(parse_word("aBaB")), "3:1,-2,1,-2")
        self.assertNotEqual(cache_key(parse_word("a")), cache_key(parse_word("a", 3)))

    def test_in_memory_cache(self):
        """Test get and put without a directory."""
        cache = HomflyCache("v1")
        self.assertIsNone(cache.get(parse_word("aaa")))
        cache.put(parse_word("aaa"), TREFOIL)
        self.assertEqual(cache.get(parse_word("aaa")), TREFOIL)
        self.assertEqual(len(cache), 1)
        cache.save()
        self.assertFalse((self.directory / CACHE_FILE_NAME).exists())

    def test_save_and_reload(self):
        """Test that a saved cache is read back by the same engine version."""
        cache = HomflyCache("v1", self.directory)
        cache.put(parse_word("aaa"), TREFOIL)
        cache.save()
        path = self.directory / CACHE_FILE_NAME
        self.assertTrue(path.exists())
        self.assertEqual(json.loads(path.read_text())["format"], CACHE_FORMAT)
        reloaded = HomflyCache("v1", self.directory)
        self.assertEqual(reloaded.get(parse_word("aaa")), TREFOIL)

    def test_other_engine_version_is_ignored(self):
        """Test that entries written by another version are not used."""
        cache = HomflyCache("v1", self.directory)
        cache.put(parse_word("aaa"), TREFOIL)
        cache.save()
        with self.assertLogs("src.infrastructure.homfly_cache", level="WARNING"):
            other = HomflyCache("v2", self.directory)
        self.assertEqual(len(other), 0)

    def test_corrupt_file_is_ignored(self):
        """Test that garbage on disk leaves an empty cache."""
        (self.directory / CACHE_FILE_NAME).write_text("{not json")
        with self.assertLogs("src.infrastructure.homfly_cache", level="WARNING"):
            cache = HomflyCache("v1", self.directory)
        self.assertEqual(len(cache), 0)


if __name__ == '__main__':
    unittest.main()
