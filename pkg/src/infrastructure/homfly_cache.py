"""
Persistent memo for HOMFLYPT results, keyed by cyclic canonical word.

The file is JSON with a self-describing header. A file written by another
engine version, or one that fails validation, is ignored with a warning.
"""
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Dict, Optional

from pydantic import BaseModel, ValidationError

from src.domain.braid_word import BraidWord, canonical_key
from src.domain.laurent import LaurentPoly2

logger = logging.getLogger(__name__)

CACHE_FORMAT = "braidmfw-homfly-cache"
CACHE_FILE_NAME = "homfly_cache.json"


class CacheFileModel(BaseModel):
    format: str
    engine_version: str
    entries: Dict[str, str]


def cache_key(word: BraidWord) -> str:
    strands, letters = canonical_key(word)
    return f"{strands}:" + ",".join(str(i * e) for i, e in letters)


class HomflyCache:
    """
    A single atomic map from canonical words to polynomials. Concurrent
    writers always store identical values, so last-writer-wins is fine.
    """

    def __init__(self, engine_version: str, directory: Optional[Path] = None):
        self.engine_version = engine_version
        self.path: Optional[Path] = Path(directory) / CACHE_FILE_NAME if directory else None
        self._entries: Dict[str, LaurentPoly2] = {}
        self._lock = threading.Lock()
        self._dirty = False
        if self.path is not None:
            self.load()

    def get(self, word: BraidWord) -> Optional[LaurentPoly2]:
        with self._lock:
            return self._entries.get(cache_key(word))

    def put(self, word: BraidWord, polynomial: LaurentPoly2) -> None:
        key = cache_key(word)
        with self._lock:
            if self._entries.get(key) != polynomial:
                self._entries[key] = polynomial
                self._dirty = True

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def load(self) -> int:
        """Reads the cache file if present; returns the number of entries loaded."""
        if self.path is None or not self.path.exists():
            return 0
        try:
            model = CacheFileModel.model_validate_json(self.path.read_text(encoding="utf-8"))
            if model.format != CACHE_FORMAT or model.engine_version != self.engine_version:
                logger.warning("ignoring cache %s written by %s/%s", self.path, model.format, model.engine_version)
                return 0
            loaded = {k: LaurentPoly2.from_text(v) for k, v in model.entries.items()}
        except (ValidationError, ValueError, OSError) as e:
            logger.warning("ignoring corrupt cache %s: %s", self.path, e)
            return 0
        with self._lock:
            self._entries.update(loaded)
        logger.info("loaded %d cached polynomials from %s", len(loaded), self.path)
        return len(loaded)

    def save(self) -> None:
        """Writes the cache atomically (temp file + rename) when it changed."""
        if self.path is None or not self._dirty:
            return
        with self._lock:
            model = CacheFileModel(format=CACHE_FORMAT, engine_version=self.engine_version,
                                   entries={k: p.to_text() for k, p in self._entries.items()})
            self._dirty = False
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(model.model_dump_json())
        os.replace(tmp, self.path)
        logger.info("saved %d polynomials to %s", len(model.entries), self.path)
