"""
Process-wide HOMFLYPT service: settings, both engines and the shared cache.
"""
import logging
import threading
from typing import Optional, Tuple

from src.domain.braid_word import BraidWord, free_reduce
from src.domain.laurent import LaurentPoly2, v_degrees
from src.infrastructure.homfly_cache import HomflyCache
from .hecke import HECKE_ENGINE_VERSION, HeckeEngine
from .homflypt import REFERENCE_ENGINE_VERSION, ReferenceEngine, check_mfw, check_size, split_simplify
from .settings import AUTO_REFERENCE_LETTERS, EngineChoice, EngineSettings

logger = logging.getLogger(__name__)

ENGINE_VERSION = f"{REFERENCE_ENGINE_VERSION}+{HECKE_ENGINE_VERSION}"


class EngineSingletonMeta(type):
    """
    Metaclass for creating a Singleton. Ensures only one EngineManager exists.
    """
    _instances = {}
    _lock = threading.Lock()

    def __call__(cls, *args, **kwargs):
        with cls._lock:
            if cls not in cls._instances:
                cls._instances[cls] = super().__call__(*args, **kwargs)
        return cls._instances[cls]


class EngineManager(metaclass=EngineSingletonMeta):
    """
    Owns the engines and the memo cache so that every command in the process
    shares computed polynomials.
    """

    def __init__(self, settings: Optional[EngineSettings] = None):
        self.configure(settings or EngineSettings.from_env())

    def configure(self, settings: EngineSettings) -> None:
        """Replaces the settings and rebuilds engines and cache."""
        self.settings = settings
        self.reference = ReferenceEngine()
        self.hecke = HeckeEngine(progress=settings.progress)
        self.cache = HomflyCache(ENGINE_VERSION, settings.cache_dir)
        logger.info("HOMFLYPT engines configured: engine=%s, limits=%d strands/%d letters",
                    settings.engine.value, settings.max_strands, settings.max_letters)

    def _pick_engine(self, word: BraidWord):
        choice = self.settings.engine
        if choice is EngineChoice.REFERENCE:
            return self.reference
        if choice is EngineChoice.HECKE:
            return self.hecke
        _, pieces = split_simplify(word)
        longest = max((len(p.letters) for p in pieces), default=0)
        return self.reference if longest <= AUTO_REFERENCE_LETTERS else self.hecke

    def homfly(self, word: BraidWord, engine: Optional[EngineChoice] = None) -> LaurentPoly2:
        """
        HOMFLYPT polynomial of the closure of word.

        Raises:
            SizeLimitExceeded: If the reduced word is beyond the configured limits.
            MFWViolation: If the result breaks the MFW inequality for this word.
        """
        check_size(free_reduce(word), self.settings.max_strands, self.settings.max_letters)
        cached = self.cache.get(word)
        if cached is not None and engine is None:
            check_mfw(word, cached)
            return cached
        if engine is EngineChoice.REFERENCE:
            chosen = self.reference
        elif engine is EngineChoice.HECKE:
            chosen = self.hecke
        else:
            chosen = self._pick_engine(word)
        logger.debug("computing HOMFLYPT of %s with %s", word, chosen.version)
        result = chosen.polynomial(word)
        check_mfw(word, result)
        self.cache.put(word, result)
        return result

    def save(self) -> None:
        self.cache.save()


def homfly(word: BraidWord, engine: Optional[EngineChoice] = None) -> LaurentPoly2:
    return EngineManager().homfly(word, engine)


def homfly_degrees(word: BraidWord) -> Tuple[int, int]:
    """(d_minus, d_plus) of the HOMFLYPT polynomial of the closure."""
    return v_degrees(homfly(word))
