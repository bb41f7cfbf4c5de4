"""
Engine configuration.

Defaults live in module constants; the environment and then CLI flags override them.
"""
import os
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

DEFAULT_MAX_STRANDS: int = 8
DEFAULT_MAX_LETTERS: int = 60
DEFAULT_SEARCH_DEPTH: int = 6
DEFAULT_SEARCH_QUEUE: int = 100_000
DEFAULT_BAND_BUDGET: int = 20_000

# words at most this long (after Markov simplification) go to the skein engine under "auto"
AUTO_REFERENCE_LETTERS: int = 14


class EngineChoice(str, Enum):
    AUTO = "auto"
    REFERENCE = "reference"
    HECKE = "hecke"


class EngineSettings(BaseModel):
    max_strands: int = Field(default=DEFAULT_MAX_STRANDS, ge=1, description="Largest strand count the HOMFLYPT engines accept.")
    max_letters: int = Field(default=DEFAULT_MAX_LETTERS, ge=0, description="Largest word length the HOMFLYPT engines accept.")
    engine: EngineChoice = EngineChoice.AUTO
    cache_dir: Optional[Path] = Field(default=None, description="Directory for the persistent HOMFLYPT memo; None disables it.")
    search_depth: int = Field(default=DEFAULT_SEARCH_DEPTH, ge=0)
    search_queue: int = Field(default=DEFAULT_SEARCH_QUEUE, ge=1)
    band_search_budget: int = Field(default=DEFAULT_BAND_BUDGET, ge=1)
    progress: bool = True

    @classmethod
    def from_env(cls, **overrides) -> 'EngineSettings':
        """
        Builds settings from BRAIDMFW_* environment variables, then applies
        keyword overrides that are not None.
        """
        values = {}
        env_map = {
            "max_strands": ("BRAIDMFW_MAX_STRANDS", int),
            "max_letters": ("BRAIDMFW_MAX_LETTERS", int),
            "engine": ("BRAIDMFW_ENGINE", str),
            "cache_dir": ("BRAIDMFW_CACHE_DIR", Path),
            "progress": ("BRAIDMFW_PROGRESS", lambda s: s.strip().lower() not in ("0", "false", "no")),
        }
        for field, (var, convert) in env_map.items():
            raw = os.getenv(var)
            if raw:
                values[field] = convert(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
