"""
Knot tables: CSV ingestion, validation and the bundled five-knot dataset.

Header: name,braid_word,braid_index,expected_c,expected_deficit
"""
import csv
import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.domain.braid_word import BraidWord
from src.domain.exceptions import BraidWordError, DatasetError

logger = logging.getLogger(__name__)

CSV_HEADER = ("name", "braid_word", "braid_index", "expected_c", "expected_deficit")
BUNDLED_TABLE = Path(__file__).parent / "data" / "five_knots.csv"
TABLE_FILE_NAME = "knot_table.csv"
DEFAULT_DATA_DIR = Path("braidmfw_data")


class KnotTableEntry(BaseModel):
    name: str = Field(min_length=1)
    braid_word: str = Field(min_length=0)
    braid_index: int = Field(ge=1, description="Claimed braid index of the knot.")
    expected_c: Optional[int] = None
    expected_deficit: Optional[str] = Field(default=None, description="Exact rational, e.g. '1' or '1/2'.")

    @field_validator("expected_c", "expected_deficit", mode="before")
    @classmethod
    def _blank_is_none(cls, value):
        if isinstance(value, str) and not value.strip():
            return None
        return value

    @field_validator("expected_deficit")
    @classmethod
    def _rational(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return None
        try:
            return str(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"expected_deficit {value!r} is not a rational number") from None

    @model_validator(mode="after")
    def _word_fits_index(self) -> 'KnotTableEntry':
        try:
            word = BraidWord.parse(self.braid_word)
        except BraidWordError as e:
            raise ValueError(f"braid_word {self.braid_word!r}: {e}") from None
        if word.strands < self.braid_index:
            raise ValueError(f"{self.name}: word has {word.strands} strands, fewer than braid index {self.braid_index}")
        return self

    def word(self) -> BraidWord:
        """The parsed word, padded to at least braid_index strands."""
        parsed = BraidWord.parse(self.braid_word)
        return BraidWord(max(parsed.strands, self.braid_index), parsed.letters)

    def deficit(self) -> Optional[Fraction]:
        return Fraction(self.expected_deficit) if self.expected_deficit is not None else None


def read_table(path: Path) -> List[KnotTableEntry]:
    """
    Loads and validates a knot table.

    Raises:
        DatasetError: If the file is missing, has the wrong header or a bad row.
    """
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"knot table {path} does not exist")
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != CSV_HEADER:
                raise DatasetError(f"{path}: header must be {','.join(CSV_HEADER)}, got {reader.fieldnames}")
            entries = []
            for line, row in enumerate(reader, start=2):
                try:
                    entries.append(KnotTableEntry(**row))
                except ValidationError as e:
                    raise DatasetError(f"{path}:{line}: {e.errors()[0]['msg']}") from None
    except (OSError, UnicodeDecodeError, csv.Error) as e:
        raise DatasetError(f"cannot read knot table {path}: {e}") from None
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise DatasetError(f"{path}: duplicate knot names")
    logger.info("read %d knots from %s", len(entries), path)
    return entries


def write_table(entries: Iterable[KnotTableEntry], path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for e in entries:
            writer.writerow([e.name, e.braid_word, e.braid_index,
                             "" if e.expected_c is None else e.expected_c,
                             e.expected_deficit or ""])


def data_dir(override: Optional[Path] = None) -> Path:
    if override is not None:
        return Path(override)
    return Path(os.getenv("BRAIDMFW_DATA_DIR", str(DEFAULT_DATA_DIR)))


def ingest_table(source: Path, directory: Optional[Path] = None) -> List[KnotTableEntry]:
    """Validates a CSV and stores it as the local dataset."""
    entries = read_table(source)
    target = data_dir(directory) / TABLE_FILE_NAME
    write_table(entries, target)
    logger.info("stored %d knots in %s", len(entries), target)
    return entries


def load_default_table(directory: Optional[Path] = None) -> List[KnotTableEntry]:
    """The ingested local dataset when present, else the bundled five-knot table."""
    local = data_dir(directory) / TABLE_FILE_NAME
    return read_table(local if local.exists() else BUNDLED_TABLE)


def load_bundled_table() -> List[KnotTableEntry]:
    return read_table(BUNDLED_TABLE)
