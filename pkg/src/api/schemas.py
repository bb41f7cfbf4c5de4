"""
JSON models for everything the CLI emits with --json.
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.domain.braid_word import MAX_TEXT_GENERATOR, BraidWord

RUN_REPORT_SCHEMA = "braidmfw.run/1"


# --- Pydantic Models ---

class BraidWordModel(BaseModel):
    strands: int = Field(ge=1, description="Number of strands.")
    word: Union[str, List[int]] = Field(description="Letter text, or signed generator indices beyond 'y'.")

    @classmethod
    def from_word(cls, w: BraidWord) -> 'BraidWordModel':
        if w.strands - 1 > MAX_TEXT_GENERATOR:
            return cls(strands=w.strands, word=w.to_int_list())
        return cls(strands=w.strands, word=w.to_text())

    def to_word(self) -> BraidWord:
        """
        Raises:
            BraidWordError: If the stored word does not fit the strand count.
        """
        if isinstance(self.word, str):
            return BraidWord.parse(self.word, self.strands)
        return BraidWord.from_int_list(self.word, self.strands)


class MFWReportModel(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    word: BraidWordModel
    c: int
    b: int = Field(ge=1)
    strands: int = Field(ge=1)
    d_minus: int
    d_plus: int
    lower_bound_b: int
    D_plus_rep: int = Field(ge=0)
    D_minus_rep: int = Field(ge=0)
    deficit_at_b: str = Field(description="Exact rational, e.g. '1' or '3/2'.")
    beta: int
    gamma: int
    max_c_at_b: int
    min_c_at_b: int

    @field_validator("deficit_at_b", mode="before")
    @classmethod
    def _fraction_text(cls, value: Any) -> str:
        if isinstance(value, (Fraction, int)):
            return str(value)
        return str(Fraction(str(value)))

    @classmethod
    def from_report(cls, report) -> 'MFWReportModel':
        values = report.to_dict()
        values["word"] = BraidWordModel.from_word(report.word)
        return cls(**values)

    def deficit(self) -> Fraction:
        return Fraction(self.deficit_at_b)


class ThmACertificateModel(BaseModel):
    word: BraidWordModel
    position: int = Field(ge=0)
    role: str = Field(pattern=r"^[+\-0]$")
    p: int = Field(ge=0)
    n: int = Field(ge=0)
    D_plus_lower: int = Field(ge=0)
    D_minus_lower: int = Field(ge=0)
    exhausted: bool
    witnesses: Dict[str, Dict[str, List[str]]]

    @classmethod
    def from_certificate(cls, cert) -> 'ThmACertificateModel':
        return cls(word=BraidWordModel.from_word(cert.word), position=cert.position, role=cert.role,
                   p=cert.p, n=cert.n, D_plus_lower=cert.D_plus_lower, D_minus_lower=cert.D_minus_lower,
                   exhausted=cert.exhausted, witnesses=cert.witnesses())


class ExpectationModel(BaseModel):
    name: str
    expected: Any = None
    actual: Any = None
    passed: bool


class RunReport(BaseModel):
    schema_id: str = Field(default=RUN_REPORT_SCHEMA, alias="schema")
    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    results: Dict[str, Any] = Field(default_factory=dict)
    engine_versions: Dict[str, str] = Field(default_factory=dict)
    timings: Dict[str, float] = Field(default_factory=dict, description="Wall-clock seconds per step.")
    expectations: List[ExpectationModel] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)

    def expect(self, name: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> bool:
        """Records an expectation; equality decides unless `passed` is given."""
        ok = (expected == actual) if passed is None else passed
        self.expectations.append(ExpectationModel(name=name, expected=expected, actual=actual, passed=ok))
        return ok

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.expectations)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> 'RunReport':
        return cls.model_validate_json(text)


__all__ = [
    "BraidWordModel", "MFWReportModel", "ThmACertificateModel", "ExpectationModel", "RunReport",
    "RUN_REPORT_SCHEMA",
]
