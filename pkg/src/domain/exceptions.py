"""
Error hierarchy for the braid-closure toolkit.

Value problems also derive from the builtin ValueError so callers that only
know about ValueError keep working.
"""


class BraidMFWError(Exception):
    """Base class for every error raised by this package."""


class BraidWordError(BraidMFWError, ValueError):
    """A braid word could not be parsed or an index is out of range."""


class BandWordError(BraidMFWError, ValueError):
    """A band word is malformed or violates a family constraint."""


class PolynomialError(BraidMFWError, ValueError):
    """A polynomial operation is undefined for the given input."""


class ConstructionError(BraidMFWError, ValueError):
    """A link construction received parameters it cannot build."""


class DatasetError(BraidMFWError, ValueError):
    """A knot table is missing or corrupt."""


class SizeLimitExceeded(BraidMFWError, RuntimeError):
    """A computation would exceed the configured size limits."""

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what} = {value} exceeds the configured limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class MFWViolation(BraidMFWError, AssertionError):
    """An engine produced a polynomial that breaks the MFW inequality or the cache contract."""
