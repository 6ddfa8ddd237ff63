"""Exception types shared across the package."""

from __future__ import annotations


class CatElementsError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(CatElementsError, ValueError):
    """Dangling or ill-typed identifiers in an input table."""

    def __init__(self, message: str, ids=()):
        super().__init__(message)
        self.ids = tuple(ids)


class CompositionError(CatElementsError, ValueError):
    """Attempt to compose cells whose boundaries do not match."""


class ConsistencyError(CatElementsError, RuntimeError):
    """An internal invariant failed; indicates a bug upstream."""


class RangeError(CatElementsError, ValueError):
    """Requested degree lies outside the trustworthy truncation range."""


class ResourceLimitError(CatElementsError, MemoryError):
    """A construction would exceed the configured memory guard."""


class InputValidationError(CatElementsError, ValueError):
    """An input document failed schema or axiom validation.

    ``schema_path`` locates a schema failure inside the document; ``report``
    holds the axiom violations when the document parsed but is not a valid
    structure.
    """

    def __init__(self, message: str, schema_path: str = "", report=None):
        super().__init__(message)
        self.schema_path = schema_path
        self.report = report
