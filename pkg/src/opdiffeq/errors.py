"""Exception types raised by the library."""


class OpDiffError(Exception):
    """Base class for all library errors."""


class NegativeIndex(OpDiffError, ValueError):
    """An ordered product would evaluate a family at a negative index."""


class DimensionMismatch(OpDiffError, ValueError):
    pass


class UnresolvedIndex(OpDiffError, LookupError):
    """An operator family has no map registered for the requested index."""


class InvalidConfig(OpDiffError, ValueError):
    pass


class SchemaError(OpDiffError, ValueError):
    """A JSON problem description does not match the expected schema."""
