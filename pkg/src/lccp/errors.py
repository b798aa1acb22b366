"""Exception types raised by the lccp package."""


class LccpError(Exception):
    """Base class for all errors raised by this package."""


class InputEmpty(LccpError, ValueError):
    """An empty word or array was given where a non-empty one is required."""


class RangeInvalid(LccpError, IndexError):
    """A range query with x > y or bounds outside the array."""


class PositionOutOfRange(LccpError, IndexError):
    """A word position outside 1..n."""


class NotATransitColumn(LccpError, LookupError):
    """Neither index of a table lookup is a transit position or n+1."""


class IndexFormatError(LccpError, ValueError):
    """A serialized index is malformed or inconsistent."""
