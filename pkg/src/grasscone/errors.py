"""Exception types shared across the package."""


class GrassconeError(Exception):
    """Base class for every error raised by grasscone."""


class ValidationError(GrassconeError, ValueError):
    """Input data violates a structural invariant.

    ``field`` names the offending field (a dotted/indexed path such as
    ``blocks[1]``) when one is known.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class RangeError(GrassconeError, ValueError):
    """An index argument (usually ``r``) lies outside its admissible range."""
