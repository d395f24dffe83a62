"""Exception types shared across the package.

The CLI maps these to exit codes: ParseError -> 1, ValidationError -> 2,
CapExceeded -> 3.  Plain TypeError/ValueError raised by library functions
are treated as validation failures as well.
"""


class ParseError(ValueError):
    """Malformed input text (bad JSON, bad expression syntax)."""


class ValidationError(ValueError):
    """Well-formed input that violates a documented constraint."""


class CapExceeded(RuntimeError):
    """Requested computation is beyond the documented size caps."""
