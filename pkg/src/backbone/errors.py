class PreconditionError(ValueError):
    """An operation was called outside the hypothesis it is guaranteed under."""


class InvariantError(AssertionError):
    """An internal guarantee failed.  This is always a bug, never an input problem."""
