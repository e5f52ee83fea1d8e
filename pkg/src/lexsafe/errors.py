"""Exception hierarchy shared by every backend and the CLI."""


class LexsafeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInstance(LexsafeError, ValueError):
    """Malformed or inconsistent instance data."""


class InvalidPreference(InvalidInstance):
    """A preference is not a strict total order over the outcomes."""

    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class InvalidMap(InvalidInstance):
    """A Jordan map whose two connectivity searches do not have exactly one winner."""


class NotTight(LexsafeError):
    """Neither player wins a +-1 game, so the game form is not tight.

    ``partition`` holds the offending Alice set (an ``OutcomeSet``) when known.
    """

    def __init__(self, message, partition=None):
        super().__init__(message)
        self.partition = partition


class SizeLimitExceeded(LexsafeError):
    """A brute-force expansion or enumeration would exceed its configured limit."""


class InternalError(LexsafeError, RuntimeError):
    """An invariant guaranteed by the theory failed; indicates a backend bug."""
