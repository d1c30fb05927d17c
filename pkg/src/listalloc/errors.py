"""Shared exception types."""


class CapExceeded(Exception):
    """An enumeration grew past the configured state cap.

    Raised instead of returning a possibly wrong verdict; callers map it to a
    distinct "cap-exceeded" outcome.
    """


class FormatError(Exception):
    """An instance or witness file could not be parsed."""
