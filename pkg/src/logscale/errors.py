"""Exception types raised by the toolkit.

Everything derives from ``LogScaleError`` (itself a ``ValueError``) so callers
can catch domain problems in one place while I/O failures stay ``OSError``.
"""


class LogScaleError(ValueError):
    pass


class InvalidConfigError(LogScaleError):
    pass


class InvalidIndexError(LogScaleError):
    pass


class InvalidRangeError(LogScaleError):
    pass


class ZeroBeatError(LogScaleError):
    """Two identical tones have no beat."""


class InvalidPairError(LogScaleError):
    pass


class InvalidOrderError(LogScaleError):
    pass


class InvalidSetError(LogScaleError):
    pass


class InvalidSearchError(LogScaleError):
    pass


class NyquistError(LogScaleError):
    """A note frequency is at or above half the sample rate."""

    def __init__(self, message, event=None):
        super().__init__(message)
        self.event = event


class NoBeatFoundError(LogScaleError):
    pass


class ScoreParseError(LogScaleError):
    """Raised with every problem found in a score, not just the first one."""

    def __init__(self, errors):
        self.errors = list(errors)
        lines = "\n".join(str(e) for e in self.errors)
        super().__init__(f"{len(self.errors)} error(s) in score:\n{lines}")
