"""Exception types shared across the library."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size/digit/node cap."""


class MalformedCounterError(ValueError):
    """A ranked word failed structural validation as a higher-order counter.

    ``position`` is the index of the first offending symbol.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


class RegexSyntaxError(ValueError):
    """A regular expression could not be parsed."""
