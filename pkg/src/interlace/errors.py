"""Exception hierarchy shared by the library and the command line."""


class InterlaceError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(InterlaceError, ValueError):
    pass


class PreconditionError(InterlaceError):
    """An input does not satisfy a documented precondition."""


class GateViolationError(PreconditionError):
    """The construction gate (leading family coefficient must be negative) fails."""


class NoAdmissibleChoiceError(InterlaceError):
    pass


class ConstructionFailedError(InterlaceError):
    """A construction stage produced a certified empty admissible interval."""

    def __init__(self, message, stage=None, interval=None):
        super().__init__(message)
        self.stage = stage
        self.interval = interval


class InvalidCertificateError(InterlaceError):
    """A bracket does not isolate exactly one root of its defining polynomial."""


class CertificationError(InterlaceError):
    """An internal cross-check disagreed with a certified result."""


class ParseError(InterlaceError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
