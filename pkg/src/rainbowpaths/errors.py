"""Exception types shared by the library and the command line."""


class RainbowPathsError(Exception):
    pass


class InvalidParameter(RainbowPathsError, ValueError):
    """An argument violates the documented domain of an operation."""


class OutOfRange(InvalidParameter):
    """Parameters fall outside the range where a result is defined or supported."""


class Unsupported(OutOfRange):
    pass


class Refused(OutOfRange):
    """A brute-force routine declined an input beyond its hard-coded budget."""


class PreconditionViolation(RainbowPathsError, ValueError):
    pass


class FormatError(RainbowPathsError, ValueError):
    """Malformed edge-colored graph document."""
