"""Exception hierarchy shared by all qk modules."""


class QkError(Exception):
    """Base class for domain errors; the CLI maps these to exit status 1."""


class ParseError(QkError):
    def __init__(self, offset: int, expected: str, found: str = "end of input"):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {offset}: expected {expected}, found {found}")


class SizeLimitExceeded(QkError):
    pass


class MissingRename(QkError):
    pass


class WrongVariables(QkError):
    pass


class MalformedTable(QkError):
    pass


class NotAGroup(QkError):
    pass


class NotARack(QkError):
    pass


class UnboundGenerator(QkError):
    pass


class TableFileError(QkError):
    pass


class InternalInvariantViolation(AssertionError):
    """Raised when two independent computations that must agree do not.

    This is a bug indicator, never an expected outcome, so it derives from
    AssertionError rather than QkError.
    """
