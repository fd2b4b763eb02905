"""Exception hierarchy shared by the library and the CLI."""


class FanoconeError(Exception):
    """Base class for all library errors."""


class SyntaxErrorInSpec(FanoconeError, ValueError):
    """A class, space or variety string could not be parsed.

    ``token`` holds the offending fragment.
    """

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class DomainError(FanoconeError, ValueError):
    """A mathematically invalid request (codimension mismatch, class outside the box...)."""


class InvalidIndex(DomainError):
    pass


class Underdetermined(DomainError):
    pass


class NoSolution(DomainError):
    pass


class MissingChiEntry(DomainError):
    def __init__(self, label, twist):
        super().__init__(f"missing Euler characteristic entry for ({label}, {twist})")
        self.label = label
        self.twist = twist


class LedgerInconsistency(DomainError):
    pass
