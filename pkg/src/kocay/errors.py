"""Exception hierarchy shared by all kocay modules."""


class KocayError(Exception):
    """Base class for every error raised by this package."""


class InputError(KocayError, ValueError):
    """An argument is malformed or out of range."""


class PreconditionError(InputError):
    """Arguments are well formed but violate an operation's precondition."""


class ConsistencyError(KocayError, ArithmeticError):
    """An exact identity that must hold did not (e.g. a non-integral division).

    Raised when deck-only arithmetic cannot be completed exactly, which
    signals a corrupted or inconsistent deck rather than a user typo.
    """


class Graph6Error(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
