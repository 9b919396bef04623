"""Shared exception types."""


class UsageError(ValueError):
    """Raised when arguments violate a documented precondition."""


class CapabilityError(RuntimeError):
    """Raised when an exact computation exceeds its documented size cap."""


class Graph6Error(UsageError):
    """Raised on malformed graph6 text; carries the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset
