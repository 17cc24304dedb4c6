"""
Exception hierarchy for symchar.
"""


class SymcharError(Exception):
    """Base class for every error raised by symchar."""


class PartitionParseError(SymcharError, ValueError):
    """Partition text that does not follow the `v` / `v^k` grammar."""

    def __init__(self, token: str, reason: str):
        self.token = token
        super().__init__(f"Invalid partition token {token!r}: {reason}")


class DomainError(SymcharError, ValueError):
    """An operation was called outside its domain."""


class ConsistencyError(SymcharError, RuntimeError):
    """An internal invariant failed; signals a bug, never bad input."""
