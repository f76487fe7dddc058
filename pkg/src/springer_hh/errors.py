"""Exception types shared by every module."""

from __future__ import annotations


class ParameterError(ValueError):
    """An argument is outside the domain of an operation."""


class ResourceError(RuntimeError):
    """A configured size bound was exceeded before a computation finished."""

    def __init__(self, message: str, partial_count: int = 0):
        super().__init__(message)
        self.partial_count = partial_count
